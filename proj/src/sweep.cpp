#include "crn/sweep.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "crn/basic_chain.hpp"
#include "crn/complexity.hpp"
#include "crn/error.hpp"
#include "crn/reservation_chain.hpp"

namespace crn {

std::string_view to_string(SweepAxis a) noexcept { return a == SweepAxis::LambdaS ? "lambda_s" : "mu_s"; }

SweepAxis axis_from_string(std::string_view s) {
    if (s == "lambda_s") return SweepAxis::LambdaS;
    if (s == "mu_s") return SweepAxis::MuS;
    throw ValidationError("unknown sweep axis '" + std::string(s) + "'");
}

double SweepSpec::value_at(int idx) const {
    if (idx == steps - 1) return stop;
    return start + (stop - start) * idx / (steps - 1);
}

void validate_sweep(const SweepSpec& s) {
    if (!(s.start < s.stop)) throw ValidationError("sweep start must be below stop");
    if (!(s.start > 0.0)) throw ValidationError("sweep start must be positive");
    if (s.steps < 2) throw ValidationError("sweep needs at least 2 steps");
    if (s.models.empty()) throw ValidationError("sweep selects no model");
    if (s.with_simulation) validate_sim_config(s.sim);
}

MetricsReport evaluate(const SystemParams& p, ModelKind model, double tol) {
    if (model == ModelKind::Basic) {
        const auto space = enumerate_basic(p);
        const auto pi = solve_direct(build_basic_generator(p, space), tol).pi;
        return compute_metrics(space, pi, p);
    }
    const auto space = enumerate_reservation(p);
    const auto pi = solve_direct(build_reservation_generator(p, space), tol).pi;
    return compute_metrics(space, pi, p);
}

namespace {

SystemParams point_params(const SystemParams& base, const SweepSpec& spec, int idx) {
    SystemParams p = base;
    (spec.axis == SweepAxis::LambdaS ? p.lambda_s : p.mu_s) = spec.value_at(idx);
    return validate_params(p);
}

void run_parallel(std::size_t jobs, unsigned workers, const std::function<void(std::size_t)>& job) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs)));
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t j = w; j < jobs; j += workers) {
                try {
                    job(j);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);  // first failing grid point in grid order
}

struct ColumnGroup {
    const char* file;
    std::vector<std::size_t> columns;  // indices into metric_columns()
};

const std::vector<ColumnGroup>& column_groups() {
    static const std::vector<ColumnGroup> groups = {
        {"capacity.csv", {0, 1, 2}},
        {"utilization.csv", {3}},
        {"blocking.csv", {4, 5, 6}},
        {"handoff.csv", {7, 8, 9}},
    };
    return groups;
}

void write_group(const std::filesystem::path& path, const ColumnGroup& group, const SweepResult& result,
                 bool with_sim) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const auto& names = metric_columns();
    out << "model,lambda_s,mu_s";
    for (auto c : group.columns) out << ',' << names[c];
    if (with_sim) {
        for (auto c : group.columns) out << ",sim_" << names[c];
        for (auto c : group.columns) out << ",ci_" << names[c];
    }
    out << '\n';
    for (const auto& row : result.rows) {
        const auto& a = row.analytical;
        out << to_string(a.model) << ',' << format_real(a.lambda_s) << ',' << format_real(a.mu_s);
        const auto values = a.values();
        for (auto c : group.columns) {
            out << ',';
            if (values[c]) out << format_real(*values[c]);
        }
        if (with_sim) {
            for (auto c : group.columns) {
                out << ',';
                if (row.simulated && row.simulated->metrics[c]) out << format_real(row.simulated->metrics[c]->mean);
            }
            for (auto c : group.columns) {
                out << ',';
                if (row.simulated && row.simulated->metrics[c])
                    out << format_real(row.simulated->metrics[c]->ci_half_width);
            }
        }
        out << '\n';
    }
}

}  // namespace

SweepResult run_sweep(const SystemParams& base, const SweepSpec& spec) {
    validate_sweep(spec);
    validate_params(base);

    const std::size_t points = static_cast<std::size_t>(spec.steps);
    SweepResult result;
    result.rows.resize(spec.models.size() * points);
    run_parallel(result.rows.size(), spec.workers, [&](std::size_t job) {
        const auto model = spec.models[job / points];
        const int idx = static_cast<int>(job % points);
        const auto p = point_params(base, spec, idx);
        try {
            result.rows[job].analytical = evaluate(p, model, spec.tol);
            if (spec.with_simulation) result.rows[job].simulated = simulate(p, model, spec.sim);
        } catch (const NumericalError& e) {
            throw NumericalError("sweep point " + std::string(to_string(model)) + " " +
                                 std::string(to_string(spec.axis)) + "=" + format_real(spec.value_at(idx)) + ": " +
                                 e.what());
        }
    });
    return result;
}

nlohmann::json sweep_manifest(const SystemParams& base, const SweepSpec& spec) {
    nlohmann::json models = nlohmann::json::array();
    for (auto m : spec.models) models.push_back(std::string(to_string(m)));
    nlohmann::json grid = nlohmann::json::array();
    for (int idx = 0; idx < spec.steps; ++idx) grid.push_back(spec.value_at(idx));

    nlohmann::json j;
    j["tool"] = "crn-model";
    j["version"] = kToolVersion;
    j["params"] = params_to_json(base);
    j["sweep"] = {{"axis", std::string(to_string(spec.axis))},
                  {"start", spec.start},
                  {"stop", spec.stop},
                  {"steps", spec.steps},
                  {"grid", grid},
                  {"models", models}};
    j["solver"] = {{"method", "direct"}, {"tol", spec.tol}};
    if (spec.with_simulation) {
        j["simulation"] = {{"horizon", spec.sim.horizon},
                           {"warmup", spec.sim.warmup},
                           {"replications", spec.sim.replications},
                           {"seed", spec.sim.seed}};
    } else {
        j["simulation"] = nullptr;
    }
    nlohmann::json files = nlohmann::json::array();
    for (const auto& g : column_groups()) files.push_back(g.file);
    j["files"] = files;
    return j;
}

SweepResult run_sweep(const SystemParams& base, const SweepSpec& spec, const std::filesystem::path& out_dir) {
    auto result = run_sweep(base, spec);
    std::filesystem::create_directories(out_dir);
    for (const auto& g : column_groups()) write_group(out_dir / g.file, g, result, spec.with_simulation);
    std::ofstream manifest(out_dir / "manifest.json", std::ios::binary);
    manifest << sweep_manifest(base, spec).dump(2) << '\n';
    return result;
}

std::vector<ComplexityRow> report_complexity(const SystemParams& base, int m_from, int m_to) {
    if (m_from < 0 || m_to < m_from) throw ValidationError("invalid M range");
    std::vector<ComplexityRow> rows;
    for (int M = m_from; M <= m_to; ++M) {
        ComplexityRow r;
        r.M = M;
        r.formula_basic = state_count_basic(M);
        r.enumerated_basic = static_cast<std::int64_t>(enumerate_basic(M, std::max(base.k, M)).size());
        r.formula_prop = state_count_reservation(M);
        r.formula_prop_general = state_count_reservation(M, base.M_rp);

        SystemParams p = base;
        p.M = M;
        try {
            validate_params(p);
            r.enumerated_prop = static_cast<std::int64_t>(enumerate_reservation(p).size());
        } catch (const ValidationError&) {
        }
        const double cube = static_cast<double>(M) * M * M;
        if (M > 0) {
            r.ratio_basic = r.enumerated_basic / (cube / 6.0);
            if (r.enumerated_prop) r.ratio_prop = *r.enumerated_prop / (cube / 3.0);
        }
        rows.push_back(r);
    }
    return rows;
}

void write_complexity_table(std::ostream& os, const std::vector<ComplexityRow>& rows) {
    os << "M,formula_basic,enumerated_basic,basic_match,ratio_basic,formula_prop,formula_prop_general,"
          "enumerated_prop,prop_match,prop_diff,ratio_prop\n";
    for (const auto& r : rows) {
        os << r.M << ',' << r.formula_basic << ',' << r.enumerated_basic << ','
           << (r.formula_basic == r.enumerated_basic ? "match" : "mismatch") << ',' << format_real(r.ratio_basic)
           << ',' << r.formula_prop << ',' << r.formula_prop_general << ',';
        if (r.enumerated_prop) {
            os << *r.enumerated_prop << ',' << (*r.enumerated_prop == r.formula_prop ? "match" : "mismatch") << ','
               << (*r.enumerated_prop - r.formula_prop) << ',' << format_real(r.ratio_prop);
        } else {
            os << ",n/a,,";
        }
        os << '\n';
    }
}

}  // namespace crn
