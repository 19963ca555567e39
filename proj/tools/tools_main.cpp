// crn: command-line front end for the cognitive-radio channel access models.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crn/basic_chain.hpp"
#include "crn/error.hpp"
#include "crn/metrics.hpp"
#include "crn/params.hpp"
#include "crn/reservation_chain.hpp"
#include "crn/simulation.hpp"
#include "crn/solver.hpp"
#include "crn/sweep.hpp"

namespace fs = std::filesystem;
using namespace crn;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct Common {
    std::string params_file;
    std::string model = "both";
    std::string out_dir;
    double tol = kDirectTolerance;
};

SystemParams load(const Common& c) {
    SystemParams p = c.params_file.empty() ? reference_params() : load_params(c.params_file);
    return validate_params(p);
}

std::vector<ModelKind> models_of(const std::string& s) {
    if (s == "both") return {ModelKind::Basic, ModelKind::Reservation};
    return {model_from_string(s)};
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    return out;
}

void add_common(CLI::App* cmd, Common& c, bool with_model = true) {
    cmd->add_option("--params", c.params_file, "SystemParams JSON (defaults to the reference parameter set)")
        ->check(CLI::ExistingFile);
    if (with_model)
        cmd->add_option("--model", c.model, "basic | reservation | both")
            ->check(CLI::IsMember({"basic", "reservation", "both"}));
    cmd->add_option("--out", c.out_dir, "output directory");
    cmd->add_option("--tol", c.tol, "residual tolerance of the direct solve");
}

int cmd_validate(const Common& c) {
    const auto p = load(c);
    std::cout << "valid: M1=" << p.M1() << " M2=" << p.M2() << '\n';
    return 0;
}

template <typename Space, typename Build>
void enumerate_one(const char* name, const Space& space, Build build, const Common& c) {
    std::cout << name << " states: " << space.size() << '\n';
    for (const auto& s : space) std::cout << "  " << s << '\n';
    if (!c.out_dir.empty()) {
        auto out = open_out(c.out_dir, std::string("generator_") + name + ".txt");
        build().write_triples(out);
    }
}

int cmd_enumerate(const Common& c) {
    const auto p = load(c);
    for (auto m : models_of(c.model)) {
        if (m == ModelKind::Basic) {
            const auto space = enumerate_basic(p);
            enumerate_one("basic", space, [&] { return build_basic_generator(p, space); }, c);
        } else {
            const auto space = enumerate_reservation(p);
            enumerate_one("reservation", space, [&] { return build_reservation_generator(p, space); }, c);
        }
    }
    return 0;
}

template <typename Space>
void solve_one(const char* name, const Space& space, const Generator& g, const Common& c) {
    const auto direct = solve_direct(g, c.tol);
    const auto iter = solve_uniformization(g);
    std::cout << name << ": states=" << space.size() << " residual=" << format_real(direct.residual_inf)
              << " uniformization_iterations=" << iter.iterations
              << " max_method_difference=" << format_real(max_abs_difference(direct.pi, iter.pi)) << '\n';
    if (!c.out_dir.empty()) {
        auto out = open_out(c.out_dir, std::string("pi_") + name + ".csv");
        write_distribution_csv(out, space, direct.pi);
    } else {
        write_distribution_csv(std::cout, space, direct.pi);
    }
}

int cmd_solve(const Common& c) {
    const auto p = load(c);
    for (auto m : models_of(c.model)) {
        if (m == ModelKind::Basic) {
            const auto space = enumerate_basic(p);
            solve_one("basic", space, build_basic_generator(p, space), c);
        } else {
            const auto space = enumerate_reservation(p);
            solve_one("reservation", space, build_reservation_generator(p, space), c);
        }
    }
    return 0;
}

int cmd_metrics(const Common& c) {
    const auto p = load(c);
    std::string text = metrics_csv_header() + '\n';
    for (auto m : models_of(c.model)) text += metrics_csv_row(evaluate(p, m, c.tol)) + '\n';
    std::cout << text;
    if (!c.out_dir.empty()) open_out(c.out_dir, "metrics.csv") << text;
    return 0;
}

int cmd_simulate(const Common& c, const SimConfig& cfg) {
    const auto p = load(c);
    for (auto m : models_of(c.model)) {
        const auto est = simulate(p, m, cfg);
        const std::string csv = est.csv_header() + '\n' + est.csv_row() + '\n';
        std::cout << csv;
        if (!c.out_dir.empty()) {
            const std::string stem = std::string("sim_") + std::string(to_string(m));
            open_out(c.out_dir, stem + ".json") << est.to_json().dump(2) << '\n';
            open_out(c.out_dir, stem + ".csv") << csv;
        }
    }
    return 0;
}

int cmd_sweep(const Common& c, SweepSpec spec, const std::string& axis) {
    const auto p = load(c);
    spec.axis = axis_from_string(axis);
    spec.models = models_of(c.model);
    spec.tol = c.tol;
    if (c.out_dir.empty()) throw ValidationError("sweep requires --out");
    const auto result = run_sweep(p, spec, c.out_dir);
    std::cout << "wrote " << result.rows.size() << " rows per file to " << c.out_dir << '\n';
    return 0;
}

int cmd_complexity(const Common& c, int from, int to) {
    SystemParams p = c.params_file.empty() ? reference_params() : load_params(c.params_file);
    const auto rows = report_complexity(p, from, to);
    write_complexity_table(std::cout, rows);
    if (!c.out_dir.empty()) {
        auto out = open_out(c.out_dir, "complexity.csv");
        write_complexity_table(out, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov models of prioritized cognitive-radio channel access"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Common common;
    SimConfig sim;
    SweepSpec spec;
    std::string axis = "lambda_s";
    int m_from = 0, m_to = 12;
    unsigned workers = 1;

    auto add_sim = [&](CLI::App* cmd) {
        cmd->add_option("--seed", sim.seed, "base seed for replication streams");
        cmd->add_option("--horizon", sim.horizon, "simulated seconds per replication");
        cmd->add_option("--warmup", sim.warmup, "discarded prefix in seconds");
        cmd->add_option("--replications", sim.replications, "independent replications");
        cmd->add_flag("--cross-check", sim.cross_check, "compare visited states against the generator");
        cmd->add_option("--workers", workers, "worker threads");
    };

    auto* validate = app.add_subcommand("validate", "check a parameter file");
    add_common(validate, common, false);
    auto* enumerate = app.add_subcommand("enumerate", "list the state space (and export the generator with --out)");
    add_common(enumerate, common);
    auto* solve = app.add_subcommand("solve", "stationary distribution by both solvers");
    add_common(solve, common);
    auto* metrics = app.add_subcommand("metrics", "performance metrics at one parameter point");
    add_common(metrics, common);
    auto* simulate_cmd = app.add_subcommand("simulate", "discrete-event simulation estimate");
    add_common(simulate_cmd, common);
    add_sim(simulate_cmd);
    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV files");
    add_common(sweep, common);
    add_sim(sweep);
    sweep->add_option("--axis", axis, "lambda_s | mu_s")->check(CLI::IsMember({"lambda_s", "mu_s"}));
    sweep->add_option("--start", spec.start, "first grid value");
    sweep->add_option("--stop", spec.stop, "last grid value");
    sweep->add_option("--steps", spec.steps, "grid points (>= 2)");
    sweep->add_flag("--simulate", spec.with_simulation, "add simulation estimates and CIs");
    auto* complexity = app.add_subcommand("complexity", "closed-form vs enumerated state counts");
    add_common(complexity, common, false);
    complexity->add_option("--m-from", m_from, "smallest M");
    complexity->add_option("--m-to", m_to, "largest M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        sim.workers = workers;
        spec.sim = sim;
        spec.workers = workers;
        if (*validate) return cmd_validate(common);
        if (*enumerate) return cmd_enumerate(common);
        if (*solve) return cmd_solve(common);
        if (*metrics) return cmd_metrics(common);
        if (*simulate_cmd) return cmd_simulate(common, sim);
        if (*sweep) return cmd_sweep(common, spec, axis);
        if (*complexity) return cmd_complexity(common, m_from, m_to);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
