#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crn/error.hpp"
#include "crn/sweep.hpp"

using namespace crn;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("crn_sweep_test_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("grid values hit both endpoints") {
    SweepSpec s;
    CHECK(s.value_at(0) == 0.1);
    CHECK(s.value_at(4) == 0.5);
    CHECK(s.value_at(2) == doctest::Approx(0.3));
}

TEST_CASE("invalid sweep specs are rejected") {
    SweepSpec s;
    s.start = 0.5;
    s.stop = 0.1;
    CHECK_THROWS_AS(validate_sweep(s), ValidationError);
    s = SweepSpec{};
    s.start = 0.0;
    CHECK_THROWS_AS(validate_sweep(s), ValidationError);
    s = SweepSpec{};
    s.steps = 1;
    CHECK_THROWS_AS(validate_sweep(s), ValidationError);
    s = SweepSpec{};
    s.models.clear();
    CHECK_THROWS_AS(validate_sweep(s), ValidationError);
    s = SweepSpec{};
    s.with_simulation = true;
    s.sim.warmup = s.sim.horizon;
    CHECK_THROWS_AS(validate_sweep(s), ValidationError);
    CHECK_THROWS_AS(axis_from_string("k"), ValidationError);
}

TEST_CASE("default sweep writes four tables and a manifest") {
    const auto dir = scratch("default");
    const auto result = run_sweep(reference_params(), SweepSpec{}, dir);
    CHECK(result.rows.size() == 10);
    CHECK(result.rows[0].analytical.model == ModelKind::Basic);
    CHECK(result.rows[9].analytical.model == ModelKind::Reservation);
    CHECK(result.rows[9].analytical.lambda_s == 0.5);

    const auto cap = lines(slurp(dir / "capacity.csv"));
    REQUIRE(cap.size() == 11);
    CHECK(cap[0] == "model,lambda_s,mu_s,rho_1,rho_2,rho_r1");
    CHECK(split(cap[1]).size() == 6);
    CHECK(split(cap[1])[5].empty());  // basic model has no R1 class
    CHECK_FALSE(split(cap[10])[5].empty());
    CHECK(lines(slurp(dir / "utilization.csv"))[0] == "model,lambda_s,mu_s,U");
    CHECK(lines(slurp(dir / "blocking.csv"))[0] == "model,lambda_s,mu_s,Pb_r1,Pb_1,Pb_2");
    CHECK(lines(slurp(dir / "handoff.csv")).size() == 11);

    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["version"] == kToolVersion);
    CHECK(manifest["sweep"]["grid"].size() == 5);
    CHECK(manifest["simulation"].is_null());
    CHECK(manifest["files"].size() == 4);
    fs::remove_all(dir);
}

TEST_CASE("tables can be recomputed from the manifest alone") {
    const auto dir = scratch("recompute");
    SweepSpec spec;
    spec.axis = SweepAxis::MuS;
    spec.start = 0.25;
    spec.stop = 0.5;
    spec.steps = 3;
    run_sweep(reference_params(), spec, dir);

    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    const auto base = params_from_json(manifest["params"]);
    const auto util = lines(slurp(dir / "utilization.csv"));
    std::size_t line = 1;
    for (const auto& model : manifest["sweep"]["models"]) {
        for (const auto& v : manifest["sweep"]["grid"]) {
            auto p = base;
            p.mu_s = v.get<double>();
            const auto r = evaluate(p, model_from_string(model.get<std::string>()), manifest["solver"]["tol"]);
            REQUIRE(line < util.size());
            CHECK(util[line++] == std::string(to_string(r.model)) + ',' + format_real(r.lambda_s) + ',' +
                                      format_real(r.mu_s) + ',' + format_real(r.utilization));
        }
    }
    CHECK(line == util.size());
    fs::remove_all(dir);
}

TEST_CASE("reruns are byte-identical and worker-independent") {
    const auto a = scratch("rerun_a");
    const auto b = scratch("rerun_b");
    SweepSpec spec;
    spec.steps = 3;
    spec.with_simulation = true;
    spec.sim.horizon = 2e3;
    spec.sim.warmup = 10;
    spec.sim.replications = 3;
    spec.sim.workers = 1;
    run_sweep(reference_params(), spec, a);
    spec.workers = 4;
    spec.sim.workers = 2;
    run_sweep(reference_params(), spec, b);
    for (const char* f : {"capacity.csv", "utilization.csv", "blocking.csv", "handoff.csv", "manifest.json"})
        CHECK(slurp(a / f) == slurp(b / f));
    CHECK(lines(slurp(a / "blocking.csv"))[0] ==
          "model,lambda_s,mu_s,Pb_r1,Pb_1,Pb_2,sim_Pb_r1,sim_Pb_1,sim_Pb_2,ci_Pb_r1,ci_Pb_1,ci_Pb_2");
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("single model, two points") {
    SweepSpec spec;
    spec.steps = 2;
    spec.models = {ModelKind::Reservation};
    const auto r = run_sweep(reference_params(), spec);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].analytical.lambda_s == 0.1);
    CHECK(r.rows[1].analytical.lambda_s == 0.5);
}

TEST_CASE("a failing grid point is named") {
    SweepSpec spec;
    spec.tol = 1e-40;
    CHECK_THROWS_WITH_AS(run_sweep(reference_params(), spec),
                         doctest::Contains("sweep point basic lambda_s=0.1"), NumericalError);
}

TEST_CASE("complexity report") {
    const auto rows = report_complexity(reference_params(), 0, 8);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].enumerated_basic == 1);
    CHECK_FALSE(rows[0].enumerated_prop.has_value());
    for (const auto& r : rows) CHECK(r.formula_basic == r.enumerated_basic);
    CHECK(rows[7].formula_prop == 154);
    CHECK(rows[7].enumerated_prop == 268);
    CHECK(rows[7].formula_prop_general == 154);

    std::ostringstream os;
    write_complexity_table(os, rows);
    const auto t = lines(os.str());
    CHECK(t.size() == 10);
    CHECK(t[1].rfind("0,1,1,match,0,-7,", 0) == 0);
    CHECK(t[1].substr(t[1].size() - 6) == ",n/a,,");
    CHECK(t[8].rfind("7,120,120,match,", 0) == 0);
    CHECK(t[8].find(",154,154,268,mismatch,114,") != std::string::npos);
}
