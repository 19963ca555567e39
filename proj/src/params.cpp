#include "crn/params.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <string_view>

#include "crn/error.hpp"

namespace crn {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

constexpr std::array<std::string_view, 11> kRequiredKeys = {
    "M", "k", "lambda_p", "mu_p", "lambda_s", "mu_s", "M_rp", "M1_prime", "M_r2", "m", "n"};
constexpr std::string_view kOptionalKey = "su2_min_width_admission";

void check(const SystemParams& p, bool allow_idle_su) {
    require(p.M >= 1, "M must be at least 1");
    require(p.k >= 1, "k must be at least 1");
    require(positive(p.lambda_p), "lambda_p not positive");
    require(positive(p.mu_p), "mu_p not positive");
    if (allow_idle_su)
        require(std::isfinite(p.lambda_s) && p.lambda_s >= 0.0, "lambda_s negative");
    else
        require(positive(p.lambda_s), "lambda_s not positive");
    require(positive(p.mu_s), "mu_s not positive");
    require(p.M_rp >= 0, "M_rp negative");
    require(p.M1_prime >= 0, "M1_prime negative");
    require(p.M_r2 >= 0, "M_r2 negative");
    require(p.m >= 1, "m must be at least 1");
    require(p.n >= 1, "n must be at least 1");
    require(p.n <= p.m, "n exceeds m");
    require(p.M1() >= 0, "M1 negative");
    require(p.M2() >= 0, "M2 negative");
}

}  // namespace

const SystemParams& validate_params(const SystemParams& p) {
    check(p, false);
    return p;
}

const SystemParams& validate_structure(const SystemParams& p) {
    check(p, true);
    return p;
}

SystemParams reference_params() {
    SystemParams p;
    p.M = 7;
    p.M_rp = 2;
    p.M1_prime = 1;
    p.M_r2 = 1;
    p.m = 2;
    p.n = 1;
    p.k = 10;
    p.lambda_p = 0.05;
    p.mu_p = 0.4;
    p.lambda_s = 0.25;
    p.mu_s = 0.5;
    return p;
}

SystemParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("params document must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = key == kOptionalKey;
        for (auto k : kRequiredKeys) known = known || key == k;
        if (!known) throw ValidationError("unknown parameter key '" + key + "'");
    }
    for (auto key : kRequiredKeys) {
        if (!j.contains(key)) throw ValidationError("missing parameter key '" + std::string(key) + "'");
    }

    auto integer = [&](const char* key) {
        const auto& v = j.at(key);
        if (!v.is_number_integer()) throw ValidationError(std::string(key) + " must be an integer");
        return v.get<int>();
    };
    auto real = [&](const char* key) {
        const auto& v = j.at(key);
        if (!v.is_number()) throw ValidationError(std::string(key) + " must be a number");
        return v.get<double>();
    };

    SystemParams p;
    p.M = integer("M");
    p.k = integer("k");
    p.lambda_p = real("lambda_p");
    p.mu_p = real("mu_p");
    p.lambda_s = real("lambda_s");
    p.mu_s = real("mu_s");
    p.M_rp = integer("M_rp");
    p.M1_prime = integer("M1_prime");
    p.M_r2 = integer("M_r2");
    p.m = integer("m");
    p.n = integer("n");
    if (j.contains(kOptionalKey)) {
        const auto& v = j.at(kOptionalKey);
        if (!v.is_boolean()) throw ValidationError("su2_min_width_admission must be a boolean");
        p.su2_min_width_admission = v.get<bool>();
    }
    return p;
}

nlohmann::json params_to_json(const SystemParams& p) {
    return nlohmann::json{{"M", p.M},
                          {"k", p.k},
                          {"lambda_p", p.lambda_p},
                          {"mu_p", p.mu_p},
                          {"lambda_s", p.lambda_s},
                          {"mu_s", p.mu_s},
                          {"M_rp", p.M_rp},
                          {"M1_prime", p.M1_prime},
                          {"M_r2", p.M_r2},
                          {"m", p.m},
                          {"n", p.n},
                          {"su2_min_width_admission", p.su2_min_width_admission}};
}

SystemParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open params file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed params file " + path + ": " + e.what());
    }
    return params_from_json(j);
}

}  // namespace crn
