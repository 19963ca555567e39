#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crn/metrics.hpp"
#include "crn/params.hpp"
#include "crn/simulation.hpp"
#include "crn/solver.hpp"

namespace crn {

inline constexpr const char* kToolVersion = "1.0.0";

enum class SweepAxis { LambdaS, MuS };

std::string_view to_string(SweepAxis a) noexcept;
SweepAxis axis_from_string(std::string_view s);

struct SweepSpec {
    SweepAxis axis = SweepAxis::LambdaS;
    double start = 0.1;
    double stop = 0.5;
    int steps = 5;
    std::vector<ModelKind> models{ModelKind::Basic, ModelKind::Reservation};
    bool with_simulation = false;
    SimConfig sim;
    double tol = kDirectTolerance;
    unsigned workers = 1;

    /// Grid value at step idx; endpoints are exact.
    double value_at(int idx) const;
};

void validate_sweep(const SweepSpec& s);

/// Build, solve (direct), and evaluate one model at one parameter point.
MetricsReport evaluate(const SystemParams& p, ModelKind model, double tol = kDirectTolerance);

struct SweepRow {
    MetricsReport analytical;
    std::optional<SimEstimate> simulated;
};

struct SweepResult {
    /// Ordered by model (as listed in the spec), then by grid index.
    std::vector<SweepRow> rows;
};

/// Evaluates the whole grid. A failing grid point aborts with a
/// NumericalError naming it.
SweepResult run_sweep(const SystemParams& base, const SweepSpec& spec);

/// Runs the sweep and writes capacity.csv, utilization.csv, blocking.csv,
/// handoff.csv and manifest.json into out_dir.
SweepResult run_sweep(const SystemParams& base, const SweepSpec& spec, const std::filesystem::path& out_dir);

nlohmann::json sweep_manifest(const SystemParams& base, const SweepSpec& spec);

struct ComplexityRow {
    int M = 0;
    std::int64_t formula_basic = 0;
    std::int64_t enumerated_basic = 0;
    std::int64_t formula_prop = 0;          // closed form, valid at M_rp = 2
    std::int64_t formula_prop_general = 0;  // unsimplified form at the params' M_rp
    std::optional<std::int64_t> enumerated_prop;  // empty when params are invalid at this M
    double ratio_basic = 0.0;  // enumerated / (M³/6)
    double ratio_prop = 0.0;   // enumerated / (M³/3)
};

/// One row per M in [m_from, m_to]; the reservation parameters other than M
/// are taken from `base`.
std::vector<ComplexityRow> report_complexity(const SystemParams& base, int m_from, int m_to);
void write_complexity_table(std::ostream& os, const std::vector<ComplexityRow>& rows);

}  // namespace crn
