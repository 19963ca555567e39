#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crn/generator.hpp"
#include "crn/metrics.hpp"
#include "crn/params.hpp"
#include "crn/state.hpp"

namespace crn {

struct SimConfig {
    double horizon = 1e6;   // simulated seconds per replication
    double warmup = 1e3;    // discarded prefix
    int replications = 10;
    std::uint64_t seed = 1;
    /// Compare every newly visited state's event set with the analytical
    /// generator row; throws InternalError on the first disagreement.
    bool cross_check = false;
    /// Worker threads for replications; 0 picks the hardware concurrency.
    unsigned workers = 0;
};

/// Throws ValidationError("warmup < horizon violated") and friends.
void validate_sim_config(const SimConfig& cfg);

/// Count-level state used by the simulator: (i, j1, j2) for the basic model
/// and (i, j1_r, j1, jm, jn) for the reservation model.
using Counts = std::array<int, 5>;

struct SimEvent {
    Counts target;
    double rate;
    Event event;
};

/// Enabled events of the given model at `state`, derived directly from the
/// event tables (independently of the generator builders).
std::vector<SimEvent> simulation_events(const SystemParams& p, ModelKind model, const Counts& state);

struct ClassCounters {
    std::uint64_t arrivals = 0;
    std::uint64_t blocks = 0;
    std::uint64_t admissions = 0;
    std::uint64_t completions = 0;
    std::uint64_t drops = 0;
    std::uint64_t handoffs = 0;
    std::uint64_t degrades = 0;
    std::uint64_t upgrades = 0;
    std::int64_t in_service_at_end = 0;

    ClassCounters& operator+=(const ClassCounters& o);
};

struct Estimate {
    double mean = 0.0;
    double ci_half_width = 0.0;  // 95 % Student-t over replication means
};

struct SimEstimate {
    ModelKind model = ModelKind::Basic;
    SystemParams params;
    SimConfig config;

    /// Visited states in lexicographic order and their time-average occupancy,
    /// averaged over replications.
    std::vector<Counts> states;
    std::vector<double> pi_hat;

    /// Formula metrics evaluated on each replication's occupancy, aligned
    /// with metric_columns(); empty where the model has no such class.
    std::array<std::optional<Estimate>, 10> metrics;

    /// Raw event ratios: blocks / arrivals and handoffs / admissions.
    PerClass raw_blocking;
    PerClass raw_handoff;

    /// Summed over replications. Index 0 = SU-R1, 1 = SU-1, 2 = SU-2.
    std::array<ClassCounters, 3> counters;

    /// π̂ aligned to an analytical space; unvisited states get 0.
    std::vector<double> pi_on(const BasicSpace& space) const;
    std::vector<double> pi_on(const ReservationSpace& space) const;

    nlohmann::json to_json() const;
    std::string csv_header() const;
    std::string csv_row() const;
};

SimEstimate simulate(const SystemParams& p, ModelKind model, const SimConfig& cfg);

}  // namespace crn
