#pragma once

#include <string>

#include <json.hpp>

namespace crn {

/// Model constants shared by both chains.
///
/// Channel counts are small integers; rates are in calls/sec. The derived
/// pool sizes M1 and M2 are recomputed from the primary fields on every call.
struct SystemParams {
    int M = 1;               // homogeneous channels
    int k = 1;               // primary users (finite source)
    double lambda_p = 1.0;   // arrival rate per idle PU
    double mu_p = 1.0;
    double lambda_s = 1.0;   // arrival rate per SU class
    double mu_s = 1.0;
    int M_rp = 0;            // channels PUs fill first
    int M1_prime = 0;        // channels usable by returned class-1 SUs
    int M_r2 = 0;            // channels reserved for class-2 SUs
    int m = 1;               // widest SU-2 aggregation
    int n = 1;               // narrowest SU-2 aggregation

    /// Admit an SU-2 at width n when m channels are not available and no
    /// m-wide SU-2 can be degraded.
    bool su2_min_width_admission = true;

    int M1() const noexcept { return M - M_rp - M_r2; }
    int M2() const noexcept { return M - M_rp - M1_prime; }
    /// Most channels a PU population can hold.
    int max_pu() const noexcept { return M < k ? M : k; }
    bool aggregation_enabled() const noexcept { return m > n; }

    bool operator==(const SystemParams&) const = default;
};

/// Returns p unchanged when every invariant holds; throws ValidationError
/// naming the first violated one otherwise.
const SystemParams& validate_params(const SystemParams& p);

/// As validate_params, but admits lambda_s == 0 (SU streams switched off).
/// Used where a chain with only PU traffic is meaningful, e.g. simulation.
const SystemParams& validate_structure(const SystemParams& p);

/// The parameter point used throughout the numerical study (λs = 0.25, μs = 0.5).
SystemParams reference_params();

/// Strict JSON ingestion: every required key must be present and unknown keys
/// are rejected. Does not call validate_params.
SystemParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SystemParams& p);
SystemParams load_params(const std::string& path);

}  // namespace crn
