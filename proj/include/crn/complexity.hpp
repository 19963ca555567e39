#pragma once

#include <cstdint>

namespace crn {

/// Closed-form state count of the basic chain: M³/6 + M² + 11M/6 + 1.
std::int64_t state_count_basic(int M);

/// Closed form of the reservation-chain count at M_rp = 2:
/// M³/3 + 3M²/2 − 23M/6 − 7. Negative for M < 3, where the form does not apply.
std::int64_t state_count_reservation(int M);

/// Unsimplified count for a general M_rp:
/// (M_rp+1)(Σ_{v=M_rp}^{M−M_rp} 2v + (M−M_rp)) + Σ_{w=1}^{M−M_rp} w².
std::int64_t state_count_reservation(int M, int M_rp);

}  // namespace crn
