#pragma once

#include <vector>

#include "crn/generator.hpp"
#include "crn/params.hpp"
#include "crn/state.hpp"

namespace crn {

template <typename State>
struct StateTransition {
    State target;
    double rate;
    Event event;
};

/// All (i, j1, j2) with i + j1 + j2 <= M and i <= min(M, k), lexicographic.
/// Accepts M = 0 (a single empty state).
BasicSpace enumerate_basic(int M, int k);
BasicSpace enumerate_basic(const SystemParams& p);

/// Outgoing transitions of the basic random-access chain at s. Blocked
/// arrivals and zero-rate rows produce nothing.
std::vector<StateTransition<BasicState>> basic_transitions(const BasicState& s, const SystemParams& p);

Generator build_basic_generator(const SystemParams& p, const BasicSpace& space);

/// An arriving SU-1 finds the system full with no SU-2 to preempt.
bool basic_su1_blocked(const BasicState& s, const SystemParams& p) noexcept;
/// An arriving SU-2 finds the system full.
bool basic_su2_blocked(const BasicState& s, const SystemParams& p) noexcept;

}  // namespace crn
