#pragma once

#include <optional>
#include <vector>

#include "crn/basic_chain.hpp"
#include "crn/generator.hpp"
#include "crn/params.hpp"
#include "crn/state.hpp"

namespace crn {

/// Breadth-first closure of Z(0,0,0,0,0) under reservation_transitions,
/// returned in lexicographic order.
ReservationSpace enumerate_reservation(const SystemParams& p);

/// Outgoing transitions of the reservation / aggregation chain at z.
///
/// Full-system PU arrivals with no degradable SU-2 split c' over the victim
/// classes in proportion to the channels each holds (j1_r : j1 : n*jn). When
/// m == n aggregation is off and every SU-2 is tracked in jn.
std::vector<StateTransition<ReservationState>> reservation_transitions(const ReservationState& z,
                                                                       const SystemParams& p);

Generator build_reservation_generator(const SystemParams& p, const ReservationSpace& space);

/// Where an arriving SU of the given class goes, or nullopt when it is blocked.
std::optional<StateTransition<ReservationState>> su_r1_admission(const ReservationState& z, const SystemParams& p);
std::optional<StateTransition<ReservationState>> su1_admission(const ReservationState& z, const SystemParams& p);
std::optional<StateTransition<ReservationState>> su2_admission(const ReservationState& z, const SystemParams& p);

inline bool reservation_r1_blocked(const ReservationState& z, const SystemParams& p) {
    return !su_r1_admission(z, p).has_value();
}
inline bool reservation_su1_blocked(const ReservationState& z, const SystemParams& p) {
    return !su1_admission(z, p).has_value();
}
inline bool reservation_su2_blocked(const ReservationState& z, const SystemParams& p) {
    return !su2_admission(z, p).has_value();
}

}  // namespace crn
