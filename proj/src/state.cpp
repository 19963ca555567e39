#include "crn/state.hpp"

namespace crn {

std::string BasicState::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j1) + "," + std::to_string(j2) + ")";
}

std::string ReservationState::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j1_r) + "," + std::to_string(j1) + "," +
           std::to_string(jm) + "," + std::to_string(jn) + ")";
}

std::ostream& operator<<(std::ostream& os, const BasicState& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const ReservationState& s) { return os << s.to_string(); }

}  // namespace crn
