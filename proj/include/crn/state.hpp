#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/params.hpp"

namespace crn {

/// S(i, j1, j2) of the basic random-access chain.
struct BasicState {
    int i = 0;   // channels held by PUs
    int j1 = 0;  // class-1 SUs
    int j2 = 0;  // class-2 SUs

    int occupied() const noexcept { return i + j1 + j2; }
    int idle(const SystemParams& p) const noexcept { return p.M - occupied(); }

    /// Nonnegative counts, i <= min(M, k), occupancy <= M.
    bool feasible(const SystemParams& p) const noexcept {
        return i >= 0 && j1 >= 0 && j2 >= 0 && i <= p.max_pu() && occupied() <= p.M;
    }

    auto operator<=>(const BasicState&) const = default;
    std::string to_string() const;
};

/// Z(i, j1_r, j1, jm, jn) of the reservation / aggregation chain.
struct ReservationState {
    int i = 0;
    int j1_r = 0;  // returned class-1 SUs (SUs-R1)
    int j1 = 0;
    int jm = 0;    // SUs-2 holding m channels
    int jn = 0;    // SUs-2 holding n channels

    int j2() const noexcept { return jm + jn; }
    int su2_channels(const SystemParams& p) const noexcept { return p.m * jm + p.n * jn; }
    int occupied(const SystemParams& p) const noexcept { return i + j1_r + j1 + su2_channels(p); }
    int idle(const SystemParams& p) const noexcept { return p.M - occupied(p); }

    bool feasible(const SystemParams& p) const noexcept {
        return i >= 0 && j1_r >= 0 && j1 >= 0 && jm >= 0 && jn >= 0 && i <= p.max_pu() &&
               j1_r <= p.M1_prime && j1 <= p.M1() && su2_channels(p) <= p.M2() && occupied(p) <= p.M;
    }

    auto operator<=>(const ReservationState&) const = default;
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const BasicState& s);
std::ostream& operator<<(std::ostream& os, const ReservationState& s);

/// Ordered, duplicate-free list of states with a bijective index.
template <typename State>
class StateSpace {
public:
    using value_type = State;

    StateSpace() = default;

    /// Sorts lexicographically and removes duplicates.
    explicit StateSpace(std::vector<State> states) : states_(std::move(states)) {
        std::sort(states_.begin(), states_.end());
        states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
        for (std::size_t idx = 0; idx < states_.size(); ++idx) index_.emplace(states_[idx], idx);
    }

    std::size_t size() const noexcept { return states_.size(); }
    bool empty() const noexcept { return states_.empty(); }
    const State& operator[](std::size_t idx) const { return states_[idx]; }
    const std::vector<State>& states() const noexcept { return states_; }
    auto begin() const noexcept { return states_.begin(); }
    auto end() const noexcept { return states_.end(); }

    bool contains(const State& s) const { return index_.count(s) != 0; }

    std::size_t index(const State& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw std::out_of_range("state not in space: " + s.to_string());
        return it->second;
    }

private:
    std::vector<State> states_;
    std::map<State, std::size_t> index_;
};

using BasicSpace = StateSpace<BasicState>;
using ReservationSpace = StateSpace<ReservationState>;

}  // namespace crn
