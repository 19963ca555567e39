#include "crn/basic_chain.hpp"

#include <algorithm>

#include "crn/error.hpp"

namespace crn {

BasicSpace enumerate_basic(int M, int k) {
    std::vector<BasicState> states;
    const int max_pu = std::min(M, k);
    for (int i = 0; i <= max_pu; ++i)
        for (int j1 = 0; i + j1 <= M; ++j1)
            for (int j2 = 0; i + j1 + j2 <= M; ++j2) states.push_back({i, j1, j2});
    return BasicSpace(std::move(states));
}

BasicSpace enumerate_basic(const SystemParams& p) { return enumerate_basic(p.M, p.k); }

bool basic_su1_blocked(const BasicState& s, const SystemParams& p) noexcept {
    return s.idle(p) == 0 && s.j2 == 0;
}

bool basic_su2_blocked(const BasicState& s, const SystemParams& p) noexcept { return s.idle(p) == 0; }

std::vector<StateTransition<BasicState>> basic_transitions(const BasicState& s, const SystemParams& p) {
    std::vector<StateTransition<BasicState>> out;
    auto emit = [&out](BasicState t, double rate, Event e) {
        if (rate > 0.0) out.push_back({t, rate, e});
    };

    const int idle = s.idle(p);
    const double pu_rate = (p.k - s.i) * p.lambda_p;  // c

    // PU arrival
    if (s.i < p.k) {
        if (idle > 0) {
            const double free_share = static_cast<double>(idle) / (p.M - s.i);
            const double su_share = static_cast<double>(s.j1 + s.j2) / (p.M - s.i);
            emit({s.i + 1, s.j1, s.j2}, free_share * pu_rate, Event::PuArrivalIdle);
            emit({s.i + 1, s.j1, s.j2}, su_share * pu_rate, Event::PuArrivalHandoff);
        } else if (s.j2 > 0) {
            emit({s.i + 1, s.j1, s.j2 - 1}, pu_rate, Event::PuArrivalDropSu2);
        } else if (s.j1 > 0) {
            emit({s.i + 1, s.j1 - 1, s.j2}, pu_rate, Event::PuArrivalDropSu1);
        }
    }
    if (s.i > 0) emit({s.i - 1, s.j1, s.j2}, s.i * p.mu_p, Event::PuDeparture);

    // SU-1
    if (idle > 0)
        emit({s.i, s.j1 + 1, s.j2}, p.lambda_s, Event::Su1Arrival);
    else if (s.j2 > 0)
        emit({s.i, s.j1 + 1, s.j2 - 1}, p.lambda_s, Event::Su1ArrivalDropSu2);
    if (s.j1 > 0) emit({s.i, s.j1 - 1, s.j2}, s.j1 * p.mu_s, Event::Su1Departure);

    // SU-2
    if (idle > 0) emit({s.i, s.j1, s.j2 + 1}, p.lambda_s, Event::Su2Arrival);
    if (s.j2 > 0) emit({s.i, s.j1, s.j2 - 1}, s.j2 * p.mu_s, Event::Su2Departure);

    return out;
}

Generator build_basic_generator(const SystemParams& p, const BasicSpace& space) {
    Generator g(space.size());
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        for (const auto& t : basic_transitions(space[idx], p)) {
            if (!t.target.feasible(p) || !space.contains(t.target))
                throw InternalError("basic chain emitted infeasible state " + t.target.to_string() + " from " +
                                    space[idx].to_string());
            g.add(idx, space.index(t.target), t.rate, t.event);
        }
    }
    return g;
}

}  // namespace crn
