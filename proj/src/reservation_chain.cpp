#include "crn/reservation_chain.hpp"

#include <deque>
#include <set>

#include "crn/error.hpp"

namespace crn {

namespace {

using Step = StateTransition<ReservationState>;

/// An m-wide SU-2 exists that can shrink to n and release channels.
bool degradable(const ReservationState& z, const SystemParams& p) {
    return p.aggregation_enabled() && z.jm > 0;
}

ReservationState degrade_one(ReservationState z) {
    --z.jm;
    ++z.jn;
    return z;
}

}  // namespace

std::optional<Step> su_r1_admission(const ReservationState& z, const SystemParams& p) {
    if (z.j1_r >= p.M1_prime) return std::nullopt;
    ReservationState t = z;
    ++t.j1_r;
    if (z.idle(p) > 0) return Step{t, p.lambda_s, Event::SuR1Arrival};
    if (degradable(z, p)) return Step{degrade_one(t), p.lambda_s, Event::SuR1ArrivalDegradeSu2};
    if (z.jn > p.M_r2) {
        --t.jn;
        return Step{t, p.lambda_s, Event::SuR1ArrivalDropSu2};
    }
    if (z.j1 > 0) {
        --t.j1;
        return Step{t, p.lambda_s, Event::SuR1ArrivalDropSu1};
    }
    return std::nullopt;
}

std::optional<Step> su1_admission(const ReservationState& z, const SystemParams& p) {
    if (z.j1 >= p.M1()) return std::nullopt;
    ReservationState t = z;
    ++t.j1;
    if (z.idle(p) > 0) return Step{t, p.lambda_s, Event::Su1Arrival};
    if (degradable(z, p)) return Step{degrade_one(t), p.lambda_s, Event::Su1ArrivalDegradeSu2};
    if (z.jn > p.M_r2) {
        --t.jn;
        return Step{t, p.lambda_s, Event::Su1ArrivalDropSu2};
    }
    return std::nullopt;
}

std::optional<Step> su2_admission(const ReservationState& z, const SystemParams& p) {
    const int idle = z.idle(p);
    const int held = z.su2_channels(p);
    const bool narrow_fits = idle >= p.n && held + p.n <= p.M2();

    if (!p.aggregation_enabled()) {
        if (!narrow_fits) return std::nullopt;
        ReservationState t = z;
        ++t.jn;
        return Step{t, p.lambda_s, Event::Su2ArrivalNarrow};
    }

    if (idle >= p.m && held + p.m <= p.M2()) {
        ReservationState t = z;
        ++t.jm;
        return Step{t, p.lambda_s, Event::Su2ArrivalAggregate};
    }
    if (z.jm > 0) {
        ReservationState t = z;
        --t.jm;
        t.jn += 2;
        if (t.feasible(p)) return Step{t, p.lambda_s, Event::Su2ArrivalDegrade};
    }
    if (p.su2_min_width_admission && narrow_fits) {
        ReservationState t = z;
        ++t.jn;
        return Step{t, p.lambda_s, Event::Su2ArrivalNarrow};
    }
    return std::nullopt;
}

std::vector<Step> reservation_transitions(const ReservationState& z, const SystemParams& p) {
    std::vector<Step> out;
    auto emit = [&out](ReservationState t, double rate, Event e) {
        if (rate > 0.0) out.push_back({t, rate, e});
    };

    const int idle = z.idle(p);
    const double pu_rate = (p.k - z.i) * p.lambda_p;  // c'

    // PU arrival
    if (z.i < p.k) {
        ReservationState t = z;
        ++t.i;
        if (idle > 0) {
            if (z.i < p.M_rp) {
                emit(t, pu_rate, Event::PuArrivalReserved);
            } else {
                // a' and b' count SU-2 users, not SU-2 channels.
                const int users = z.j1_r + z.j1 + z.j2();
                const double span = p.M - z.i;
                emit(t, (p.M - (z.i + users)) / span * pu_rate, Event::PuArrivalUnreserved);
                emit(t, users / span * pu_rate, Event::PuArrivalHandoff);
            }
        } else if (degradable(z, p)) {
            emit(degrade_one(t), pu_rate, Event::PuArrivalDegradeSu2);
        } else {
            const int su2_held = p.n * z.jn;
            const double victims = z.j1_r + z.j1 + su2_held;
            if (victims > 0) {
                if (z.j1_r > 0) {
                    ReservationState v = t;
                    --v.j1_r;
                    emit(v, pu_rate * z.j1_r / victims, Event::PuArrivalDropSuR1);
                }
                if (z.j1 > 0) {
                    ReservationState v = t;
                    --v.j1;
                    emit(v, pu_rate * z.j1 / victims, Event::PuArrivalDropSu1);
                }
                if (z.jn > 0) {
                    ReservationState v = t;
                    --v.jn;
                    emit(v, pu_rate * su2_held / victims, Event::PuArrivalDropSu2);
                }
            }
        }
    }
    if (z.i > 0) {
        ReservationState t = z;
        --t.i;
        emit(t, z.i * p.mu_p, Event::PuDeparture);
    }

    // SU-R1
    if (auto a = su_r1_admission(z, p)) out.push_back(*a);
    if (z.j1_r > 0) {
        ReservationState t = z;
        --t.j1_r;
        emit(t, z.j1_r * p.mu_s, Event::SuR1Departure);
    }

    // SU-1
    if (auto a = su1_admission(z, p)) out.push_back(*a);
    if (z.j1 > 0) {
        ReservationState t = z;
        --t.j1;
        emit(t, z.j1 * p.mu_s, Event::Su1Departure);
    }

    // SU-2: one departure edge at the full rate j2*mu_s.
    if (auto a = su2_admission(z, p)) out.push_back(*a);
    if (z.j2() > 0) {
        const double rate = z.j2() * p.mu_s;
        ReservationState t = z;
        if (z.jn == 0) {
            --t.jm;
            emit(t, rate, Event::Su2DepartureSimple);
        } else {
            ReservationState up = z;
            ++up.jm;
            up.jn -= 2;
            if (p.aggregation_enabled() && z.jn >= 2 && up.feasible(p)) {
                emit(up, rate, Event::Su2DepartureUpgrade);
            } else {
                --t.jn;
                emit(t, rate, Event::Su2DepartureSimple);
            }
        }
    }

    return out;
}

ReservationSpace enumerate_reservation(const SystemParams& p) {
    std::set<ReservationState> seen{ReservationState{}};
    std::deque<ReservationState> frontier{ReservationState{}};
    while (!frontier.empty()) {
        auto z = frontier.front();
        frontier.pop_front();
        for (const auto& t : reservation_transitions(z, p)) {
            if (!t.target.feasible(p))
                throw InternalError("reservation chain emitted infeasible state " + t.target.to_string() +
                                    " from " + z.to_string());
            if (seen.insert(t.target).second) frontier.push_back(t.target);
        }
    }
    return ReservationSpace(std::vector<ReservationState>(seen.begin(), seen.end()));
}

Generator build_reservation_generator(const SystemParams& p, const ReservationSpace& space) {
    Generator g(space.size());
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        for (const auto& t : reservation_transitions(space[idx], p)) {
            if (!t.target.feasible(p) || !space.contains(t.target))
                throw InternalError("reservation chain emitted state outside the space: " + t.target.to_string() +
                                    " from " + space[idx].to_string());
            g.add(idx, space.index(t.target), t.rate, t.event);
        }
    }
    return g;
}

}  // namespace crn
