#include <doctest.h>

#include <cmath>
#include <random>

#include "crn/basic_chain.hpp"
#include "crn/complexity.hpp"
#include "crn/reservation_chain.hpp"
#include "crn/solver.hpp"
#include "crn/metrics.hpp"
#include "test_support.hpp"

using namespace crn;

namespace {

template <typename Space>
std::vector<double> point_mass(const Space& space, const typename Space::value_type& s) {
    std::vector<double> pi(space.size(), 0.0);
    pi[space.index(s)] = 1.0;
    return pi;
}

// Stationary flow through edges carrying any of the given labels.
double label_flow(const Generator& g, const std::vector<double>& pi, std::initializer_list<Event> events) {
    double f = 0.0;
    for (std::size_t s = 0; s < g.dimension(); ++s)
        for (const auto& t : g.row(s))
            for (Event e : events)
                if (t.event == e) f += pi[s] * t.rate;
    return f;
}

bool has_event(const std::vector<StateTransition<ReservationState>>& ts, std::initializer_list<Event> events) {
    for (const auto& t : ts)
        for (Event e : events)
            if (t.event == e) return true;
    return false;
}

}  // namespace

TEST_CASE("point mass in a full system") {
    auto p = reference_params();
    p.M = 3;
    p.M_rp = p.M1_prime = p.M_r2 = 0;
    const auto space = enumerate_basic(p);
    const auto r = compute_metrics(space, point_mass(space, {0, 2, 1}), p);
    CHECK(r.capacity.su1 == doctest::Approx(2 * p.mu_s));
    CHECK(r.capacity.su2 == doctest::Approx(p.mu_s));
    CHECK_FALSE(r.capacity.r1.has_value());
    CHECK(r.utilization == doctest::Approx(1.0));
    const double share = p.lambda_s / (p.k * p.lambda_p + p.lambda_s);
    CHECK(r.blocking.su1 == 0.0);  // an SU-2 can be pushed out
    CHECK(r.blocking.su2 == doctest::Approx(share));
    CHECK(r.handoff.value.su1 == 0.0);  // nowhere to hand off to
}

TEST_CASE("handoff from a single SU-1 with one spare channel") {
    SystemParams p = reference_params();
    p.M = 2;
    p.k = 1;
    p.M_rp = p.M1_prime = p.M_r2 = 0;
    p.lambda_p = 0.3;
    p.lambda_s = 0.7;
    const auto space = enumerate_basic(p);
    const auto r = compute_metrics(space, point_mass(space, {0, 1, 0}), p);
    // 0.3 / (2 * (0.3 + 0.7)) per SU-1 user
    CHECK(r.handoff.value.su1 == doctest::Approx(0.15).epsilon(1e-14));
    CHECK(r.handoff.value.su2 == 0.0);
    CHECK(r.blocking.su1 == 0.0);
}

TEST_CASE("every arrival blocked reports a degenerate handoff") {
    SystemParams p = reference_params();
    p.M = 2;
    p.k = 2;
    p.M_rp = p.M1_prime = p.M_r2 = 0;
    const auto space = enumerate_basic(p);
    const auto r = compute_metrics(space, point_mass(space, {2, 0, 0}), p);
    CHECK(r.blocking.su1 == doctest::Approx(1.0));
    CHECK(r.blocking.su2 == doctest::Approx(1.0));
    CHECK(r.handoff.degenerate_su1);
    CHECK(r.handoff.degenerate_su2);
    CHECK(r.handoff.value.su1 == 0.0);
    CHECK(std::isfinite(r.handoff.value.su2));
}

TEST_CASE("reservation SU-2 capacity is channel weighted") {
    const auto p = reference_params();
    const auto space = enumerate_reservation(p);
    const auto r = compute_metrics(space, point_mass(space, {0, 0, 0, 1, 2}), p);
    CHECK(r.capacity.su2 == doctest::Approx((2 * 1 + 1 * 2) * p.mu_s));
    CHECK(r.capacity.r1 == doctest::Approx(0.0));
    CHECK(r.utilization == doctest::Approx(4.0 / 7.0));
}

TEST_CASE("blocked sets coincide with arrivals that emit no edge") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = test::random_params(rng, 5);
        for (const auto& z : enumerate_reservation(p)) {
            const auto ts = reservation_transitions(z, p);
            CHECK(reservation_r1_blocked(z, p) ==
                  !has_event(ts, {Event::SuR1Arrival, Event::SuR1ArrivalDegradeSu2, Event::SuR1ArrivalDropSu2,
                                  Event::SuR1ArrivalDropSu1}));
            CHECK(reservation_su1_blocked(z, p) ==
                  !has_event(ts, {Event::Su1Arrival, Event::Su1ArrivalDegradeSu2, Event::Su1ArrivalDropSu2}));
            CHECK(reservation_su2_blocked(z, p) ==
                  !has_event(ts, {Event::Su2ArrivalAggregate, Event::Su2ArrivalDegrade, Event::Su2ArrivalNarrow}));
        }
        for (const auto& s : enumerate_basic(p)) {
            // SU-1 blocked when all channels busy and no SU-2 to preempt.
            CHECK(basic_su1_blocked(s, p) == (s.occupied() == p.M && s.j2 == 0));
            CHECK(basic_su2_blocked(s, p) == (s.occupied() == p.M));
        }
    }
}

TEST_CASE("metrics stay within their ranges") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = test::random_params(rng, 5);
        const auto bs = enumerate_basic(p);
        const auto rs = enumerate_reservation(p);
        const auto rb = compute_metrics(bs, solve_direct(build_basic_generator(p, bs)).pi, p);
        const auto rr = compute_metrics(rs, solve_direct(build_reservation_generator(p, rs)).pi, p);
        for (const auto* r : {&rb, &rr}) {
            const auto v = r->values();
            for (int c = 0; c < 10; ++c) {
                if (!v[c]) continue;
                CHECK(*v[c] >= -1e-12);
                if (c >= 3) CHECK(*v[c] <= 1.0 + 1e-12);  // U and probabilities
            }
        }
        CHECK(rb.capacity.su1 <= p.M * p.mu_s);
        CHECK(rr.capacity.r1.has_value());
        CHECK_FALSE(rb.blocking.r1.has_value());
    }
}

TEST_CASE("capacity equals the stationary departure flow") {
    const auto p = reference_params();
    {
        const auto space = enumerate_basic(p);
        const auto g = build_basic_generator(p, space);
        const auto pi = solve_direct(g).pi;
        const auto c = capacity(space, pi, p);
        CHECK(c.su1 == doctest::Approx(label_flow(g, pi, {Event::Su1Departure})).epsilon(1e-12));
        CHECK(c.su2 == doctest::Approx(label_flow(g, pi, {Event::Su2Departure})).epsilon(1e-12));

        // SU-1 admissions = completions + preemptions.
        double admitted = 0.0;
        for (std::size_t s = 0; s < space.size(); ++s)
            if (!basic_su1_blocked(space[s], p)) admitted += p.lambda_s * pi[s];
        CHECK(admitted == doctest::Approx(c.su1 + label_flow(g, pi, {Event::PuArrivalDropSu1})).epsilon(1e-10));
    }
    {
        const auto space = enumerate_reservation(p);
        const auto g = build_reservation_generator(p, space);
        const auto pi = solve_direct(g).pi;
        const auto c = capacity(space, pi, p);
        CHECK(*c.r1 == doctest::Approx(label_flow(g, pi, {Event::SuR1Departure})).epsilon(1e-12));
        CHECK(c.su1 == doctest::Approx(label_flow(g, pi, {Event::Su1Departure})).epsilon(1e-12));
        // Channel weighting makes SU-2 capacity at least its user departure flow.
        CHECK(c.su2 >= label_flow(g, pi, {Event::Su2DepartureSimple, Event::Su2DepartureUpgrade}) - 1e-12);
    }
}

TEST_CASE("reservation metrics at the reference point") {
    const auto p = reference_params();
    const auto space = enumerate_reservation(p);
    const auto r = compute_metrics(space, solve_direct(build_reservation_generator(p, space)).pi, p);
    // R1 requests compete for a single reserved channel.
    CHECK(*r.blocking.r1 > r.blocking.su1);
    CHECK(r.utilization > compute_metrics(enumerate_basic(p), solve_direct(build_basic_generator(p, enumerate_basic(p))).pi, p)
                              .utilization);
}

TEST_CASE("closed-form state counts") {
    CHECK(state_count_basic(7) == 120);
    CHECK(state_count_basic(0) == 1);
    CHECK(state_count_reservation(3) == 4);
    CHECK(state_count_reservation(7) == 154);
    CHECK(state_count_reservation(1) < 0);
    for (int M = 4; M <= 20; ++M) {
        CAPTURE(M);
        CHECK(state_count_reservation(M, 2) == state_count_reservation(M));
    }
}

TEST_CASE("CSV rendering") {
    MetricsReport r;
    r.model = ModelKind::Basic;
    r.lambda_s = 0.25;
    r.mu_s = 0.5;
    r.capacity.su1 = 1.0 / 3.0;
    CHECK(metrics_csv_header() == "model,lambda_s,mu_s,rho_1,rho_2,rho_r1,U,Pb_r1,Pb_1,Pb_2,Ph_r1,Ph_1,Ph_2");
    CHECK(metrics_csv_row(r) == "basic,0.25,0.5,0.333333333333,0,,0,,0,0,,0,0");
    CHECK(model_from_string("reservation") == ModelKind::Reservation);
    CHECK_THROWS(model_from_string("proposed"));
}
