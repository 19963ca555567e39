#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crn/basic_chain.hpp"
#include "crn/complexity.hpp"
#include "test_support.hpp"

using namespace crn;

namespace {

// Lattice points i + j1 + j2 <= M by brute force over the cube.
std::size_t lattice_count(int M) {
    std::size_t count = 0;
    for (int i = 0; i <= M; ++i)
        for (int j1 = 0; j1 <= M; ++j1)
            for (int j2 = 0; j2 <= M; ++j2)
                if (i + j1 + j2 <= M) ++count;
    return count;
}

}  // namespace

TEST_CASE("enumeration of small systems") {
    CHECK(enumerate_basic(0, 10).states() == std::vector<BasicState>{{0, 0, 0}});
    CHECK(enumerate_basic(1, 1).states() == std::vector<BasicState>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(enumerate_basic(reference_params()).size() == 120);
    CHECK(lattice_count(7) == 120);
}

TEST_CASE("state count equals the cubic closed form for M = 0..12") {
    for (int M = 0; M <= 12; ++M) {
        CAPTURE(M);
        const auto n = enumerate_basic(M, 100).size();
        CHECK(n == lattice_count(M));
        CHECK(static_cast<std::int64_t>(n) == state_count_basic(M));
    }
}

TEST_CASE("PU count is capped by the population size") {
    for (const auto& s : enumerate_basic(5, 2)) CHECK(s.i <= 2);
}

TEST_CASE("out-edges of the empty state at the reference point") {
    const auto p = reference_params();
    const auto edges = basic_transitions({0, 0, 0}, p);
    REQUIRE(edges.size() == 3);  // b = 0 is omitted
    CHECK(edges[0].target == BasicState{1, 0, 0});
    CHECK(edges[0].event == Event::PuArrivalIdle);
    CHECK(edges[0].rate == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(edges[1].target == BasicState{0, 1, 0});
    CHECK(edges[1].rate == 0.25);
    CHECK(edges[2].target == BasicState{0, 0, 1});
    CHECK(edges[2].rate == 0.25);
}

TEST_CASE("system full of PUs only lets PUs leave") {
    auto p = reference_params();
    const auto edges = basic_transitions({p.M, 0, 0}, p);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].event == Event::PuDeparture);
    CHECK(edges[0].rate == doctest::Approx(p.M * p.mu_p));
}

TEST_CASE("full system preempts SU-2 before SU-1") {
    const auto p = reference_params();
    const auto edges = basic_transitions({3, 2, 2}, p);
    auto find = [&](Event e) {
        return std::find_if(edges.begin(), edges.end(), [e](const auto& t) { return t.event == e; });
    };
    REQUIRE(find(Event::PuArrivalDropSu2) != edges.end());
    CHECK(find(Event::PuArrivalDropSu2)->target == BasicState{4, 2, 1});
    CHECK(find(Event::PuArrivalDropSu2)->rate == doctest::Approx(7 * 0.05));
    CHECK(find(Event::PuArrivalDropSu1) == edges.end());
    CHECK(find(Event::Su1ArrivalDropSu2)->target == BasicState{3, 3, 1});
    CHECK(find(Event::Su2Arrival) == edges.end());
    CHECK(basic_su2_blocked({3, 2, 2}, p));
    CHECK_FALSE(basic_su1_blocked({3, 2, 2}, p));
    CHECK(basic_su1_blocked({3, 4, 0}, p));
}

TEST_CASE("idle and handoff landing rates add to the PU stream") {
    const auto p = reference_params();
    for (const auto& s : enumerate_basic(p)) {
        if (s.idle(p) == 0 || s.i >= p.k) continue;
        double a = 0.0, b = 0.0;
        for (const auto& t : basic_transitions(s, p)) {
            if (t.event == Event::PuArrivalIdle) a += t.rate;
            if (t.event == Event::PuArrivalHandoff) b += t.rate;
        }
        CHECK(std::abs(a + b - (p.k - s.i) * p.lambda_p) <= 1e-12);
    }
}

TEST_CASE("generator is a valid, irreducible rate matrix") {
    for (int M = 1; M <= 8; ++M) {
        auto p = reference_params();
        p.M = M;
        p.M_rp = p.M1_prime = p.M_r2 = 0;
        p.k = M + 2;
        const auto g = build_basic_generator(p, enumerate_basic(p));
        CAPTURE(M);
        CHECK(test::max_row_sum(g) <= 1e-12);
        CHECK(test::min_off_diagonal(g) >= 0.0);
        CHECK(g.strongly_connected());
    }
    const auto p = reference_params();
    CHECK(build_basic_generator(p, enumerate_basic(p)).strongly_connected());
}

TEST_CASE("triple export of the one-channel chain") {
    SystemParams p;
    p.M = 1;
    p.k = 1;
    p.lambda_p = 1;
    p.mu_p = 2;
    p.lambda_s = 3;
    p.mu_s = 4;
    std::ostringstream os;
    build_basic_generator(p, enumerate_basic(p)).write_triples(os);
    // states: 0=(0,0,0) 1=(0,0,1) 2=(0,1,0) 3=(1,0,0)
    CHECK(os.str() ==
          "0 1 3 Su2Arrival\n"
          "0 2 3 Su1Arrival\n"
          "0 3 1 PuArrivalIdle\n"
          "1 0 4 Su2Departure\n"
          "1 2 3 Su1ArrivalDropSu2\n"
          "1 3 1 PuArrivalDropSu2\n"
          "2 0 4 Su1Departure\n"
          "2 3 1 PuArrivalDropSu1\n"
          "3 0 2 PuDeparture\n");
}

TEST_CASE("handoff and idle landings keep distinct labels on one entry") {
    const auto p = reference_params();
    const auto space = enumerate_basic(p);
    const auto g = build_basic_generator(p, space);
    const auto src = space.index({2, 1, 1});
    const auto dst = space.index({3, 1, 1});
    int labels = 0;
    for (const auto& t : g.row(src)) labels += t.target == dst;
    CHECK(labels == 2);
    CHECK(g.rate(src, dst) == doctest::Approx(8 * 0.05));
}
