#include "crn/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

#include <boost/math/distributions/students_t.hpp>

#include "crn/basic_chain.hpp"
#include "crn/error.hpp"
#include "crn/reservation_chain.hpp"

namespace crn {

namespace {

constexpr int kR1 = 0, kSu1 = 1, kSu2 = 2;

// ---------------------------------------------------------------------------
// Event rules, written against raw count vectors.

Counts shifted(Counts c, std::initializer_list<std::pair<int, int>> deltas) {
    for (auto [slot, d] : deltas) c[slot] += d;
    return c;
}

void basic_events(const SystemParams& p, const Counts& c, std::vector<SimEvent>& out) {
    const int pu = c[0], s1 = c[1], s2 = c[2];
    const int free_channels = p.M - pu - s1 - s2;
    const double pu_stream = p.lambda_p * (p.k - pu);
    auto push = [&](Counts to, double rate, Event e) {
        if (rate > 0.0) out.push_back({to, rate, e});
    };

    if (pu < p.k) {
        if (free_channels > 0) {
            const double lands_idle = double(free_channels) / double(p.M - pu);
            const double lands_su = double(s1 + s2) / double(p.M - pu);
            push(shifted(c, {{0, +1}}), pu_stream * lands_idle, Event::PuArrivalIdle);
            push(shifted(c, {{0, +1}}), pu_stream * lands_su, Event::PuArrivalHandoff);
        } else if (s2 > 0) {
            push(shifted(c, {{0, +1}, {2, -1}}), pu_stream, Event::PuArrivalDropSu2);
        } else if (s1 > 0) {
            push(shifted(c, {{0, +1}, {1, -1}}), pu_stream, Event::PuArrivalDropSu1);
        }
    }
    push(shifted(c, {{0, -1}}), pu * p.mu_p, Event::PuDeparture);

    if (free_channels > 0) {
        push(shifted(c, {{1, +1}}), p.lambda_s, Event::Su1Arrival);
        push(shifted(c, {{2, +1}}), p.lambda_s, Event::Su2Arrival);
    } else if (s2 > 0) {
        push(shifted(c, {{1, +1}, {2, -1}}), p.lambda_s, Event::Su1ArrivalDropSu2);
    }
    push(shifted(c, {{1, -1}}), s1 * p.mu_s, Event::Su1Departure);
    push(shifted(c, {{2, -1}}), s2 * p.mu_s, Event::Su2Departure);
}

struct PoolView {
    int pu, r1, s1, wide, narrow;
    int su2_channels;
    int free_channels;
};

PoolView view(const SystemParams& p, const Counts& c) {
    PoolView v{c[0], c[1], c[2], c[3], c[4], 0, 0};
    v.su2_channels = p.m * v.wide + p.n * v.narrow;
    v.free_channels = p.M - (v.pu + v.r1 + v.s1 + v.su2_channels);
    return v;
}

bool admissible(const SystemParams& p, const Counts& c) {
    const auto v = view(p, c);
    return v.pu >= 0 && v.r1 >= 0 && v.s1 >= 0 && v.wide >= 0 && v.narrow >= 0 && v.free_channels >= 0 &&
           v.r1 <= p.M1_prime && v.s1 <= p.M1() && v.su2_channels <= p.M2() && v.pu <= std::min(p.M, p.k);
}

void reservation_events(const SystemParams& p, const Counts& c, std::vector<SimEvent>& out) {
    const auto v = view(p, c);
    const bool can_shrink = p.m > p.n && v.wide > 0;
    const double pu_stream = p.lambda_p * (p.k - v.pu);
    auto push = [&](Counts to, double rate, Event e) {
        if (rate > 0.0) out.push_back({to, rate, e});
    };

    // PUs
    if (v.pu < p.k) {
        if (v.free_channels > 0 && v.pu < p.M_rp) {
            push(shifted(c, {{0, +1}}), pu_stream, Event::PuArrivalReserved);
        } else if (v.free_channels > 0) {
            const int users = v.r1 + v.s1 + v.wide + v.narrow;
            push(shifted(c, {{0, +1}}), pu_stream * double(p.M - v.pu - users) / double(p.M - v.pu),
                 Event::PuArrivalUnreserved);
            push(shifted(c, {{0, +1}}), pu_stream * double(users) / double(p.M - v.pu), Event::PuArrivalHandoff);
        } else if (can_shrink) {
            push(shifted(c, {{0, +1}, {3, -1}, {4, +1}}), pu_stream, Event::PuArrivalDegradeSu2);
        } else {
            const double held = v.r1 + v.s1 + p.n * v.narrow;
            if (held > 0) {
                push(shifted(c, {{0, +1}, {1, -1}}), pu_stream * v.r1 / held, Event::PuArrivalDropSuR1);
                push(shifted(c, {{0, +1}, {2, -1}}), pu_stream * v.s1 / held, Event::PuArrivalDropSu1);
                push(shifted(c, {{0, +1}, {4, -1}}), pu_stream * p.n * v.narrow / held, Event::PuArrivalDropSu2);
            }
        }
    }
    push(shifted(c, {{0, -1}}), v.pu * p.mu_p, Event::PuDeparture);

    // Returned class-1
    if (v.r1 < p.M1_prime) {
        if (v.free_channels > 0)
            push(shifted(c, {{1, +1}}), p.lambda_s, Event::SuR1Arrival);
        else if (can_shrink)
            push(shifted(c, {{1, +1}, {3, -1}, {4, +1}}), p.lambda_s, Event::SuR1ArrivalDegradeSu2);
        else if (v.narrow > p.M_r2)
            push(shifted(c, {{1, +1}, {4, -1}}), p.lambda_s, Event::SuR1ArrivalDropSu2);
        else if (v.s1 > 0)
            push(shifted(c, {{1, +1}, {2, -1}}), p.lambda_s, Event::SuR1ArrivalDropSu1);
    }
    push(shifted(c, {{1, -1}}), v.r1 * p.mu_s, Event::SuR1Departure);

    // Class-1
    if (v.s1 < p.M1()) {
        if (v.free_channels > 0)
            push(shifted(c, {{2, +1}}), p.lambda_s, Event::Su1Arrival);
        else if (can_shrink)
            push(shifted(c, {{2, +1}, {3, -1}, {4, +1}}), p.lambda_s, Event::Su1ArrivalDegradeSu2);
        else if (v.narrow > p.M_r2)
            push(shifted(c, {{2, +1}, {4, -1}}), p.lambda_s, Event::Su1ArrivalDropSu2);
    }
    push(shifted(c, {{2, -1}}), v.s1 * p.mu_s, Event::Su1Departure);

    // Class-2 arrival
    const bool narrow_room = v.free_channels >= p.n && v.su2_channels + p.n <= p.M2();
    if (p.m == p.n) {
        if (narrow_room) push(shifted(c, {{4, +1}}), p.lambda_s, Event::Su2ArrivalNarrow);
    } else if (v.free_channels >= p.m && v.su2_channels + p.m <= p.M2()) {
        push(shifted(c, {{3, +1}}), p.lambda_s, Event::Su2ArrivalAggregate);
    } else if (v.wide > 0 && admissible(p, shifted(c, {{3, -1}, {4, +2}}))) {
        push(shifted(c, {{3, -1}, {4, +2}}), p.lambda_s, Event::Su2ArrivalDegrade);
    } else if (p.su2_min_width_admission && narrow_room) {
        push(shifted(c, {{4, +1}}), p.lambda_s, Event::Su2ArrivalNarrow);
    }

    // Class-2 departure
    const double su2_out = (v.wide + v.narrow) * p.mu_s;
    if (v.narrow == 0) {
        push(shifted(c, {{3, -1}}), su2_out, Event::Su2DepartureSimple);
    } else if (p.m > p.n && v.narrow >= 2 && admissible(p, shifted(c, {{3, +1}, {4, -2}}))) {
        push(shifted(c, {{3, +1}, {4, -2}}), su2_out, Event::Su2DepartureUpgrade);
    } else {
        push(shifted(c, {{4, -1}}), su2_out, Event::Su2DepartureSimple);
    }
}

/// Arrival streams with no enabled event; they count as blocks.
std::vector<int> blocked_classes(const SystemParams& p, ModelKind model, const std::vector<SimEvent>& events) {
    auto has = [&](std::initializer_list<Event> es) {
        for (const auto& e : events)
            for (auto want : es)
                if (e.event == want) return true;
        return false;
    };
    std::vector<int> out;
    if (model == ModelKind::Basic) {
        if (!has({Event::Su1Arrival, Event::Su1ArrivalDropSu2})) out.push_back(kSu1);
        if (!has({Event::Su2Arrival})) out.push_back(kSu2);
        return out;
    }
    if (!has({Event::SuR1Arrival, Event::SuR1ArrivalDegradeSu2, Event::SuR1ArrivalDropSu2, Event::SuR1ArrivalDropSu1}))
        out.push_back(kR1);
    if (!has({Event::Su1Arrival, Event::Su1ArrivalDegradeSu2, Event::Su1ArrivalDropSu2})) out.push_back(kSu1);
    if (!has({Event::Su2ArrivalAggregate, Event::Su2ArrivalDegrade, Event::Su2ArrivalNarrow})) out.push_back(kSu2);
    (void)p;
    return out;
}

// ---------------------------------------------------------------------------
// Replication engine.

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : gen_(seed) {}
    /// Uniform on (0, 1].
    double operator()() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

struct Edge {
    double cumulative;
    Event event;
    Counts to;
    int target = -1;      // resolved lazily
    int blocked = -1;     // class index for a blocked-arrival self-loop
};

struct Node {
    Counts state;
    std::vector<Edge> edges;
    double total_rate = 0.0;
    double time = 0.0;
};

std::uint64_t key_of(const Counts& c) {
    std::uint64_t k = 0;
    for (int v : c) k = k * 4099 + static_cast<std::uint64_t>(v);
    return k;
}

struct Replication {
    std::map<Counts, double> occupancy;  // fraction of post-warmup time
    std::array<ClassCounters, 3> counters{};
};

class Reference {
public:
    Reference(const SystemParams& p, ModelKind model) : model_(model) {
        if (model == ModelKind::Basic) {
            basic_space_ = enumerate_basic(p);
            gen_.emplace(build_basic_generator(p, basic_space_));
        } else {
            res_space_ = enumerate_reservation(p);
            gen_.emplace(build_reservation_generator(p, res_space_));
        }
    }

    void check(const Counts& c, const std::vector<SimEvent>& events) const {
        std::size_t src;
        auto index_of = [&](const Counts& s) -> std::optional<std::size_t> {
            if (model_ == ModelKind::Basic) {
                BasicState b{s[0], s[1], s[2]};
                if (!basic_space_.contains(b)) return std::nullopt;
                return basic_space_.index(b);
            }
            ReservationState z{s[0], s[1], s[2], s[3], s[4]};
            if (!res_space_.contains(z)) return std::nullopt;
            return res_space_.index(z);
        };
        auto idx = index_of(c);
        if (!idx) throw InternalError("simulator visited a state outside the analytical space");
        src = *idx;
        const auto& row = gen_->row(src);
        bool ok = row.size() == events.size();
        for (const auto& e : events) {
            auto t = index_of(e.target);
            bool found = false;
            for (const auto& r : row)
                found = found || (t && r.target == *t && r.event == e.event && std::abs(r.rate - e.rate) <= 1e-12);
            ok = ok && found;
        }
        if (!ok) throw InternalError("simulator event set disagrees with generator row " + std::to_string(src));
    }

private:
    ModelKind model_;
    BasicSpace basic_space_;
    ReservationSpace res_space_;
    std::optional<Generator> gen_;
};

void account(Event e, const Counts& before, ModelKind model, Uniform& rng, std::array<ClassCounters, 3>& k) {
    switch (e) {
        case Event::PuArrivalHandoff: {
            // Pick the handed-off user's class in proportion to user counts.
            std::array<double, 3> w{};
            if (model == ModelKind::Basic) {
                w = {0.0, double(before[1]), double(before[2])};
            } else {
                w = {double(before[1]), double(before[2]), double(before[3] + before[4])};
            }
            double u = rng() * (w[0] + w[1] + w[2]);
            int cls = 2;
            if (u <= w[0]) cls = 0;
            else if (u <= w[0] + w[1]) cls = 1;
            ++k[cls].handoffs;
            break;
        }
        case Event::PuArrivalDropSu2: ++k[kSu2].drops; break;
        case Event::PuArrivalDropSu1: ++k[kSu1].drops; break;
        case Event::PuArrivalDropSuR1: ++k[kR1].drops; break;
        case Event::PuArrivalDegradeSu2: ++k[kSu2].degrades; break;
        case Event::Su1Arrival: ++k[kSu1].admissions; break;
        case Event::Su1ArrivalDropSu2: ++k[kSu1].admissions; ++k[kSu2].drops; break;
        case Event::Su1ArrivalDegradeSu2: ++k[kSu1].admissions; ++k[kSu2].degrades; break;
        case Event::Su1Departure: ++k[kSu1].completions; break;
        case Event::SuR1Arrival: ++k[kR1].admissions; break;
        case Event::SuR1ArrivalDegradeSu2: ++k[kR1].admissions; ++k[kSu2].degrades; break;
        case Event::SuR1ArrivalDropSu2: ++k[kR1].admissions; ++k[kSu2].drops; break;
        case Event::SuR1ArrivalDropSu1: ++k[kR1].admissions; ++k[kSu1].drops; break;
        case Event::SuR1Departure: ++k[kR1].completions; break;
        case Event::Su2Arrival:
        case Event::Su2ArrivalAggregate:
        case Event::Su2ArrivalNarrow: ++k[kSu2].admissions; break;
        case Event::Su2ArrivalDegrade: ++k[kSu2].admissions; ++k[kSu2].degrades; break;
        case Event::Su2Departure:
        case Event::Su2DepartureSimple: ++k[kSu2].completions; break;
        case Event::Su2DepartureUpgrade: ++k[kSu2].completions; ++k[kSu2].upgrades; break;
        case Event::PuArrivalIdle:
        case Event::PuArrivalReserved:
        case Event::PuArrivalUnreserved:
        case Event::PuDeparture: break;
    }
}

Replication run_replication(const SystemParams& p, ModelKind model, const SimConfig& cfg, std::uint64_t seed,
                            const Reference* reference) {
    Uniform rng(seed);
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, int> lookup;
    std::vector<SimEvent> scratch;

    auto node_for = [&](const Counts& c) -> int {
        auto [it, fresh] = lookup.emplace(key_of(c), static_cast<int>(nodes.size()));
        if (!fresh) return it->second;
        scratch.clear();
        simulation_events(p, model, c).swap(scratch);
        if (reference) reference->check(c, scratch);
        Node node;
        node.state = c;
        double cum = 0.0;
        for (const auto& e : scratch) {
            cum += e.rate;
            node.edges.push_back({cum, e.event, e.target});
        }
        for (int cls : blocked_classes(p, model, scratch)) {
            cum += p.lambda_s;
            Edge self{cum, Event::Su1Arrival, c};
            self.blocked = cls;
            node.edges.push_back(self);
        }
        node.total_rate = cum;
        nodes.push_back(std::move(node));
        return it->second;
    };

    Replication rep;
    int current = node_for(Counts{});
    double t = 0.0;
    while (true) {
        Node& node = nodes[current];
        const double dt = node.total_rate > 0.0 ? -std::log(rng()) / node.total_rate
                                                : std::numeric_limits<double>::infinity();
        const double end = std::min(t + dt, cfg.horizon);
        node.time += std::max(0.0, end - std::max(t, cfg.warmup));
        if (t + dt >= cfg.horizon) break;
        t += dt;

        const double pick = rng() * node.total_rate;
        std::size_t e = 0;
        while (e + 1 < node.edges.size() && node.edges[e].cumulative < pick) ++e;

        if (node.edges[e].blocked >= 0) {
            auto& k = rep.counters[node.edges[e].blocked];
            ++k.blocks;
            continue;
        }
        account(node.edges[e].event, node.state, model, rng, rep.counters);
        if (node.edges[e].target < 0) {
            const Counts to = node.edges[e].to;
            const int target = node_for(to);  // may reallocate `nodes`
            nodes[current].edges[e].target = target;
        }
        current = nodes[current].edges[e].target;
    }

    const double window = cfg.horizon - cfg.warmup;
    for (const auto& node : nodes)
        if (node.time > 0.0) rep.occupancy[node.state] = node.time / window;

    const Counts& last = nodes[current].state;
    if (model == ModelKind::Basic) {
        rep.counters[kSu1].in_service_at_end = last[1];
        rep.counters[kSu2].in_service_at_end = last[2];
    } else {
        rep.counters[kR1].in_service_at_end = last[1];
        rep.counters[kSu1].in_service_at_end = last[2];
        rep.counters[kSu2].in_service_at_end = last[3] + last[4];
    }
    for (auto& k : rep.counters) k.arrivals = k.admissions + k.blocks;
    return rep;
}

MetricsReport replication_metrics(const SystemParams& p, ModelKind model, const std::map<Counts, double>& occ) {
    std::vector<double> pi;
    if (model == ModelKind::Basic) {
        std::vector<BasicState> states;
        for (const auto& [c, w] : occ) states.push_back({c[0], c[1], c[2]});
        BasicSpace space(states);
        pi.assign(space.size(), 0.0);
        for (const auto& [c, w] : occ) pi[space.index({c[0], c[1], c[2]})] = w;
        return compute_metrics(space, pi, p);
    }
    std::vector<ReservationState> states;
    for (const auto& [c, w] : occ) states.push_back({c[0], c[1], c[2], c[3], c[4]});
    ReservationSpace space(states);
    pi.assign(space.size(), 0.0);
    for (const auto& [c, w] : occ) pi[space.index({c[0], c[1], c[2], c[3], c[4]})] = w;
    return compute_metrics(space, pi, p);
}

Estimate summarise(const std::vector<double>& xs) {
    Estimate e;
    const double n = static_cast<double>(xs.size());
    for (double x : xs) e.mean += x;
    e.mean /= n;
    if (xs.size() < 2) return e;
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    boost::math::students_t dist(n - 1.0);
    const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
    e.ci_half_width = t * sd / std::sqrt(n);
    return e;
}

double ratio(std::uint64_t num, std::uint64_t den) { return den == 0 ? 0.0 : double(num) / double(den); }

}  // namespace

// ---------------------------------------------------------------------------

ClassCounters& ClassCounters::operator+=(const ClassCounters& o) {
    arrivals += o.arrivals;
    blocks += o.blocks;
    admissions += o.admissions;
    completions += o.completions;
    drops += o.drops;
    handoffs += o.handoffs;
    degrades += o.degrades;
    upgrades += o.upgrades;
    in_service_at_end += o.in_service_at_end;
    return *this;
}

void validate_sim_config(const SimConfig& cfg) {
    if (!(cfg.warmup < cfg.horizon)) throw ValidationError("warmup < horizon violated");
    if (!(cfg.warmup >= 0.0)) throw ValidationError("warmup negative");
    if (cfg.replications < 1) throw ValidationError("replications must be at least 1");
}

std::vector<SimEvent> simulation_events(const SystemParams& p, ModelKind model, const Counts& state) {
    std::vector<SimEvent> out;
    if (model == ModelKind::Basic)
        basic_events(p, state, out);
    else
        reservation_events(p, state, out);
    return out;
}

SimEstimate simulate(const SystemParams& p, ModelKind model, const SimConfig& cfg) {
    validate_structure(p);
    validate_sim_config(cfg);

    std::optional<Reference> reference;
    if (cfg.cross_check) reference.emplace(p, model);

    const auto reps = static_cast<std::size_t>(cfg.replications);
    std::vector<Replication> results(reps);
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(reps));

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t r = w; r < reps; r += workers)
                    results[r] = run_replication(p, model, cfg, derive_seed(cfg.seed, r),
                                                 reference ? &*reference : nullptr);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SimEstimate out;
    out.model = model;
    out.params = p;
    out.config = cfg;

    std::map<Counts, double> pooled;
    std::array<std::vector<double>, 10> columns;
    for (const auto& rep : results) {
        for (const auto& [c, w] : rep.occupancy) pooled[c] += w / static_cast<double>(reps);
        const auto values = replication_metrics(p, model, rep.occupancy).values();
        for (std::size_t col = 0; col < values.size(); ++col)
            if (values[col]) columns[col].push_back(*values[col]);
        for (std::size_t cls = 0; cls < 3; ++cls) out.counters[cls] += rep.counters[cls];
    }
    for (const auto& [c, w] : pooled) {
        out.states.push_back(c);
        out.pi_hat.push_back(w);
    }
    for (std::size_t col = 0; col < columns.size(); ++col)
        if (!columns[col].empty()) out.metrics[col] = summarise(columns[col]);

    const auto& k = out.counters;
    if (model == ModelKind::Reservation) {
        out.raw_blocking.r1 = ratio(k[kR1].blocks, k[kR1].arrivals);
        out.raw_handoff.r1 = ratio(k[kR1].handoffs, k[kR1].admissions);
    }
    out.raw_blocking.su1 = ratio(k[kSu1].blocks, k[kSu1].arrivals);
    out.raw_blocking.su2 = ratio(k[kSu2].blocks, k[kSu2].arrivals);
    out.raw_handoff.su1 = ratio(k[kSu1].handoffs, k[kSu1].admissions);
    out.raw_handoff.su2 = ratio(k[kSu2].handoffs, k[kSu2].admissions);
    return out;
}

std::vector<double> SimEstimate::pi_on(const BasicSpace& space) const {
    std::vector<double> pi(space.size(), 0.0);
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
        BasicState s{states[idx][0], states[idx][1], states[idx][2]};
        if (space.contains(s)) pi[space.index(s)] = pi_hat[idx];
    }
    return pi;
}

std::vector<double> SimEstimate::pi_on(const ReservationSpace& space) const {
    std::vector<double> pi(space.size(), 0.0);
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
        const auto& c = states[idx];
        ReservationState z{c[0], c[1], c[2], c[3], c[4]};
        if (space.contains(z)) pi[space.index(z)] = pi_hat[idx];
    }
    return pi;
}

nlohmann::json SimEstimate::to_json() const {
    using nlohmann::json;
    json j;
    j["model"] = std::string(to_string(model));
    j["params"] = params_to_json(params);
    j["config"] = {{"horizon", config.horizon},
                   {"warmup", config.warmup},
                   {"replications", config.replications},
                   {"seed", config.seed}};

    json est = json::object();
    for (std::size_t col = 0; col < metrics.size(); ++col)
        if (metrics[col])
            est[std::string(metric_columns()[col])] = {{"mean", metrics[col]->mean},
                                                       {"ci95_half_width", metrics[col]->ci_half_width}};
    j["estimates"] = est;

    auto per_class = [&](const PerClass& pc) {
        json o = {{"su1", pc.su1}, {"su2", pc.su2}};
        if (pc.r1) o["r1"] = *pc.r1;
        return o;
    };
    j["raw_ratios"] = {{"blocking", per_class(raw_blocking)}, {"handoff", per_class(raw_handoff)}};

    static const char* names[3] = {"r1", "su1", "su2"};
    json counters_json = json::object();
    for (std::size_t cls = 0; cls < 3; ++cls) {
        if (model == ModelKind::Basic && cls == kR1) continue;
        const auto& c = counters[cls];
        counters_json[names[cls]] = {{"arrivals", c.arrivals},       {"blocks", c.blocks},
                                     {"admissions", c.admissions},   {"completions", c.completions},
                                     {"drops", c.drops},             {"handoffs", c.handoffs},
                                     {"degrades", c.degrades},       {"upgrades", c.upgrades},
                                     {"in_service_at_end", c.in_service_at_end}};
    }
    j["counters"] = counters_json;

    json occ = json::array();
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
        json tuple = json::array();
        const int width = model == ModelKind::Basic ? 3 : 5;
        for (int slot = 0; slot < width; ++slot) tuple.push_back(states[idx][slot]);
        occ.push_back({{"state", tuple}, {"probability", pi_hat[idx]}});
    }
    j["pi_hat"] = occ;
    return j;
}

std::string SimEstimate::csv_header() const {
    std::string h = metrics_csv_header();
    for (auto c : metric_columns()) h += ",ci_" + std::string(c);
    return h;
}

std::string SimEstimate::csv_row() const {
    std::string row(to_string(model));
    row += ',' + format_real(params.lambda_s) + ',' + format_real(params.mu_s);
    for (const auto& m : metrics) {
        row += ',';
        if (m) row += format_real(m->mean);
    }
    for (const auto& m : metrics) {
        row += ',';
        if (m) row += format_real(m->ci_half_width);
    }
    return row;
}

}  // namespace crn
