#include "crn/metrics.hpp"

#include <cstdio>
#include <stdexcept>

#include "crn/basic_chain.hpp"
#include "crn/error.hpp"
#include "crn/reservation_chain.hpp"

namespace crn {

namespace {

void check_sizes(std::size_t space, std::size_t pi) {
    if (space != pi) throw std::invalid_argument("distribution length does not match state space");
}

/// Share of the total (PU + SU) arrival stream seen at a state: λs / ((k-i)λp + λs).
double su_arrival_share(int i, const SystemParams& p) {
    const double total = (p.k - i) * p.lambda_p + p.lambda_s;
    return total > 0.0 ? p.lambda_s / total : 0.0;
}

/// Rate at which a PU lands on an SU-held channel, per unit f(j):
/// (k-i)λp / ((M-i) ((k-i)λp + λs)).
double landing_weight(int i, const SystemParams& p) {
    const double pu = (p.k - i) * p.lambda_p;
    return pu > 0.0 ? pu / ((p.M - i) * (pu + p.lambda_s)) : 0.0;
}

/// Divides by f(P_b) = 1 - P_b, reporting 0 with a flag when P_b == 1.
double normalise_handoff(double sum, double pb, bool& degenerate) {
    if (pb >= 1.0) {
        degenerate = true;
        return 0.0;
    }
    return sum / (1.0 - pb);
}

}  // namespace

std::string_view to_string(ModelKind m) noexcept { return m == ModelKind::Basic ? "basic" : "reservation"; }

ModelKind model_from_string(std::string_view s) {
    if (s == "basic") return ModelKind::Basic;
    if (s == "reservation") return ModelKind::Reservation;
    throw ValidationError("unknown model '" + std::string(s) + "'");
}

const std::array<std::string_view, 10>& metric_columns() {
    static const std::array<std::string_view, 10> cols = {"rho_1", "rho_2", "rho_r1", "U",    "Pb_r1",
                                                          "Pb_1",  "Pb_2",  "Ph_r1",  "Ph_1", "Ph_2"};
    return cols;
}

std::array<std::optional<double>, 10> MetricsReport::values() const {
    return {capacity.su1,  capacity.su2,        capacity.r1,         utilization,        blocking.r1,
            blocking.su1,  blocking.su2,        handoff.value.r1,    handoff.value.su1,  handoff.value.su2};
}

PerClass capacity(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    PerClass out;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        out.su1 += space[idx].j1 * p.mu_s * pi[idx];
        out.su2 += space[idx].j2 * p.mu_s * pi[idx];
    }
    return out;
}

PerClass capacity(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    PerClass out;
    out.r1 = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const auto& z = space[idx];
        *out.r1 += z.j1_r * p.mu_s * pi[idx];
        out.su1 += z.j1 * p.mu_s * pi[idx];
        out.su2 += z.su2_channels(p) * p.mu_s * pi[idx];
    }
    return out;
}

double utilization(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    double u = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx)
        u += static_cast<double>(space[idx].occupied()) / p.M * pi[idx];
    return u;
}

double utilization(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    double u = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx)
        u += static_cast<double>(space[idx].occupied(p)) / p.M * pi[idx];
    return u;
}

PerClass blocking(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    PerClass out;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const auto& s = space[idx];
        const double w = su_arrival_share(s.i, p) * pi[idx];
        if (basic_su1_blocked(s, p)) out.su1 += w;
        if (basic_su2_blocked(s, p)) out.su2 += w;
    }
    return out;
}

PerClass blocking(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    check_sizes(space.size(), pi.size());
    PerClass out;
    out.r1 = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const auto& z = space[idx];
        const double w = su_arrival_share(z.i, p) * pi[idx];
        if (reservation_r1_blocked(z, p)) *out.r1 += w;
        if (reservation_su1_blocked(z, p)) out.su1 += w;
        if (reservation_su2_blocked(z, p)) out.su2 += w;
    }
    return out;
}

HandoffReport handoff(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p,
                      const PerClass& b) {
    check_sizes(space.size(), pi.size());
    double h1 = 0.0, h2 = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const auto& s = space[idx];
        if (s.idle(p) <= 0) continue;  // a PU landing on an SU must find a free channel to move it to
        const double w = landing_weight(s.i, p) * pi[idx];
        if (s.j1 >= 1) h1 += s.j1 * w;
        if (s.j2 >= 1) h2 += (s.j1 + s.j2) * w;  // f = j1 + j2 for class 2 as well
    }
    HandoffReport out;
    out.value.su1 = normalise_handoff(h1, b.su1, out.degenerate_su1);
    out.value.su2 = normalise_handoff(h2, b.su2, out.degenerate_su2);
    return out;
}

// Index-set conditions in literal form:
//   R1:  i=M_rp..M; j'_1=M'_1; M_x=M, j_m>0; M_x<M, j_m=j_n=0; M_x<M, j_n=0
//   SU1: i=M_rp..M; j_1=1..M-M'_1; M_x<M, j_n=0; M_x=M, j_m>0; M_x<M, j_m=j_n=0
//   SU2: i=M_rp..M; M_x=M, j_2!=0, j_m>0; M_x<M, j_n=0, j_m!=0; M_x<M, j_m=0, j_n!=0;
//        M_x<M, j_m!=0, j_n!=0
// Evaluated here as: a free channel exists, i >= M_rp (handoffs only happen on
// unreserved PU arrivals), and the class itself is present.
HandoffReport handoff(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p,
                      const PerClass& b) {
    check_sizes(space.size(), pi.size());
    double hr = 0.0, h1 = 0.0, h2 = 0.0;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const auto& z = space[idx];
        if (z.idle(p) <= 0 || z.i < p.M_rp) continue;
        const double w = landing_weight(z.i, p) * pi[idx];
        if (z.j1_r >= 1) hr += z.j1_r * w;
        if (z.j1 >= 1) h1 += (z.j1_r + z.j1) * w;
        if (z.j2() >= 1) h2 += (z.j1_r + z.j1 + z.j2()) * w;
    }
    HandoffReport out;
    out.value.r1 = normalise_handoff(hr, b.r1.value_or(0.0), out.degenerate_r1);
    out.value.su1 = normalise_handoff(h1, b.su1, out.degenerate_su1);
    out.value.su2 = normalise_handoff(h2, b.su2, out.degenerate_su2);
    return out;
}

namespace {

template <typename Space>
MetricsReport compute_any(ModelKind kind, const Space& space, const std::vector<double>& pi, const SystemParams& p) {
    MetricsReport r;
    r.model = kind;
    r.lambda_s = p.lambda_s;
    r.mu_s = p.mu_s;
    r.capacity = capacity(space, pi, p);
    r.utilization = utilization(space, pi, p);
    r.blocking = blocking(space, pi, p);
    r.handoff = handoff(space, pi, p, r.blocking);
    return r;
}

}  // namespace

MetricsReport compute_metrics(const BasicSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    return compute_any(ModelKind::Basic, space, pi, p);
}

MetricsReport compute_metrics(const ReservationSpace& space, const std::vector<double>& pi, const SystemParams& p) {
    return compute_any(ModelKind::Reservation, space, pi, p);
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string metrics_csv_header() {
    std::string h = "model,lambda_s,mu_s";
    for (auto c : metric_columns()) {
        h += ',';
        h += c;
    }
    return h;
}

std::string metrics_csv_row(const MetricsReport& r) {
    std::string row(to_string(r.model));
    row += ',' + format_real(r.lambda_s) + ',' + format_real(r.mu_s);
    for (const auto& v : r.values()) {
        row += ',';
        if (v) row += format_real(*v);
    }
    return row;
}

}  // namespace crn
