#include "crn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <Eigen/LU>

#include "crn/error.hpp"

namespace crn {

namespace {

constexpr double kClampFloor = -1e-14;
constexpr double kPivotFloor = 1e-13;

void clamp_and_normalise(std::vector<double>& pi) {
    for (double& v : pi) {
        if (!std::isfinite(v)) throw NumericalError("non-finite probability in stationary vector");
        if (v < kClampFloor) throw NumericalError("negative probability " + std::to_string(v) + " in stationary vector");
        if (v < 0.0) v = 0.0;
    }
    const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
    if (!(total > 0.0)) throw NumericalError("stationary vector sums to zero");
    for (double& v : pi) v /= total;
}

}  // namespace

StationaryDistribution solve_direct(const Generator& g, double tol) {
    const auto n = static_cast<Eigen::Index>(g.dimension());
    if (n == 0) throw NumericalError("empty generator");

    Eigen::MatrixXd a = g.to_dense().transpose();
    a.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot <= kPivotFloor * scale)
        throw SingularMatrix("generator has more than one closed class (pivot " + std::to_string(min_pivot) + ")");

    Eigen::VectorXd x = lu.solve(rhs);
    StationaryDistribution out;
    out.method = SolveMethod::DirectLinear;
    out.pi.assign(x.data(), x.data() + n);
    clamp_and_normalise(out.pi);
    out.residual_inf = g.left_residual(out.pi);
    if (out.residual_inf > tol) throw ResidualTooLarge(out.residual_inf, tol);
    return out;
}

StationaryDistribution solve_uniformization(const Generator& g, double tol, long max_iters) {
    const std::size_t n = g.dimension();
    if (n == 0) throw NumericalError("empty generator");

    StationaryDistribution out;
    out.method = SolveMethod::Uniformization;
    const double lambda = 1.05 * g.max_exit_rate();
    if (lambda == 0.0) {
        // No transitions at all: only a single state has a unique answer.
        if (n != 1) throw SingularMatrix("generator without transitions has several closed classes");
        out.pi = {1.0};
        return out;
    }

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    std::vector<double> stay(n);
    for (std::size_t s = 0; s < n; ++s) stay[s] = 1.0 - g.exit_rate(s) / lambda;

    for (long it = 1; it <= max_iters; ++it) {
        for (std::size_t s = 0; s < n; ++s) next[s] = x[s] * stay[s];
        for (std::size_t s = 0; s < n; ++s) {
            const double mass = x[s] / lambda;
            for (const auto& t : g.row(s))
                if (t.target != s) next[t.target] += mass * t.rate;
        }
        double delta = 0.0;
        for (std::size_t s = 0; s < n; ++s) delta = std::max(delta, std::abs(next[s] - x[s]));
        x.swap(next);
        if (delta < tol) {
            out.pi = std::move(x);
            out.iterations = it;
            clamp_and_normalise(out.pi);
            out.residual_inf = g.left_residual(out.pi);
            return out;
        }
    }
    throw NoConvergence(max_iters);
}

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    double d = 0.0;
    for (std::size_t idx = 0; idx < a.size(); ++idx) d = std::max(d, std::abs(a[idx] - b[idx]));
    return d;
}

template <typename State>
void write_distribution_csv(std::ostream& os, const StateSpace<State>& space, const std::vector<double>& pi) {
    os << "state_tuple,probability\n";
    char buf[64];
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        std::snprintf(buf, sizeof buf, "%.17g", pi.at(idx));
        os << '"' << space[idx].to_string() << "\"," << buf << '\n';
    }
}

template void write_distribution_csv<BasicState>(std::ostream&, const BasicSpace&, const std::vector<double>&);
template void write_distribution_csv<ReservationState>(std::ostream&, const ReservationSpace&,
                                                       const std::vector<double>&);

}  // namespace crn
