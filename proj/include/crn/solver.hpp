#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crn/generator.hpp"
#include "crn/state.hpp"

namespace crn {

enum class SolveMethod { DirectLinear, Uniformization };

struct StationaryDistribution {
    std::vector<double> pi;
    double residual_inf = 0.0;  // ‖πQ‖∞
    SolveMethod method = SolveMethod::DirectLinear;
    long iterations = 0;        // uniformization only
};

constexpr double kDirectTolerance = 1e-10;
constexpr double kUniformizationTolerance = 1e-12;
constexpr long kDefaultMaxIterations = 2'000'000;

/// Solves πQ = 0, Σπ = 1 by dense LU with partial pivoting on Qᵀ with the last
/// balance equation replaced by the normalisation. Chains with a single closed
/// class (transient states allowed) are solvable; chains with several closed
/// classes raise SingularMatrix.
StationaryDistribution solve_direct(const Generator& g, double tol = kDirectTolerance);

/// Power iteration on T = I + Q/Λ, Λ = 1.05·max|q(s,s)|, from the uniform
/// vector until successive iterates differ by less than tol in ∞-norm.
StationaryDistribution solve_uniformization(const Generator& g, double tol = kUniformizationTolerance,
                                            long max_iters = kDefaultMaxIterations);

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b);

/// `state_tuple,probability` rows, probabilities at 17 significant digits.
template <typename State>
void write_distribution_csv(std::ostream& os, const StateSpace<State>& space, const std::vector<double>& pi);

}  // namespace crn
