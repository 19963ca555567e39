#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "crn/generator.hpp"
#include "crn/params.hpp"

namespace crn::test {

inline double max_row_sum(const Generator& g) {
    const Eigen::MatrixXd q = g.to_dense();
    return q.rowwise().sum().cwiseAbs().maxCoeff();
}

inline double min_off_diagonal(const Generator& g) {
    Eigen::MatrixXd q = g.to_dense();
    q.diagonal().setZero();
    return q.minCoeff();
}

/// Finite-source PU marginal: π(i) ∝ C(k, i) (λp/μp)^i for i <= min(M, k).
inline std::vector<double> engset_marginal(int M, int k, double lambda_p, double mu_p) {
    const int top = std::min(M, k);
    std::vector<double> w(top + 1);
    double binom = 1.0;
    for (int i = 0; i <= top; ++i) {
        w[i] = binom * std::pow(lambda_p / mu_p, i);
        binom = binom * (k - i) / (i + 1);
    }
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;
    return w;
}

/// Small valid parameter sets with every reservation knob varied.
inline SystemParams random_params(std::mt19937& rng, int max_M = 6) {
    std::uniform_int_distribution<int> channels(1, max_M);
    std::uniform_real_distribution<double> rate(0.05, 1.5);
    SystemParams p;
    while (true) {
        p.M = channels(rng);
        p.k = std::uniform_int_distribution<int>(1, max_M + 3)(rng);
        p.M_rp = std::uniform_int_distribution<int>(0, p.M)(rng);
        p.M1_prime = std::uniform_int_distribution<int>(0, 2)(rng);
        p.M_r2 = std::uniform_int_distribution<int>(0, 2)(rng);
        p.n = std::uniform_int_distribution<int>(1, 2)(rng);
        p.m = p.n + std::uniform_int_distribution<int>(0, 2)(rng);
        p.lambda_p = rate(rng);
        p.mu_p = rate(rng);
        p.lambda_s = rate(rng);
        p.mu_s = rate(rng);
        p.su2_min_width_admission = std::bernoulli_distribution(0.7)(rng);
        if (p.M1() >= 0 && p.M2() >= 0) return p;
    }
}

}  // namespace crn::test
