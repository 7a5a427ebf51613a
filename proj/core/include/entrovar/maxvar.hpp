#ifndef ENTROVAR_MAXVAR_HPP
#define ENTROVAR_MAXVAR_HPP

#include <cstddef>

#include <Eigen/Core>

#include "entrovar/types.hpp"

namespace entrovar {

/// A stationary point of the variance parameter on the m-simplex: k bins at
/// probability p0 and m-k bins at q0. The root coordinate is v = 2 k p0 - 1;
/// the stationarity condition f(v) = 2 - v ln((m-k)/k) has one negative and
/// one positive root. p0, q0 and lambda0 are taken at the root of smaller
/// magnitude, which yields the larger variance parameter 1/v^2 - 1.
struct MaxVarSolution {
    std::size_t m = 0;
    std::size_t k = 0;
    double v_neg = 0.0;   // negative root
    double v_pos = 0.0;   // positive root
    double v = 0.0;       // chosen root (smaller magnitude)
    double p0 = 0.0;      // probability of each of the k outlier bins
    double q0 = 0.0;      // probability of each of the m-k remaining bins
    double lambda0 = 0.0; // 1/v^2 - 1 at the chosen root, nats^2
};

/// f(v) = v ln((1+v)/(1-v)); even, non-negative, minimum f(0) = 0.
/// Throws DomainError for |v| >= 1.
double f_of_v(double v);

/// Solves the stationarity condition for the given (m, k), 1 <= k <= m-1.
/// Both roots are bracketed and bisection/secant-refined to machine width.
MaxVarSolution solve_stationary(std::size_t m, std::size_t k);

/// Global maximizer of the variance parameter for support size m >= 2
/// (the k = 1 stationary point). Cached per m; the cache is shared and
/// guarded, recomputation being pure makes concurrent writes idempotent.
MaxVarSolution max_variance(std::size_t m);

/// Closed-form approximation of the k = 1 root,
/// sqrt(ln^2(m-1)/16 + 1) - ln(m-1)/4. Good to ~5% for m >= 10.
double approx_root(std::size_t m);

/// Large-m limit of the maximum variance parameter, ln^2(m)/4.
double lambda0_max_asymptotic(std::size_t m);

/// Materializes the stationary distribution: k bins at p0 starting at
/// outlier_index (wrapping around), the rest at q0. There are exactly m
/// equivalent choices of outlier_index.
ProbabilityDistribution build_stationary_distribution(const MaxVarSolution& sol,
                                                      std::size_t outlier_index = 0);

/// Hessian of the variance parameter at the k = 1 maximum, in the m-1
/// reduced coordinates (the outlier bin is the dependent one):
/// d2L/ds_i ds_j = -ln(p0/q0) [delta_ij/q0 - 1/p0 + 2 ln(p0/q0)].
/// Symmetric negative definite.
Eigen::MatrixXd hessian_at_max(std::size_t m);

} // namespace entrovar

#endif
