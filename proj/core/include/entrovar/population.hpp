#ifndef ENTROVAR_POPULATION_HPP
#define ENTROVAR_POPULATION_HPP

#include <Eigen/Core>

#include "entrovar/types.hpp"

namespace entrovar {

/// Exact functionals of a known distribution, all in nats (natural log).
/// gamma is the 1/N bias coefficient and big_gamma the 1/N variance
/// coefficient of the plug-in estimator of the variance parameter.
struct PopulationStats {
    double h = 0.0;         // Shannon entropy, nats
    double lambda0 = 0.0;   // variance parameter, nats^2
    double mu3 = 0.0;       // third log-moment, nats^3
    double mu4 = 0.0;       // fourth log-moment, nats^4
    double gamma = 0.0;     // nats^2
    double big_gamma = 0.0; // nats^4

    double mu2() const noexcept { return lambda0 + h * h; }
};

/// H = -sum s_i ln s_i. Zero bins contribute nothing (continuous extension).
double shannon_entropy(const ProbabilityDistribution& dist);

/// n-th moment of the single-bin entropy: sum s_i (-ln s_i)^n.
/// mu'_0 = 1 and mu'_1 = H.
double log_moment(const ProbabilityDistribution& dist, int n);

/// Lambda_0 = sum s_i ln^2 s_i - (sum s_i ln s_i)^2, clamped at 0.
/// Vanishes iff the distribution is uniform on its support.
double variance_parameter(const ProbabilityDistribution& dist);

/// Multinomial rate covariance chi_ij = delta_ij s_i - s_i s_j.
/// Symmetric, positive semi-definite, zero row and column sums.
Eigen::MatrixXd covariance_matrix(const ProbabilityDistribution& dist);

/// gamma = M H + M - 1 - Lambda_0 + sum ln s_i.
/// Requires strictly positive probabilities. Throws ZeroProbability.
double gamma_parameter(const ProbabilityDistribution& dist);

/// Closed form:
/// Gamma = mu'_4 - 4 mu'_3 (H+1) + H^3 (3H+4) + 2 Lambda_0 (3H^2+6H+2) - Lambda_0^2.
/// Requires strictly positive probabilities. Throws ZeroProbability.
double big_gamma_parameter(const ProbabilityDistribution& dist);

/// Same quantity as the literal O(M^2) double sum
/// sum_ij chi_ij [l_i^2 + 2(1+H) l_i][l_j^2 + 2(1+H) l_j];
/// kept as an independent route for cross-checking the closed form.
double big_gamma_via_covariance(const ProbabilityDistribution& dist);

/// One-call bundle of the scalar functionals above.
PopulationStats population_stats(const ProbabilityDistribution& dist);

} // namespace entrovar

#endif
