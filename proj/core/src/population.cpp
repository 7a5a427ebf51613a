#include "entrovar/population.hpp"

#include <cmath>

#include "entrovar/accumulate.hpp"

namespace entrovar {

namespace {

void require_strictly_positive(const ProbabilityDistribution& dist, const char* what) {
    if (!dist.strictly_positive()) {
        throw Error(ErrorKind::ZeroProbability,
                    std::string(what) +
                        " needs a strictly positive distribution; drop zero bins first "
                        "(restrict_to_support)");
    }
}

} // namespace

double shannon_entropy(const ProbabilityDistribution& dist) {
    KahanSum acc;
    for (double s : dist.probs()) {
        if (s > 0.0) acc.add(-s * std::log(s));
    }
    const double h = acc.value();
    return h > 0.0 ? h : 0.0;
}

double log_moment(const ProbabilityDistribution& dist, int n) {
    if (n < 0) {
        throw Error(ErrorKind::DomainError, "log moment order must be non-negative");
    }
    KahanSum acc;
    for (double s : dist.probs()) {
        if (s > 0.0) acc.add(s * std::pow(-std::log(s), n));
    }
    return acc.value();
}

double variance_parameter(const ProbabilityDistribution& dist) {
    KahanSum first;
    KahanSum second;
    for (double s : dist.probs()) {
        if (s > 0.0) {
            const double l = std::log(s);
            first.add(s * l);
            second.add(s * l * l);
        }
    }
    const double mean = first.value();
    const double lam = second.value() - mean * mean;
    // Round-off may leave a tiny negative at uniform distributions.
    return lam > 0.0 ? lam : 0.0;
}

Eigen::MatrixXd covariance_matrix(const ProbabilityDistribution& dist) {
    const auto n = static_cast<Eigen::Index>(dist.size());
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) s[i] = dist[static_cast<std::size_t>(i)];
    Eigen::MatrixXd chi = -s * s.transpose();
    chi.diagonal() += s;
    return chi;
}

double gamma_parameter(const ProbabilityDistribution& dist) {
    require_strictly_positive(dist, "gamma");
    const auto m = static_cast<double>(dist.size());
    KahanSum log_sum;
    for (double s : dist.probs()) log_sum.add(std::log(s));
    const double h = shannon_entropy(dist);
    return m * h + m - 1.0 - variance_parameter(dist) + log_sum.value();
}

double big_gamma_parameter(const ProbabilityDistribution& dist) {
    require_strictly_positive(dist, "Gamma");
    const double h = shannon_entropy(dist);
    const double lam = variance_parameter(dist);
    const double mu3 = log_moment(dist, 3);
    const double mu4 = log_moment(dist, 4);
    return mu4 - 4.0 * mu3 * (h + 1.0) + h * h * h * (3.0 * h + 4.0) +
           2.0 * lam * (3.0 * h * h + 6.0 * h + 2.0) - lam * lam;
}

double big_gamma_via_covariance(const ProbabilityDistribution& dist) {
    require_strictly_positive(dist, "Gamma");
    const double h = shannon_entropy(dist);
    const std::size_t m = dist.size();

    std::vector<double> bracket(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double l = std::log(dist[i]);
        bracket[i] = l * l + 2.0 * (1.0 + h) * l;
    }

    KahanSum acc;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double chi = (i == j ? dist[i] : 0.0) - dist[i] * dist[j];
            acc.add(chi * bracket[i] * bracket[j]);
        }
    }
    return acc.value();
}

PopulationStats population_stats(const ProbabilityDistribution& dist) {
    require_strictly_positive(dist, "population stats");
    PopulationStats st;
    st.h = shannon_entropy(dist);
    st.lambda0 = variance_parameter(dist);
    st.mu3 = log_moment(dist, 3);
    st.mu4 = log_moment(dist, 4);
    st.gamma = gamma_parameter(dist);
    st.big_gamma = big_gamma_parameter(dist);
    return st;
}

} // namespace entrovar
