#ifndef ENTROVAR_ESTIMATORS_HPP
#define ENTROVAR_ESTIMATORS_HPP

#include <cstdint>
#include <optional>

#include "entrovar/types.hpp"

namespace entrovar {

/// Sample-side entropy statistics for one histogram.
struct EntropyEstimate {
    double h_plugin = 0.0;       // nats
    double h_miller_madow = 0.0; // h_plugin + (m_declared - 1) / (2n)
    double lambda0_hat = 0.0;    // nats^2, clamped at 0
    double sigma_h = 0.0;        // sqrt(lambda0_hat / n), nats
    std::uint64_t n = 0;
    std::size_t m_support = 0;  // observed nonzero bins
    std::size_t m_declared = 0; // caller-declared support size
    bool lambda0_clamped = false;
};

/// Plug-in entropy -sum p_i ln p_i of the observed rates; zero-count bins
/// contribute nothing.
double plug_in_entropy(const CountHistogram& hist);

/// Bias-corrected entropy using the declared support size m.
/// Throws SupportTooSmall if m is below the observed nonzero-bin count.
double miller_madow_entropy(const CountHistogram& hist, std::size_t m);

/// Plug-in estimate of the variance parameter,
/// sum p_i ln^2 p_i - H_hat^2, clamped at 0.
double plug_in_lambda0(const CountHistogram& hist);

/// sqrt(plug_in_lambda0 / n): the one-sigma error bar on the plug-in entropy.
double entropy_error_bar(const CountHistogram& hist);

/// Error-propagation comparator: sum (ln p_i + H_hat)^2 p_i (1 - p_i).
/// Ignores the multinomial sum constraint; kept for side-by-side runs.
double roulston_lambda(const CountHistogram& hist);

/// Distribution-free variance bound (ln n)^2 / n, n >= 2.
double antos_kontoyiannis_bound(std::uint64_t n);

struct WorstCaseBound {
    double sigma = 0.0;            // sqrt(Lambda0_max(m) / n), exact root
    double sigma_asymptotic = 0.0; // ln(m) / (2 sqrt(n))
};

/// Worst-case entropy error bar over all distributions of support size m.
WorstCaseBound worst_case_error_bar(std::size_t m, std::uint64_t n);

/// Expected sample mean of the plug-in variance parameter at sample size n:
/// Lambda_0 + gamma / n. Requires a strictly positive distribution.
double predicted_lambda0_mean(const ProbabilityDistribution& dist, std::uint64_t n);

/// Expected sample variance of the plug-in variance parameter: Gamma / n.
double predicted_lambda0_variance(const ProbabilityDistribution& dist, std::uint64_t n);

/// Bundles the per-histogram statistics. m_declared defaults to the
/// histogram length.
EntropyEstimate estimate_entropy(const CountHistogram& hist,
                                 std::optional<std::size_t> m_declared = std::nullopt);

} // namespace entrovar

#endif
