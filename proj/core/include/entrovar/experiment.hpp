#ifndef ENTROVAR_EXPERIMENT_HPP
#define ENTROVAR_EXPERIMENT_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "entrovar/types.hpp"

namespace entrovar {

/// Fixed default seed; CLI runs are reproducible unless the caller overrides.
inline constexpr std::uint64_t kDefaultSeed = 0x2545F4914F6CDD1Dull;

/// Default cap on trials * max(n); the full-scale sweep (1e4 trials up to
/// n = 1e6) stays two orders of magnitude below it.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000'000ull;

enum EstimatorSet : unsigned {
    kEstimatorLambda0 = 1u << 0,
    kEstimatorEntropy = 1u << 1,
    kEstimatorRoulston = 1u << 2,
    kEstimatorAll = kEstimatorLambda0 | kEstimatorEntropy | kEstimatorRoulston,
};

struct ExperimentConfig {
    ProbabilityDistribution dist = uniform_distribution(1);
    std::vector<std::uint64_t> n_values; // strictly increasing, all >= 1
    std::uint32_t trials = 0;            // >= 2 (sample variance needs it)
    std::uint64_t seed = kDefaultSeed;
    unsigned estimators = kEstimatorAll;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// Aggregates for one sample size. Sample variances use divisor S-1;
/// se_mean = sqrt(var/S); se_var is the distribution-free standard error of
/// the sample variance (via the fourth central moment). Estimators that were
/// not requested leave NaN in their fields.
struct ExperimentRow {
    std::uint64_t n = 0;
    double mean_lambda0_hat = 0.0;
    double se_mean_lambda0_hat = 0.0;
    double var_lambda0_hat = 0.0;
    double se_var_lambda0_hat = 0.0;
    double mean_h_hat = 0.0;
    double se_mean_h_hat = 0.0;
    double var_h_hat = 0.0;
    double se_var_h_hat = 0.0;
    double mean_roulston = 0.0;
    double se_mean_roulston = 0.0;
    double predicted_mean = 0.0;  // Lambda_0 + gamma / n
    double predicted_var = 0.0;   // Gamma / n
    double predicted_var_h = 0.0; // Lambda_0 / n
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::uint32_t trials = 0;
    std::uint64_t seed = 0;
};

/// Runs trials independent n-step evolutions per grid point and aggregates
/// the estimators. Trial t at grid index g draws from the substream keyed
/// (seed, g, t), so the result is bit-identical for any thread count.
/// Throws ZeroProbability (predictions need gamma/Gamma), DomainError on a
/// bad grid or trial count, ResourceBudget when trials * max(n) > budget.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0; // of ln y on ln n
};

/// Least-squares fit of ln y against ln n. Needs >= 2 points with distinct
/// n > 0 and y > 0; throws DegenerateInput otherwise.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

} // namespace entrovar

#endif
