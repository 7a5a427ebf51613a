#include "entrovar/experiment.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "entrovar/accumulate.hpp"
#include "entrovar/estimators.hpp"
#include "entrovar/population.hpp"
#include "entrovar/sampling.hpp"

namespace entrovar {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct SampleMoments {
    double mean = 0.0;
    double var = 0.0;     // divisor S-1
    double se_mean = 0.0; // sqrt(var / S)
    double se_var = 0.0;  // sqrt((m4 - (S-3)/(S-1) var^2) / S)
};

SampleMoments summarize(std::span<const double> values) {
    const auto s = static_cast<double>(values.size());
    SampleMoments out;
    out.mean = pairwise_sum(values) / s;

    std::vector<double> sq(values.size());
    std::vector<double> quart(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - out.mean;
        sq[i] = d * d;
        quart[i] = d * d * d * d;
    }
    out.var = pairwise_sum(sq) / (s - 1.0);
    const double m4 = pairwise_sum(quart) / s;
    out.se_mean = std::sqrt(out.var / s);
    const double var_of_var = (m4 - (s - 3.0) / (s - 1.0) * out.var * out.var) / s;
    out.se_var = var_of_var > 0.0 ? std::sqrt(var_of_var) : 0.0;
    return out;
}

void validate(const ExperimentConfig& config) {
    if (config.trials < 2) {
        throw Error(ErrorKind::DomainError, "at least 2 trials are needed for a sample variance");
    }
    if (config.n_values.empty()) {
        throw Error(ErrorKind::DomainError, "empty sample-size grid");
    }
    std::uint64_t prev = 0;
    for (std::uint64_t n : config.n_values) {
        if (n < 1 || n <= prev) {
            throw Error(ErrorKind::DomainError, "sample sizes must be strictly increasing and >= 1");
        }
        prev = n;
    }
    const std::uint64_t max_n = config.n_values.back();
    if (max_n > config.budget / config.trials) {
        throw Error(ErrorKind::ResourceBudget,
                    "trials * max(n) = " + std::to_string(config.trials) + " * " +
                        std::to_string(max_n) + " exceeds budget " +
                        std::to_string(config.budget));
    }
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);

    // Predictions require strictly positive probabilities; fail before
    // spending any sampling time.
    const double lambda0 = variance_parameter(config.dist);
    const double gamma = gamma_parameter(config.dist);
    const double big_gamma = big_gamma_parameter(config.dist);

    const std::uint32_t trials = config.trials;
    const bool want_lambda0 = (config.estimators & kEstimatorLambda0) != 0;
    const bool want_entropy = (config.estimators & kEstimatorEntropy) != 0;
    const bool want_roulston = (config.estimators & kEstimatorRoulston) != 0;

    ExperimentResult result;
    result.trials = trials;
    result.seed = config.seed;
    result.rows.reserve(config.n_values.size());

    std::vector<double> lambda0_values(trials);
    std::vector<double> entropy_values(trials);
    std::vector<double> roulston_values(trials);

    for (std::size_t g = 0; g < config.n_values.size(); ++g) {
        const std::uint64_t n = config.n_values[g];

        const auto run_range = [&](std::uint32_t lo, std::uint32_t hi) {
            for (std::uint32_t t = lo; t < hi; ++t) {
                RandomStream stream(config.seed,
                                    RandomStream::stream_id(static_cast<std::uint32_t>(g), t));
                const CountHistogram hist = sample_multinomial(config.dist, n, stream);
                if (want_lambda0) lambda0_values[t] = plug_in_lambda0(hist);
                if (want_entropy) entropy_values[t] = plug_in_entropy(hist);
                if (want_roulston) roulston_values[t] = roulston_lambda(hist);
            }
        };

        const unsigned workers = std::max(1u, config.threads);
        if (workers == 1 || trials < 2 * workers) {
            run_range(0, trials);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const std::uint32_t chunk = (trials + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint32_t lo = w * chunk;
                const std::uint32_t hi = std::min(trials, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(run_range, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        ExperimentRow row;
        row.n = n;
        const double dn = static_cast<double>(n);
        row.predicted_mean = lambda0 + gamma / dn;
        row.predicted_var = big_gamma / dn;
        row.predicted_var_h = lambda0 / dn;

        if (want_lambda0) {
            const SampleMoments mo = summarize(lambda0_values);
            row.mean_lambda0_hat = mo.mean;
            row.se_mean_lambda0_hat = mo.se_mean;
            row.var_lambda0_hat = mo.var;
            row.se_var_lambda0_hat = mo.se_var;
        } else {
            row.mean_lambda0_hat = row.se_mean_lambda0_hat = kNan;
            row.var_lambda0_hat = row.se_var_lambda0_hat = kNan;
        }
        if (want_entropy) {
            const SampleMoments mo = summarize(entropy_values);
            row.mean_h_hat = mo.mean;
            row.se_mean_h_hat = mo.se_mean;
            row.var_h_hat = mo.var;
            row.se_var_h_hat = mo.se_var;
        } else {
            row.mean_h_hat = row.se_mean_h_hat = row.var_h_hat = row.se_var_h_hat = kNan;
        }
        if (want_roulston) {
            const SampleMoments mo = summarize(roulston_values);
            row.mean_roulston = mo.mean;
            row.se_mean_roulston = mo.se_mean;
        } else {
            row.mean_roulston = row.se_mean_roulston = kNan;
        }
        result.rows.push_back(row);
    }
    return result;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw Error(ErrorKind::DegenerateInput, "power-law fit needs at least 2 points");
    }
    std::vector<double> xs(points.size());
    std::vector<double> ys(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0)) {
            throw Error(ErrorKind::DegenerateInput, "power-law fit needs positive n and y");
        }
        xs[i] = std::log(points[i].first);
        ys[i] = std::log(points[i].second);
    }
    const double xbar = pairwise_sum(xs) / static_cast<double>(xs.size());
    const double ybar = pairwise_sum(ys) / static_cast<double>(ys.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "power-law fit needs distinct n values");
    }
    PowerLawFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    return fit;
}

} // namespace entrovar
