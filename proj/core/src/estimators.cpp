#include "entrovar/estimators.hpp"

#include <cmath>
#include <string>

#include "entrovar/accumulate.hpp"
#include "entrovar/maxvar.hpp"
#include "entrovar/population.hpp"

namespace entrovar {

namespace {

double raw_plug_in_lambda0(const CountHistogram& hist) {
    KahanSum first;
    KahanSum second;
    const double n = static_cast<double>(hist.total());
    for (std::uint64_t c : hist.counts()) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        const double l = std::log(p);
        first.add(p * l);
        second.add(p * l * l);
    }
    const double h = -first.value();
    return second.value() - h * h;
}

} // namespace

double plug_in_entropy(const CountHistogram& hist) {
    KahanSum acc;
    const double n = static_cast<double>(hist.total());
    for (std::uint64_t c : hist.counts()) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        acc.add(-p * std::log(p));
    }
    const double h = acc.value();
    return h > 0.0 ? h : 0.0;
}

double miller_madow_entropy(const CountHistogram& hist, std::size_t m) {
    if (m < hist.support_size()) {
        throw Error(ErrorKind::SupportTooSmall,
                    "declared support " + std::to_string(m) + " < observed " +
                        std::to_string(hist.support_size()));
    }
    return plug_in_entropy(hist) +
           static_cast<double>(m - 1) / (2.0 * static_cast<double>(hist.total()));
}

double plug_in_lambda0(const CountHistogram& hist) {
    const double lam = raw_plug_in_lambda0(hist);
    return lam > 0.0 ? lam : 0.0;
}

double entropy_error_bar(const CountHistogram& hist) {
    return std::sqrt(plug_in_lambda0(hist) / static_cast<double>(hist.total()));
}

double roulston_lambda(const CountHistogram& hist) {
    const double h = plug_in_entropy(hist);
    const double n = static_cast<double>(hist.total());
    KahanSum acc;
    for (std::uint64_t c : hist.counts()) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        const double bracket = std::log(p) + h;
        acc.add(bracket * bracket * p * (1.0 - p));
    }
    const double lam = acc.value();
    return lam > 0.0 ? lam : 0.0;
}

double antos_kontoyiannis_bound(std::uint64_t n) {
    if (n < 2) {
        throw Error(ErrorKind::DomainError, "bound requires n >= 2");
    }
    const double l = std::log(static_cast<double>(n));
    return l * l / static_cast<double>(n);
}

WorstCaseBound worst_case_error_bar(std::size_t m, std::uint64_t n) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "worst-case bound requires m >= 2");
    }
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "worst-case bound requires n >= 1");
    }
    const double dn = static_cast<double>(n);
    WorstCaseBound b;
    b.sigma = std::sqrt(max_variance(m).lambda0 / dn);
    b.sigma_asymptotic = std::log(static_cast<double>(m)) / (2.0 * std::sqrt(dn));
    return b;
}

double predicted_lambda0_mean(const ProbabilityDistribution& dist, std::uint64_t n) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "prediction requires n >= 1");
    }
    return variance_parameter(dist) + gamma_parameter(dist) / static_cast<double>(n);
}

double predicted_lambda0_variance(const ProbabilityDistribution& dist, std::uint64_t n) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "prediction requires n >= 1");
    }
    return big_gamma_parameter(dist) / static_cast<double>(n);
}

EntropyEstimate estimate_entropy(const CountHistogram& hist,
                                 std::optional<std::size_t> m_declared) {
    EntropyEstimate est;
    est.n = hist.total();
    est.m_support = hist.support_size();
    est.m_declared = m_declared.value_or(hist.size());
    est.h_plugin = plug_in_entropy(hist);
    est.h_miller_madow = miller_madow_entropy(hist, est.m_declared);
    const double raw = raw_plug_in_lambda0(hist);
    est.lambda0_clamped = raw < 0.0;
    est.lambda0_hat = raw > 0.0 ? raw : 0.0;
    est.sigma_h = std::sqrt(est.lambda0_hat / static_cast<double>(est.n));
    return est;
}

} // namespace entrovar
