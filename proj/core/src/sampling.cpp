#include "entrovar/sampling.hpp"

#include <cmath>
#include <vector>

#include "entrovar/accumulate.hpp"

namespace entrovar {

namespace {

// ln(k!) minus its Stirling approximation; exact table for k < 10, series
// otherwise.
double stirling_approx_tail(double k) {
    static const double table[] = {
        0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
        0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
        0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
        0.00833056343336287};
    if (k <= 9.0) {
        return table[static_cast<int>(k)];
    }
    const double kp1sq = (k + 1.0) * (k + 1.0);
    return (1.0 / 12.0 - (1.0 / 360.0 - 1.0 / 1260.0 / kp1sq) / kp1sq) / (k + 1.0);
}

// CDF inversion via the pmf recurrence; expected O(n*p) iterations, used
// only when n*p < 10. Requires p <= 0.5.
std::uint64_t binomial_inversion(std::uint64_t n, double p, RandomStream& stream) {
    const double s = p / (1.0 - p);
    const double a = (static_cast<double>(n) + 1.0) * s;
    double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
    double u = stream.next_double();
    std::uint64_t k = 0;
    while (u > pmf) {
        u -= pmf;
        ++k;
        if (k > n) return n; // round-off guard at the distribution tail
        pmf *= a / static_cast<double>(k) - s;
    }
    return k;
}

// Hormann's BTRS transformed-rejection sampler; requires p <= 0.5 and
// n*p >= 10.
std::uint64_t binomial_btrs(std::uint64_t n, double p, RandomStream& stream) {
    const double count = static_cast<double>(n);
    const double stddev = std::sqrt(count * p * (1.0 - p));
    const double b = 1.15 + 2.53 * stddev;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = count * p + 0.5;
    const double v_r = 0.92 - 4.2 / b;
    const double r = p / (1.0 - p);
    const double alpha = (2.83 + 5.1 / b) * stddev;
    const double m = std::floor((count + 1.0) * p);

    for (;;) {
        const double u = stream.next_double() - 0.5;
        double v = stream.next_double();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + c);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::uint64_t>(k);
        }
        if (k < 0.0 || k > count) continue;
        v = std::log(v * alpha / (a / (us * us) + b));
        const double upper =
            (m + 0.5) * std::log((m + 1.0) / (r * (count - m + 1.0))) +
            (count + 1.0) * std::log((count - m + 1.0) / (count - k + 1.0)) +
            (k + 0.5) * std::log(r * (count - k + 1.0) / (k + 1.0)) +
            stirling_approx_tail(m) + stirling_approx_tail(count - m) -
            stirling_approx_tail(k) - stirling_approx_tail(count - k);
        if (v <= upper) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

} // namespace

std::uint64_t sample_binomial(std::uint64_t n, double p, RandomStream& stream) {
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - sample_binomial(n, 1.0 - p, stream);
    if (static_cast<double>(n) * p < 10.0) {
        return binomial_inversion(n, p, stream);
    }
    return binomial_btrs(n, p, stream);
}

CountHistogram sample_multinomial(const ProbabilityDistribution& dist, std::uint64_t n,
                                  RandomStream& stream) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "multinomial draw requires n >= 1");
    }
    const std::size_t m = dist.size();
    std::vector<std::uint64_t> counts(m, 0);

    // Suffix mass keeps each conditional probability well normalized.
    std::vector<double> suffix(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] + dist[i];

    std::uint64_t remaining = n;
    for (std::size_t i = 0; i + 1 < m && remaining > 0; ++i) {
        double p = suffix[i] > 0.0 ? dist[i] / suffix[i] : 1.0;
        if (p < 0.0) p = 0.0;
        if (p > 1.0) p = 1.0;
        const std::uint64_t c = sample_binomial(remaining, p, stream);
        counts[i] = c;
        remaining -= c;
    }
    counts[m - 1] = remaining;
    return make_histogram(std::move(counts));
}

} // namespace entrovar
