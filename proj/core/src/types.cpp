#include "entrovar/types.hpp"

#include <cmath>
#include <string>

#include "entrovar/accumulate.hpp"

namespace entrovar {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::SumNotOne: return "SumNotOne";
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ZeroProbability: return "ZeroProbability";
        case ErrorKind::SupportTooSmall: return "SupportTooSmall";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::ResourceBudget: return "ResourceBudget";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

namespace {
constexpr double kSumTolerance = 1e-9;
}

ProbabilityDistribution make_distribution(std::span<const double> values, bool normalize) {
    if (values.empty()) {
        throw Error(ErrorKind::AllZero, "empty probability vector");
    }
    KahanSum acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error(ErrorKind::NegativeEntry,
                        "entry " + std::to_string(i) + " = " + std::to_string(v));
        }
        acc.add(v);
    }
    const double sum = acc.value();
    if (sum <= 0.0) {
        throw Error(ErrorKind::AllZero, "probability vector sums to zero");
    }
    if (!normalize && std::abs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorKind::SumNotOne,
                    "sum = " + std::to_string(sum) + ", expected 1 within 1e-9");
    }

    ProbabilityDistribution dist;
    dist.probs_.reserve(values.size());
    bool positive = true;
    // Renormalize to machine precision even when the input already passed
    // the 1e-9 gate, so downstream functionals see an exact simplex point.
    for (double v : values) {
        const double p = v / sum;
        dist.probs_.push_back(p);
        positive = positive && p > 0.0;
    }
    dist.strictly_positive_ = positive;
    return dist;
}

CountHistogram make_histogram(std::span<const std::int64_t> counts) {
    std::vector<std::uint64_t> c;
    c.reserve(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) {
            throw Error(ErrorKind::NegativeEntry,
                        "count " + std::to_string(i) + " = " + std::to_string(counts[i]));
        }
        c.push_back(static_cast<std::uint64_t>(counts[i]));
    }
    return make_histogram(std::move(c));
}

CountHistogram make_histogram(std::vector<std::uint64_t> counts) {
    if (counts.empty()) {
        throw Error(ErrorKind::AllZero, "empty count vector");
    }
    std::uint64_t total = 0;
    std::size_t support = 0;
    for (std::uint64_t c : counts) {
        total += c;
        support += c > 0 ? 1 : 0;
    }
    if (total == 0) {
        throw Error(ErrorKind::AllZero, "all counts are zero");
    }
    CountHistogram hist;
    hist.counts_ = std::move(counts);
    hist.total_ = total;
    hist.support_ = support;
    return hist;
}

ProbabilityDistribution uniform_distribution(std::size_t m) {
    if (m == 0) {
        throw Error(ErrorKind::DomainError, "uniform distribution needs m >= 1");
    }
    std::vector<double> v(m, 1.0 / static_cast<double>(m));
    return make_distribution(v, true);
}

ProbabilityDistribution arithmetic_distribution(std::size_t m) {
    if (m == 0) {
        throw Error(ErrorKind::DomainError, "arithmetic distribution needs m >= 1");
    }
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<double>(i + 1);
    return make_distribution(v, true);
}

ProbabilityDistribution restrict_to_support(const ProbabilityDistribution& dist) {
    if (dist.strictly_positive()) return dist;
    std::vector<double> v;
    v.reserve(dist.size());
    for (double p : dist.probs()) {
        if (p > 0.0) v.push_back(p);
    }
    return make_distribution(v, true);
}

} // namespace entrovar
