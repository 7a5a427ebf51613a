#ifndef ENTROVAR_TYPES_HPP
#define ENTROVAR_TYPES_HPP

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "entrovar/error.hpp"

namespace entrovar {

/// Exact prior {s_i} on m bins. Immutable after construction; entries are
/// non-negative and renormalized to unit sum at machine precision.
/// Zero entries are legal; operations that diverge on them (gamma, Gamma)
/// declare their own stricter precondition.
class ProbabilityDistribution {
public:
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    std::size_t size() const noexcept { return probs_.size(); }

    /// True iff every bin has positive probability (support size equals m).
    bool strictly_positive() const noexcept { return strictly_positive_; }

    friend ProbabilityDistribution make_distribution(std::span<const double> values,
                                                     bool normalize);

private:
    ProbabilityDistribution() = default;

    std::vector<double> probs_;
    bool strictly_positive_ = false;
};

/// Observed visit counts {j_i} with n = sum of counts.
class CountHistogram {
public:
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t operator[](std::size_t i) const noexcept { return counts_[i]; }
    std::size_t size() const noexcept { return counts_.size(); }

    /// Total number of recorded steps, n >= 1.
    std::uint64_t total() const noexcept { return total_; }

    /// Number of bins with a nonzero count.
    std::size_t support_size() const noexcept { return support_; }

    /// Observed rate counts[i] / n.
    double rate(std::size_t i) const noexcept {
        return static_cast<double>(counts_[i]) / static_cast<double>(total_);
    }

    friend CountHistogram make_histogram(std::span<const std::int64_t> counts);
    friend CountHistogram make_histogram(std::vector<std::uint64_t> counts);

private:
    CountHistogram() = default;

    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    std::size_t support_ = 0;
};

/// Validates and normalizes a probability vector.
/// With normalize=false the input must already sum to 1 within 1e-9; either
/// way the stored entries are divided by their exact sum.
/// Throws: NegativeEntry, AllZero, SumNotOne.
ProbabilityDistribution make_distribution(std::span<const double> values,
                                          bool normalize = false);

/// Validates a count vector; requires at least one positive entry.
/// Throws: NegativeEntry, AllZero.
CountHistogram make_histogram(std::span<const std::int64_t> counts);

/// Same as above for counts already known to be non-negative.
CountHistogram make_histogram(std::vector<std::uint64_t> counts);

/// Uniform distribution on m bins.
ProbabilityDistribution uniform_distribution(std::size_t m);

/// s_i proportional to i, i = 1..m.
ProbabilityDistribution arithmetic_distribution(std::size_t m);

/// Drops zero-probability bins, returning the distribution restricted to its
/// support. Identity for strictly positive inputs.
ProbabilityDistribution restrict_to_support(const ProbabilityDistribution& dist);

} // namespace entrovar

#endif
