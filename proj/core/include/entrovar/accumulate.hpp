#ifndef ENTROVAR_ACCUMULATE_HPP
#define ENTROVAR_ACCUMULATE_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace entrovar {

/// Neumaier-compensated accumulator; keeps long sums accurate enough for
/// the cancellation-heavy moment formulas at large bin counts.
class KahanSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Pairwise summation; deterministic for a fixed element order.
inline double pairwise_sum(std::span<const double> xs) noexcept {
    if (xs.size() <= 32) {
        KahanSum acc;
        for (double x : xs) acc.add(x);
        return acc.value();
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace entrovar

#endif
