#ifndef ENTROVAR_SAMPLING_HPP
#define ENTROVAR_SAMPLING_HPP

#include <cstdint>

#include "entrovar/rng.hpp"
#include "entrovar/types.hpp"

namespace entrovar {

/// Exact binomial(n, p) draw. Inversion for small n*p, BTRS transformed
/// rejection (Hormann 1993) otherwise; both are spelled out in-repo so the
/// stream of variates is identical on every platform.
std::uint64_t sample_binomial(std::uint64_t n, double p, RandomStream& stream);

/// One multinomial draw of n steps via the conditional-binomial chain:
/// O(M) work per histogram regardless of n, with binomial marginals.
CountHistogram sample_multinomial(const ProbabilityDistribution& dist, std::uint64_t n,
                                  RandomStream& stream);

} // namespace entrovar

#endif
