#ifndef ENTROVAR_RNG_HPP
#define ENTROVAR_RNG_HPP

#include <array>
#include <cstdint>

namespace entrovar {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Stateless block function: the same (key, counter) always produces the
/// same block on every platform, which is what makes substreams keyed by
/// (seed, grid index, trial) reproducible under any scheduling.
struct Philox4x32 {
    using Key = std::array<std::uint32_t, 2>;
    using Block = std::array<std::uint32_t, 4>;

    static Block generate(Key key, Block counter) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = 0xD2511F53ull * counter[0];
            const std::uint64_t p1 = 0xCD9E8D57ull * counter[2];
            counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                       static_cast<std::uint32_t>(p1),
                       static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                       static_cast<std::uint32_t>(p0)};
        }
        return counter;
    }
};

/// One independent stream of uniforms: counter words 2..3 carry the stream
/// id, words 0..1 a block counter. 2^64 blocks of four 32-bit words each.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    /// Stream id for trial t at grid index g.
    static std::uint64_t stream_id(std::uint32_t grid_index, std::uint32_t trial) noexcept {
        return (static_cast<std::uint64_t>(grid_index) << 32) | trial;
    }

    std::uint32_t next_u32() noexcept {
        if (pos_ == 4) {
            buffer_ = Philox4x32::generate(
                key_, {static_cast<std::uint32_t>(block_),
                       static_cast<std::uint32_t>(block_ >> 32),
                       static_cast<std::uint32_t>(stream_),
                       static_cast<std::uint32_t>(stream_ >> 32)});
            ++block_;
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    Philox4x32::Key key_;
    std::uint64_t stream_ = 0;
    std::uint64_t block_ = 0;
    Philox4x32::Block buffer_{};
    int pos_ = 4;
};

} // namespace entrovar

#endif
