#ifndef MDG_RNG_HPP
#define MDG_RNG_HPP

#include <cstdint>

namespace mdg {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). Tiny, bit-portable across platforms,
 * and cheap to split: any derived seed opens an independent stream, which is
 * how the property suite gives every trial its own replayable generator.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound); bound must be positive. Rejection
    /// sampling keeps the result identical on every platform.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Seed for an independent child stream.
    std::uint64_t split() { return next(); }

  private:
    std::uint64_t state_;
};

/// Mixes a stream index into a base seed so sibling streams do not overlap.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 mixer(base ^ (0xa0761d6478bd642fULL * (index + 1)));
    return mixer.next();
}

}  // namespace mdg

#endif
