#ifndef A1GM_RNG_HPP
#define A1GM_RNG_HPP

#include <cstdint>

namespace a1gm {

// splitmix64: the public-domain 64-bit generator with a Weyl-sequence state
// increment and two xor-multiply finalizer rounds. Chosen because it is
// trivially seedable, has no warm-up requirement, and produces identical
// streams on every platform, which keeps randomized solver traces and
// synthetic datasets bit-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double on the open interval (0,1): the top 53 bits scaled by
    // 2^-53, with an exact 0 mapped up to 2^-53 so callers may take logs or
    // divide without guarding.
    double next_unit_open() noexcept {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace a1gm

#endif
