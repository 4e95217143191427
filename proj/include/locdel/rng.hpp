#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "locdel/bits.hpp"

namespace locdel {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Hashes a tuple of integers into one seed, so that each (seed, k, trial,
/// purpose) gets its own stream whatever order trials run in.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) noexcept
{
    std::uint64_t h = 0x6A09E667F3BCC908ull;
    for (auto part : parts)
        h = splitmix64(h ^ splitmix64(part));
    return h;
}

/// mt19937_64 is fully specified by the standard; the distributions are not,
/// so bounded draws use our own rejection sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1)
            return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    Bits bits(std::size_t n)
    {
        Bits out(n);
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 64 == 0)
                word = engine_();
            out[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace locdel
