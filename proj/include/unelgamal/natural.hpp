#pragma once

/**
 * @file natural.hpp
 * @brief The arbitrary-precision nonnegative integer type and a seedable
 *        random source for sampling exponents and prime candidates.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <random>

namespace unelgamal {

using Natural = boost::multiprecision::cpp_int;

inline unsigned bit_length(const Natural& x) {
    return x == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
}

inline std::uint64_t low64(const Natural& x) {
    static const Natural mask = (Natural(1) << 64) - 1;
    return (x & mask).convert_to<std::uint64_t>();
}

/// Deterministic random source. All sampling in the library goes through an
/// explicit RandomSource so seeded runs reproduce exactly.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    static RandomSource from_entropy() {
        std::random_device rd;
        std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        return RandomSource(s);
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer with exactly `bits` bits (top bit set).
    Natural bits(unsigned nbits) {
        assert(nbits >= 1);
        Natural x = 0;
        unsigned filled = 0;
        while (filled < nbits) {
            x <<= 64;
            x |= next_u64();
            filled += 64;
        }
        x >>= (filled - nbits);
        boost::multiprecision::bit_set(x, nbits - 1);
        return x;
    }

    /// Uniform in [0, bound) by rejection sampling.
    Natural below(const Natural& bound) {
        assert(bound >= 1);
        if (bound == 1) return 0;
        unsigned nbits = bit_length(bound);
        for (;;) {
            Natural x = 0;
            unsigned filled = 0;
            while (filled < nbits) {
                x <<= 64;
                x |= next_u64();
                filled += 64;
            }
            x >>= (filled - nbits);
            if (x < bound) return x;
        }
    }

    /// Uniform in [lo, hi] inclusive.
    Natural range(const Natural& lo, const Natural& hi) {
        assert(lo <= hi);
        return lo + below(hi - lo + 1);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace unelgamal
