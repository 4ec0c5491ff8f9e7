#pragma once

/**
 * @file modmath.hpp
 * @brief Modular arithmetic and number-theoretic primitives: modular
 *        exponentiation, extended Euclid, Miller-Rabin, prime generation,
 *        and small-scale integer factorization.
 *
 * All functions are pure; randomized ones take an explicit RandomSource.
 */

#include "unelgamal/errors.hpp"
#include "unelgamal/natural.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace unelgamal {

/// base^exponent mod modulus by square-and-multiply.
/// mod_pow(_, _, 1) is 0: the only residue class mod 1.
inline Natural mod_pow(Natural base, Natural exponent, const Natural& modulus) {
    if (modulus < 1) throw Error("mod_pow: modulus must be >= 1");
    if (modulus == 1) return 0;
    Natural result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (boost::multiprecision::bit_test(exponent, 0)) result = result * base % modulus;
        base = base * base % modulus;
        exponent >>= 1;
    }
    return result;
}

inline Natural gcd(Natural a, Natural b) {
    if (a == 0 && b == 0) throw Error("gcd(0, 0) is undefined");
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// The w in [1, modulus-1] with a*w = 1 (mod modulus), by extended Euclid.
inline Natural mod_inv(const Natural& a, const Natural& modulus) {
    if (modulus < 2) throw Error("mod_inv: modulus must be >= 2");
    using Int = boost::multiprecision::cpp_int;
    Int old_r = Int(a % modulus), r = Int(modulus);
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1)
        throw NotInvertible("mod_inv: element is not coprime to the modulus");
    Int w = old_s % Int(modulus);
    if (w < 0) w += Int(modulus);
    return Natural(w);
}

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> ps;
        std::vector<bool> sieve(2000, true);
        for (std::uint32_t i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < sieve.size(); j += i)
                sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

// One Miller-Rabin round: n - 1 = d * 2^s with d odd.
inline bool miller_rabin_witness(const Natural& n, const Natural& a,
                                 const Natural& d, unsigned s) {
    Natural x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;  // a proves n composite
}

}  // namespace detail

/// Miller-Rabin primality test. Deterministic (exact) for n < 2^64 via the
/// known 12-witness set; above that, `rounds` pseudo-random bases with the
/// base stream seeded from n itself, so the answer is reproducible.
inline bool is_probable_prime(const Natural& n, unsigned rounds = 64) {
    if (rounds < 1) throw Error("is_probable_prime: rounds must be >= 1");
    if (n < 2) return false;
    for (std::uint32_t p : detail::small_primes()) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Natural d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    static const Natural two_64 = Natural(1) << 64;
    if (n < two_64) {
        for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
            if (n == a) return true;
            if (!detail::miller_rabin_witness(n, Natural(a), d, s)) return false;
        }
        return true;
    }
    RandomSource rng(low64(n) ^ 0x9e3779b97f4a7c15ULL);
    for (unsigned i = 0; i < rounds; ++i) {
        Natural a = rng.range(2, n - 2);
        if (!detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

/// Random odd probable prime with exactly `bits` bits.
inline Natural gen_prime(unsigned bits, RandomSource& rng) {
    if (bits < 3) throw Error("gen_prime: bits must be >= 3");
    for (;;) {
        Natural candidate = rng.bits(bits);
        boost::multiprecision::bit_set(candidate, 0);
        if (is_probable_prime(candidate)) return candidate;
    }
}

/// Random safe prime p = 2q + 1 (q prime) with exactly `bits` bits.
/// Returns (p, q).
inline std::pair<Natural, Natural> gen_safe_prime(unsigned bits, RandomSource& rng) {
    if (bits < 3) throw Error("gen_safe_prime: bits must be >= 3");
    for (;;) {
        Natural q = rng.bits(bits - 1);
        boost::multiprecision::bit_set(q, 0);
        Natural p = 2 * q + 1;
        if (bit_length(p) != bits) continue;
        // cheap sieve on both before the expensive tests
        bool bad = false;
        for (std::uint32_t sp : detail::small_primes()) {
            if (q > sp && q % sp == 0) { bad = true; break; }
            if (p > sp && p % sp == 0) { bad = true; break; }
        }
        if (bad) continue;
        if (is_probable_prime(q) && is_probable_prime(p)) return {p, q};
    }
}

/// phi(p^m) = phi(2 p^m) = p^(m-1) (p - 1), for odd prime p.
inline Natural euler_phi_special(const Natural& p, unsigned m, bool doubled) {
    (void)doubled;  // phi(2k) = phi(k) for odd k
    if (m < 1) throw Error("euler_phi_special: m must be >= 1");
    if (p < 3 || !boost::multiprecision::bit_test(p, 0) || !is_probable_prime(p))
        throw Error("euler_phi_special: p must be an odd prime");
    return boost::multiprecision::pow(p, m - 1) * (p - 1);
}

struct Factorization {
    // (prime, multiplicity), primes strictly increasing
    std::vector<std::pair<Natural, unsigned>> factors;

    Natural product() const {
        Natural x = 1;
        for (const auto& [p, e] : factors) x *= boost::multiprecision::pow(p, e);
        return x;
    }
};

namespace detail {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
constexpr std::uint64_t kDefaultRhoIterCap = 20'000'000;

// Pollard rho (Floyd cycle finding). Returns a nontrivial factor of odd
// composite n, or 0 if the iteration cap runs out.
inline Natural pollard_rho(const Natural& n, std::uint64_t iter_cap) {
    RandomSource rng(low64(n) ^ 0xda942042e4dd58b5ULL);
    std::uint64_t spent = 0;
    while (spent < iter_cap) {
        Natural c = rng.range(1, n - 1);
        Natural x = rng.range(2, n - 1);
        Natural y = x;
        while (spent < iter_cap) {
            ++spent;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Natural diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle collapsed, retry with new c
            Natural d = gcd(diff, n);
            if (d > 1 && d < n) return d;
        }
    }
    return 0;
}

inline void factor_into(const Natural& n, std::uint64_t rho_cap,
                        std::vector<Natural>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Natural d = pollard_rho(n, rho_cap);
    if (d == 0)
        throw FactorizationTooHard(
            "factorize: composite cofactor resisted the effort budget");
    factor_into(d, rho_cap, out);
    factor_into(n / d, rho_cap, out);
}

}  // namespace detail

/// Complete prime factorization: trial division up to 10^6, Pollard rho for
/// the rest. Throws FactorizationTooHard when the rho budget runs out.
inline Factorization factorize(Natural n,
                               std::uint64_t rho_iter_cap = detail::kDefaultRhoIterCap) {
    if (n < 2) throw Error("factorize: n must be >= 2");
    std::vector<Natural> primes;
    for (std::uint64_t d = 2; d <= detail::kTrialDivisionBound; d = (d == 2 ? 3 : d + 2)) {
        if (Natural(d) * d > n) break;
        while (n % d == 0) {
            primes.emplace_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        if (Natural(detail::kTrialDivisionBound) * detail::kTrialDivisionBound > n) {
            primes.push_back(n);  // below the square of the trial bound => prime
        } else {
            detail::factor_into(n, rho_iter_cap, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (const Natural& p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1u);
    }
    return f;
}

}  // namespace unelgamal
