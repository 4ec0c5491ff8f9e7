#pragma once

/**
 * @file group.hpp
 * @brief The multiplicative group of units U(n) for n = p^m or 2p^m:
 *        validated moduli, membership, generators and element orders, plus
 *        brute-force oracles (unit enumeration, cyclicity) for desk-scale n.
 *
 * U(n) is cyclic exactly when n is 2, 4, p^m or 2p^m with p an odd prime.
 * Modulus only admits the two cryptosystem forms p^m and 2p^m; the small
 * cases 2 and 4 are still recognized by classify_modulus.
 */

#include "unelgamal/errors.hpp"
#include "unelgamal/modmath.hpp"
#include "unelgamal/natural.hpp"

#include <memory>
#include <string>
#include <vector>

namespace unelgamal {

struct Modulus {
    Natural n;
    Natural p;       // odd prime
    unsigned m = 1;  // exponent
    bool doubled = false;
    Natural phi;     // p^(m-1) (p - 1)
    Factorization phi_factors;
};

using ModulusPtr = std::shared_ptr<const Modulus>;

namespace detail {

inline ModulusPtr build_modulus(const Natural& p, unsigned m, bool doubled,
                                Factorization phi_factors) {
    auto mod = std::make_shared<Modulus>();
    mod->p = p;
    mod->m = m;
    mod->doubled = doubled;
    mod->n = boost::multiprecision::pow(p, m);
    if (doubled) mod->n *= 2;
    mod->phi = boost::multiprecision::pow(p, m - 1) * (p - 1);
    mod->phi_factors = std::move(phi_factors);
    return mod;
}

// phi = p^(m-1) (p-1): factor p-1 and append p^(m-1).
inline Factorization phi_factors_from(const Natural& p, unsigned m,
                                      const Factorization& p_minus_1_factors) {
    Factorization f = p_minus_1_factors;
    if (m > 1) f.factors.emplace_back(p, m - 1);  // p exceeds every factor of p-1
    return f;
}

}  // namespace detail

/// Validates (p, m, doubled) and builds the modulus with phi and its
/// factorization populated. Throws InvalidPrime / InvalidExponent.
inline ModulusPtr make_modulus(const Natural& p, unsigned m, bool doubled,
                               std::uint64_t rho_iter_cap = detail::kDefaultRhoIterCap) {
    if (m < 1) throw InvalidExponent("m must be >= 1");
    if (p < 3 || !boost::multiprecision::bit_test(p, 0))
        throw InvalidPrime("p must be an odd prime >= 3");
    if (!is_probable_prime(p)) throw InvalidPrime("p is composite");
    return detail::build_modulus(p, m, doubled, detail::phi_factors_from(
        p, m, factorize(p - 1, rho_iter_cap)));
}

/// Fast path for safe primes p = 2q + 1: phi factors as 2 * q * p^(m-1)
/// without any factoring work.
inline ModulusPtr make_modulus_safe_prime(const Natural& p, const Natural& q,
                                          unsigned m, bool doubled) {
    if (m < 1) throw InvalidExponent("m must be >= 1");
    if (p != 2 * q + 1 || !is_probable_prime(p) || !is_probable_prime(q))
        throw InvalidPrime("p must be a safe prime 2q+1 with q prime");
    Factorization pm1;
    pm1.factors.emplace_back(Natural(2), 1u);
    if (q > 2) pm1.factors.emplace_back(q, 1u);
    else pm1.factors[0].second = 2;  // p = 5, p-1 = 4
    return detail::build_modulus(p, m, doubled,
                                 detail::phi_factors_from(p, m, pm1));
}

enum class ModulusClass { Cyclic_P_M, Cyclic_2P_M, Cyclic_Small, NotCyclic };

struct Classification {
    ModulusClass kind;
    Natural p;   // set for the p^m / 2p^m kinds
    unsigned m = 0;
};

/// Decides which of the cyclic forms {2, 4, p^m, 2p^m} the integer n has,
/// if any, by factoring it.
inline Classification classify_modulus(const Natural& n,
                                       std::uint64_t rho_iter_cap = detail::kDefaultRhoIterCap) {
    if (n < 2) throw Error("classify_modulus: n must be >= 2");
    if (n == 2 || n == 4) return {ModulusClass::Cyclic_Small, 0, 0};
    Natural odd = n;
    bool halved = false;
    if (odd % 2 == 0) {
        odd /= 2;
        halved = true;
        if (odd % 2 == 0) return {ModulusClass::NotCyclic, 0, 0};
    }
    Factorization f = factorize(odd, rho_iter_cap);
    if (f.factors.size() != 1) return {ModulusClass::NotCyclic, 0, 0};
    const auto& [p, m] = f.factors.front();
    return {halved ? ModulusClass::Cyclic_2P_M : ModulusClass::Cyclic_P_M, p, m};
}

inline bool is_unit(const Natural& x, const Natural& n) {
    return x >= 1 && x < n && gcd(x, n) == 1;
}

struct Unit {
    Natural value;
    ModulusPtr modulus;
};

inline Unit make_unit(const Natural& x, ModulusPtr mod) {
    if (!is_unit(x, mod->n)) throw Error("value is not a unit mod n");
    return Unit{x, std::move(mod)};
}

inline Unit mul(const Unit& a, const Unit& b) {
    if (a.modulus->n != b.modulus->n)
        throw ModulusMismatch("units live in different groups");
    return Unit{a.value * b.value % a.modulus->n, a.modulus};
}

inline Unit inverse(const Unit& a) {
    return Unit{mod_inv(a.value, a.modulus->n), a.modulus};
}

/// Least d >= 1 with g^d = 1 (mod n), via divisors of phi: start from phi and
/// strip each prime factor while the power stays at 1. Never iterates.
inline Natural element_order(const Unit& g) {
    const Natural& n = g.modulus->n;
    Natural d = g.modulus->phi;
    for (const auto& [q, e] : g.modulus->phi_factors.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (d % q != 0) break;
            if (mod_pow(g.value, d / q, n) != 1) break;
            d /= q;
        }
    }
    return d;
}

/// True iff g is a unit and g^(phi/q) != 1 for every prime q | phi.
inline bool verify_generator(const Natural& g, const Modulus& mod) {
    if (!is_unit(g, mod.n)) return false;
    for (const auto& [q, e] : mod.phi_factors.factors)
        if (mod_pow(g, mod.phi / q, mod.n) == 1) return false;
    return true;
}

inline bool verify_generator(const Natural& g, const ModulusPtr& mod) {
    return verify_generator(g, *mod);
}

/// Deterministic generator construction: smallest primitive root g0 of p,
/// lifted to p^m (g0, or g0 + p when g0^(p-1) = 1 mod p^2), then for 2p^m
/// fixed to odd parity by adding p^m.
inline Unit find_generator(const ModulusPtr& mod) {
    const Natural& p = mod->p;
    // factors of p-1 = phi_factors with p's own entry dropped
    std::vector<Natural> pm1_primes;
    for (const auto& [q, e] : mod->phi_factors.factors)
        if (q != p) pm1_primes.push_back(q);
    Natural p_minus_1 = p - 1;
    Natural g0 = 0;
    for (Natural g = 2; g < p; ++g) {
        bool primitive = true;
        for (const Natural& q : pm1_primes) {
            if (mod_pow(g, p_minus_1 / q, p) == 1) { primitive = false; break; }
        }
        if (primitive) { g0 = g; break; }
    }
    if (g0 == 0) throw Error("no primitive root found (p not prime?)");
    Natural g = g0;
    if (mod->m >= 2 && mod_pow(g0, p_minus_1, p * p) == 1) g = g0 + p;
    if (mod->doubled) {
        Natural pm = boost::multiprecision::pow(p, mod->m);
        if (g % 2 == 0) g += pm;
    }
    return Unit{g, mod};
}

/// All units of n in ascending order. Brute-force oracle; capped.
inline std::vector<Natural> enumerate_units(const Natural& n,
                                            std::uint64_t cap = (1ULL << 20)) {
    if (n > cap) throw CapExceeded("enumerate_units: n exceeds the desk-scale cap");
    std::vector<Natural> units;
    for (Natural x = 1; x < n; ++x)
        if (gcd(x, n) == 1) units.push_back(x);
    if (n == 1) units.push_back(0);  // degenerate; unused by callers
    return units;
}

/// True iff some unit's iterated powers enumerate all of U(n). Oracle side
/// of the cyclicity theorem; capped.
inline bool is_cyclic_bruteforce(const Natural& n,
                                 std::uint64_t cap = (1ULL << 20)) {
    if (n > cap) throw CapExceeded("is_cyclic_bruteforce: n exceeds the cap");
    std::vector<Natural> units = enumerate_units(n, cap);
    const std::size_t order = units.size();
    for (const Natural& g : units) {
        Natural acc = g % n;
        std::size_t len = 1;
        while (acc != 1 % n) {
            acc = acc * g % n;
            ++len;
        }
        if (len == order) return true;
    }
    return false;
}

inline std::string to_string(ModulusClass c) {
    switch (c) {
        case ModulusClass::Cyclic_P_M: return "cyclic: p^m";
        case ModulusClass::Cyclic_2P_M: return "cyclic: 2p^m";
        case ModulusClass::Cyclic_Small: return "cyclic: small";
        case ModulusClass::NotCyclic: return "not cyclic";
    }
    return "?";
}

}  // namespace unelgamal
