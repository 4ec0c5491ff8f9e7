#pragma once

/**
 * @file elgamal.hpp
 * @brief ElGamal over U(n): key generation, per-block encryption
 *        (C1, C2) = (r1^k, P * r2^k), and decryption P = C2 * (C1^a)^-1,
 *        all mod n.
 *
 * Plaintext blocks range over all of [0, n), not just the units: only C1 and
 * r2^k ever need inverses, so non-unit blocks (including 0) round-trip.
 */

#include "unelgamal/codec.hpp"
#include "unelgamal/errors.hpp"
#include "unelgamal/group.hpp"
#include "unelgamal/modmath.hpp"

#include <utility>
#include <vector>

namespace unelgamal {

struct PublicKey {
    Natural r1;  // generator
    Natural r2;  // r1^a mod n
    ModulusPtr modulus;
};

struct PrivateKey {
    Natural a;  // in [2, n-2]
    ModulusPtr modulus;
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

struct CiphertextBlock {
    Natural c1;
    Natural c2;
    bool operator==(const CiphertextBlock&) const = default;
};

/// Generates p as a safe prime so phi's factorization is immediate, picks the
/// deterministic generator, and samples a uniformly from [2, n-2].
inline KeyPair keygen(unsigned p_bits, unsigned m, bool doubled, RandomSource& rng) {
    if (p_bits < 3) throw Error("keygen: p_bits must be >= 3");
    auto [p, q] = gen_safe_prime(p_bits, rng);
    ModulusPtr mod = make_modulus_safe_prime(p, q, m, doubled);
    Unit r1 = find_generator(mod);
    Natural a = rng.range(2, mod->n - 2);
    Natural r2 = mod_pow(r1.value, a, mod->n);
    return {PublicKey{r1.value, r2, mod}, PrivateKey{a, mod}};
}

/// Test-injection path: exact (p, m, doubled, a, r1) for reproducing known
/// key material. r1 must pass verify_generator.
inline KeyPair keygen_exact(const Natural& p, unsigned m, bool doubled,
                            const Natural& a, const Natural& r1) {
    ModulusPtr mod = make_modulus(p, m, doubled);
    if (!verify_generator(r1, mod)) throw Error("keygen_exact: r1 is not a generator");
    if (a < 2 || a > mod->n - 2) throw Error("keygen_exact: a outside [2, n-2]");
    Natural r2 = mod_pow(r1, a, mod->n);
    return {PublicKey{r1, r2, mod}, PrivateKey{a, mod}};
}

inline CiphertextBlock encrypt_block(const PublicKey& pub, const Natural& P,
                                     const Natural& k) {
    const Natural& n = pub.modulus->n;
    if (P >= n) throw BlockOutOfRange("plaintext block must be < n");
    if (k < 1 || k > n - 2) throw BadEphemeral("ephemeral k must be in [1, n-2]");
    return {mod_pow(pub.r1, k, n), P * mod_pow(pub.r2, k, n) % n};
}

inline Natural decrypt_block(const PrivateKey& priv, const CiphertextBlock& ct) {
    const Natural& n = priv.modulus->n;
    Natural mask_inv = mod_inv(mod_pow(ct.c1, priv.a, n), n);
    return ct.c2 * mask_inv % n;
}

enum class KPolicy { FixedK, FreshKPerBlock };

/// Fixed-k mode: one ephemeral for the whole message (the worked-example
/// mode; identical blocks yield identical ciphertexts).
inline std::vector<CiphertextBlock> encrypt_message(const PublicKey& pub,
                                                    const EncodedMessage& msg,
                                                    const Natural& fixed_k) {
    std::vector<CiphertextBlock> out;
    out.reserve(msg.blocks.size());
    for (const Natural& P : msg.blocks) out.push_back(encrypt_block(pub, P, fixed_k));
    return out;
}

/// Fresh-k mode (default policy): a new uniform k per block.
inline std::vector<CiphertextBlock> encrypt_message(const PublicKey& pub,
                                                    const EncodedMessage& msg,
                                                    RandomSource& rng) {
    std::vector<CiphertextBlock> out;
    out.reserve(msg.blocks.size());
    for (const Natural& P : msg.blocks) {
        Natural k = rng.range(1, pub.modulus->n - 2);
        out.push_back(encrypt_block(pub, P, k));
    }
    return out;
}

/// Blockwise decryption; pad metadata is supplied by the caller (it travels
/// in the ciphertext file header, not in the blocks).
inline EncodedMessage decrypt_message(const PrivateKey& priv,
                                      const std::vector<CiphertextBlock>& cts,
                                      unsigned pad_count = 0) {
    EncodedMessage msg;
    msg.letters_per_block = letters_per_block_for(priv.modulus->n);
    msg.pad_count = pad_count;
    msg.blocks.reserve(cts.size());
    for (const CiphertextBlock& ct : cts) msg.blocks.push_back(decrypt_block(priv, ct));
    return msg;
}

}  // namespace unelgamal
