#pragma once

/**
 * @file keyio.hpp
 * @brief Line-oriented decimal text formats for key and ciphertext files.
 *
 * public key:   UN-ELGAMAL PUBLIC v1 / n= p= m= doubled= r1= r2=
 * private key:  UN-ELGAMAL PRIVATE v1 / n= p= m= doubled= a=
 * ciphertext:   UN-ELGAMAL CT v1 / blocks=N / pad=c / N lines "c1=<dec> c2=<dec>"
 */

#include "unelgamal/elgamal.hpp"
#include "unelgamal/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace unelgamal {

namespace detail {

inline std::string expect_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw MalformedFile(std::string("missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

inline std::string field(std::istream& in, const std::string& key) {
    std::string line = expect_line(in, key.c_str());
    if (line.rfind(key + "=", 0) != 0)
        throw MalformedFile("expected '" + key + "=' line, got '" + line + "'");
    std::string v = line.substr(key.size() + 1);
    if (v.empty()) throw MalformedFile("empty value for " + key);
    return v;
}

inline Natural nat_field(std::istream& in, const std::string& key) {
    std::string v = field(in, key);
    for (char c : v)
        if (c < '0' || c > '9') throw MalformedFile("non-decimal value for " + key);
    return Natural(v);
}

// Shared modulus block of both key formats. Re-validates via make_modulus.
inline ModulusPtr read_modulus_block(std::istream& in) {
    Natural n = nat_field(in, "n");
    Natural p = nat_field(in, "p");
    Natural m_raw = nat_field(in, "m");
    Natural dbl = nat_field(in, "doubled");
    if (m_raw < 1 || m_raw > 64) throw MalformedFile("m out of range");
    if (dbl != 0 && dbl != 1) throw MalformedFile("doubled must be 0 or 1");
    ModulusPtr mod;
    try {
        mod = make_modulus(p, m_raw.convert_to<unsigned>(), dbl == 1);
    } catch (const Error& e) {
        throw MalformedFile(std::string("invalid modulus parameters: ") + e.what());
    }
    if (mod->n != n) throw MalformedFile("n does not match p^m / 2p^m");
    return mod;
}

inline void write_modulus_block(std::ostream& out, const Modulus& mod) {
    out << "n=" << mod.n << "\n"
        << "p=" << mod.p << "\n"
        << "m=" << mod.m << "\n"
        << "doubled=" << (mod.doubled ? 1 : 0) << "\n";
}

}  // namespace detail

inline void write_public_key(std::ostream& out, const PublicKey& pub) {
    out << "UN-ELGAMAL PUBLIC v1\n";
    detail::write_modulus_block(out, *pub.modulus);
    out << "r1=" << pub.r1 << "\n"
        << "r2=" << pub.r2 << "\n";
}

inline PublicKey read_public_key(std::istream& in) {
    if (detail::expect_line(in, "header") != "UN-ELGAMAL PUBLIC v1")
        throw MalformedFile("bad public key header");
    ModulusPtr mod = detail::read_modulus_block(in);
    Natural r1 = detail::nat_field(in, "r1");
    Natural r2 = detail::nat_field(in, "r2");
    if (!verify_generator(r1, mod)) throw MalformedFile("r1 is not a generator");
    if (!is_unit(r2, mod->n)) throw MalformedFile("r2 is not a unit");
    return PublicKey{r1, r2, mod};
}

inline void write_private_key(std::ostream& out, const PrivateKey& priv) {
    out << "UN-ELGAMAL PRIVATE v1\n";
    detail::write_modulus_block(out, *priv.modulus);
    out << "a=" << priv.a << "\n";
}

inline PrivateKey read_private_key(std::istream& in) {
    if (detail::expect_line(in, "header") != "UN-ELGAMAL PRIVATE v1")
        throw MalformedFile("bad private key header");
    ModulusPtr mod = detail::read_modulus_block(in);
    Natural a = detail::nat_field(in, "a");
    if (a < 2 || a > mod->n - 2) throw MalformedFile("a outside [2, n-2]");
    return PrivateKey{a, mod};
}

inline void write_ciphertext(std::ostream& out,
                             const std::vector<CiphertextBlock>& blocks,
                             unsigned pad_count) {
    out << "UN-ELGAMAL CT v1\n"
        << "blocks=" << blocks.size() << "\n"
        << "pad=" << pad_count << "\n";
    for (const CiphertextBlock& b : blocks)
        out << "c1=" << b.c1 << " c2=" << b.c2 << "\n";
}

struct CiphertextFile {
    std::vector<CiphertextBlock> blocks;
    unsigned pad_count = 0;
};

inline CiphertextFile read_ciphertext(std::istream& in) {
    if (detail::expect_line(in, "header") != "UN-ELGAMAL CT v1")
        throw MalformedFile("bad ciphertext header");
    Natural count = detail::nat_field(in, "blocks");
    Natural pad = detail::nat_field(in, "pad");
    if (count > 10'000'000) throw MalformedFile("block count implausibly large");
    CiphertextFile ct;
    ct.pad_count = pad.convert_to<unsigned>();
    for (Natural i = 0; i < count; ++i) {
        std::string line = detail::expect_line(in, "ciphertext block");
        std::istringstream ls(line);
        std::string f1, f2, extra;
        if (!(ls >> f1 >> f2) || (ls >> extra) ||
            f1.rfind("c1=", 0) != 0 || f2.rfind("c2=", 0) != 0)
            throw MalformedFile("bad ciphertext block line: '" + line + "'");
        try {
            ct.blocks.push_back({Natural(f1.substr(3)), Natural(f2.substr(3))});
        } catch (const std::exception&) {
            throw MalformedFile("non-decimal ciphertext block: '" + line + "'");
        }
    }
    return ct;
}

}  // namespace unelgamal
