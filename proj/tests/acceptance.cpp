// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion carries its own time budget.

#include "unelgamal/unelgamal.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace unelgamal;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (elapsed > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name
              << " (" << elapsed << " s / " << budget_s << " s)";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

KeyPair worked_example_key() { return keygen_exact(29, 1, false, 4, 3); }

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    criterion(1, "golden encryption of the worked example", 1.0, [](std::string& d) {
        KeyPair kp = worked_example_key();
        const std::vector<CiphertextBlock> expected = {
            {11, 26}, {11, 14}, {11, 26}, {11, 18}, {11, 13},
            {11, 10}, {11, 0},  {11, 11}, {11, 1}};
        auto cts = encrypt_message(kp.pub, encode("I like math", 29), Natural(5));
        if (cts != expected) {
            d = "ciphertext mismatch";
            return false;
        }
        return kp.pub.r1 == 3 && kp.pub.r2 == 23 && kp.pub.modulus->n == 29;
    });

    criterion(2, "golden decryption of the worked example", 1.0, [](std::string& d) {
        KeyPair kp = worked_example_key();
        const std::vector<CiphertextBlock> cts = {
            {11, 26}, {11, 14}, {11, 26}, {11, 18}, {11, 13},
            {11, 10}, {11, 0},  {11, 11}, {11, 1}};
        EncodedMessage msg = decrypt_message(kp.priv, cts);
        if (msg.blocks != std::vector<Natural>{8, 11, 8, 10, 4, 12, 0, 19, 7}) {
            d = "block mismatch";
            return false;
        }
        return decode(msg) == "ILIKEMATH";
    });

    criterion(3, "dlog base 3 of 13 in U(17) is 4, both solvers", 1.0,
              [](std::string&) {
                  auto m17 = make_modulus(17, 1, false);
                  DlogInstance inst = make_dlog_instance(3, 13, m17);
                  return dlog_bruteforce(inst) == 4 && dlog_bsgs(inst) == 4;
              });

    criterion(4, "cyclicity classification matches brute force, n in [2,512]",
              30.0, [](std::string& d) {
                  for (std::uint64_t n = 2; n <= 512; ++n) {
                      bool oracle = is_cyclic_bruteforce(n);
                      bool classified =
                          classify_modulus(n).kind != ModulusClass::NotCyclic;
                      if (oracle != classified) {
                          d = "mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "abelian group laws, exhaustive n <= 2000 + random triples",
              60.0, [](std::string& d) {
                  for (const auto& mod : testutil::supported_moduli(2000)) {
                      const std::uint64_t n = mod->n.convert_to<std::uint64_t>();
                      auto units = testutil::units_u64(n);
                      std::vector<bool> in_group(n, false);
                      for (auto u : units) in_group[u] = true;
                      for (auto a : units) {
                          // identity and inverse
                          if (testutil::mulmod_u64(1, a, n) != a) {
                              d = "identity fails, n=" + std::to_string(n);
                              return false;
                          }
                          std::uint64_t w =
                              mod_inv(a, n).convert_to<std::uint64_t>();
                          if (testutil::mulmod_u64(a, w, n) != 1 || !in_group[w]) {
                              d = "inverse fails, n=" + std::to_string(n);
                              return false;
                          }
                          for (auto b : units) {
                              if (b > a) break;  // commutativity covers b > a
                              std::uint64_t ab = testutil::mulmod_u64(a, b, n);
                              if (!in_group[ab]) {
                                  d = "closure fails, n=" + std::to_string(n);
                                  return false;
                              }
                              if (ab != testutil::mulmod_u64(b, a, n)) {
                                  d = "commutativity fails, n=" + std::to_string(n);
                                  return false;
                              }
                          }
                      }
                  }
                  // associativity on random triples through the Unit interface
                  RandomSource rng(2718);
                  auto mods = testutil::supported_moduli(2000);
                  for (int i = 0; i < 10000; ++i) {
                      const auto& mod =
                          mods[rng.below(mods.size()).convert_to<std::size_t>()];
                      auto pick = [&] {
                          for (;;) {
                              Natural x = rng.range(1, mod->n - 1);
                              if (gcd(x, mod->n) == 1) return make_unit(x, mod);
                          }
                      };
                      Unit a = pick(), b = pick(), c = pick();
                      if (mul(mul(a, b), c).value != mul(a, mul(b, c)).value) {
                          d = "associativity fails, n=" + mod->n.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "round trip: exhaustive n <= 200, all k; 10^4 random triples",
              120.0, [](std::string& d) {
                  RandomSource rng(5050);
                  for (const auto& mod : testutil::supported_moduli(200)) {
                      if (mod->n < 5) continue;
                      Unit g = find_generator(mod);
                      Natural a = rng.range(2, mod->n - 2);
                      KeyPair kp =
                          keygen_exact(mod->p, mod->m, mod->doubled, a, g.value);
                      for (Natural P = 0; P < mod->n; ++P)
                          for (Natural k = 1; k <= mod->n - 2; ++k)
                              if (decrypt_block(kp.priv,
                                                encrypt_block(kp.pub, P, k)) != P) {
                                  d = "n=" + mod->n.str() + " P=" + P.str() +
                                      " k=" + k.str();
                                  return false;
                              }
                  }
                  // randomized: p up to 64 bits, m <= 3, both forms;
                  // 500 fresh keys x 20 (P, k) pairs = 10^4 triples
                  for (int i = 0; i < 500; ++i) {
                      unsigned bits =
                          5 + static_cast<unsigned>(rng.below(60).convert_to<std::uint64_t>());
                      unsigned m = 1 + static_cast<unsigned>(
                                           rng.below(3).convert_to<std::uint64_t>());
                      bool doubled = rng.below(2) == 1;
                      auto [p, q] = gen_safe_prime(bits, rng);
                      auto mod = make_modulus_safe_prime(p, q, m, doubled);
                      KeyPair kp = keygen_exact(p, m, doubled,
                                                rng.range(2, mod->n - 2),
                                                find_generator(mod).value);
                      for (int j = 0; j < 20; ++j) {
                          Natural P = rng.below(mod->n);
                          Natural k = rng.range(1, mod->n - 2);
                          if (decrypt_block(kp.priv,
                                            encrypt_block(kp.pub, P, k)) != P) {
                              d = "random trial " + std::to_string(i);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "find_generator order = phi (n <= 2000) and 64-bit safe primes",
              60.0, [](std::string& d) {
                  for (const auto& mod : testutil::supported_moduli(2000)) {
                      Unit g = find_generator(mod);
                      std::uint64_t n = mod->n.convert_to<std::uint64_t>();
                      if (Natural(testutil::order_u64(
                              g.value.convert_to<std::uint64_t>(), n)) != mod->phi) {
                          d = "brute-force order mismatch at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  RandomSource rng(64);
                  for (int i = 0; i < 5; ++i) {
                      auto [p, q] = gen_safe_prime(64, rng);
                      auto mod = make_modulus_safe_prime(p, q, 1, false);
                      Unit g = find_generator(mod);
                      if (!verify_generator(g.value, mod) ||
                          element_order(g) != mod->phi) {
                          d = "divisor test fails for p=" + p.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "BSGS cost scaling: log-log slope in [0.4, 0.6]", 300.0,
              [](std::string& d) {
                  RandomSource rng(8128);
                  auto reports =
                      scaling_benchmark({12, 16, 20, 24}, 1, false, 5, rng);
                  double slope = fitted_loglog_slope(reports);
                  std::ostringstream ss;
                  ss << "slope=" << slope;
                  d = ss.str();
                  return slope >= 0.4 && slope <= 0.6;
              });

    criterion(9, "BSGS equals brute force on 500 random instances", 120.0,
              [](std::string& d) {
                  RandomSource rng(909);
                  for (int i = 0; i < 500; ++i) {
                      // phi <= 2^20: p sized so p^m (or 2 p^m) keeps phi small
                      unsigned m = 1 + static_cast<unsigned>(
                                           rng.below(2).convert_to<std::uint64_t>());
                      unsigned bits = m == 1 ? 4 + static_cast<unsigned>(
                                                       rng.below(16).convert_to<std::uint64_t>())
                                             : 4 + static_cast<unsigned>(
                                                       rng.below(6).convert_to<std::uint64_t>());
                      bool doubled = rng.below(2) == 1;
                      auto [p, q] = gen_safe_prime(bits, rng);
                      auto mod = make_modulus_safe_prime(p, q, m, doubled);
                      if (mod->phi > (1 << 20)) {
                          --i;
                          continue;
                      }
                      Unit g = find_generator(mod);
                      Natural x = rng.below(mod->phi);
                      DlogInstance inst{g, Unit{mod_pow(g.value, x, mod->n), mod}};
                      if (dlog_bsgs(inst) != dlog_bruteforce(inst)) {
                          d = "mismatch, n=" + mod->n.str() + " x=" + x.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "non-unit plaintexts round-trip for n in {9, 27, 18, 54}",
              30.0, [](std::string& d) {
                  RandomSource rng(10);
                  for (auto [m, doubled] :
                       std::vector<std::pair<unsigned, bool>>{
                           {2, false}, {3, false}, {2, true}, {3, true}}) {
                      auto mod = make_modulus(3, m, doubled);
                      KeyPair kp =
                          keygen_exact(3, m, doubled, rng.range(2, mod->n - 2),
                                       find_generator(mod).value);
                      for (Natural P = 0; P < mod->n; ++P) {
                          if (P != 0 && gcd(P, mod->n) == 1) continue;
                          for (Natural k = 1; k <= mod->n - 2; ++k)
                              if (decrypt_block(kp.priv,
                                                encrypt_block(kp.pub, P, k)) != P) {
                                  d = "n=" + mod->n.str() + " P=" + P.str();
                                  return false;
                              }
                      }
                  }
                  return true;
              });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria FAILED\n";
    return 1;
}
