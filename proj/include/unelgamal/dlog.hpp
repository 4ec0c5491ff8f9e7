#pragma once

/**
 * @file dlog.hpp
 * @brief Discrete logarithms over U(n): definition-level brute force, a
 *        baby-step/giant-step solver, and the scaling benchmark that measures
 *        how attack cost grows with the group order.
 *
 * Both solvers return the least x >= 0 with base^x = target (mod n).
 */

#include "unelgamal/errors.hpp"
#include "unelgamal/group.hpp"
#include "unelgamal/modmath.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace unelgamal {

struct DlogInstance {
    Unit base;    // a verified generator
    Unit target;
};

inline DlogInstance make_dlog_instance(const Natural& base, const Natural& target,
                                       ModulusPtr mod) {
    if (!verify_generator(base, mod))
        throw Error("dlog instance requires a verified generator base");
    return DlogInstance{make_unit(base, mod), make_unit(target, mod)};
}

struct AttackReport {
    Natural group_order;
    std::string algorithm;
    unsigned bits = 0;        // bit size of p
    double elapsed_s = 0.0;
    std::uint64_t group_ops = 0;
    Natural solution;
};

/// Least x with base^x = target, by successive powers. Capped by group order.
inline Natural dlog_bruteforce(const DlogInstance& inst,
                               std::uint64_t cap = (1ULL << 26),
                               std::uint64_t* group_ops = nullptr) {
    const Natural& n = inst.base.modulus->n;
    const Natural& phi = inst.base.modulus->phi;
    if (phi > cap) throw CapExceeded("dlog_bruteforce: group order exceeds the cap");
    Natural acc = 1;
    std::uint64_t ops = 0;
    for (Natural x = 0; x < phi; ++x) {
        if (acc == inst.target.value) {
            if (group_ops) *group_ops = ops;
            return x;
        }
        acc = acc * inst.base.value % n;
        ++ops;
    }
    throw NotInSubgroup("target is not a power of the base");
}

namespace detail {

struct NaturalHash {
    std::size_t operator()(const Natural& x) const {
        return static_cast<std::size_t>(low64(x) * 0x9e3779b97f4a7c15ULL);
    }
};

}  // namespace detail

/// Baby-step/giant-step: O(sqrt(phi)) group operations and table entries.
/// Baby table keeps the smallest exponent per residue; giant steps scan
/// upward, so the first hit is the least solution.
inline Natural dlog_bsgs(const DlogInstance& inst,
                         std::uint64_t table_budget = (1ULL << 25),
                         std::uint64_t* group_ops = nullptr) {
    const Natural& n = inst.base.modulus->n;
    const Natural& phi = inst.base.modulus->phi;
    Natural ms = boost::multiprecision::sqrt(phi);
    if (ms * ms < phi) ++ms;  // ceil
    if (ms > table_budget)
        throw MemoryBudgetExceeded("dlog_bsgs: sqrt(phi) exceeds the table budget");
    const std::uint64_t m = ms.convert_to<std::uint64_t>();

    std::uint64_t ops = 0;
    std::unordered_map<Natural, std::uint64_t, detail::NaturalHash> baby;
    baby.reserve(m);
    Natural acc = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(acc, j);  // keeps the smallest j on duplicates
        acc = acc * inst.base.value % n;
        ++ops;
    }
    // giant stride: base^(-m)
    Natural stride = mod_inv(mod_pow(inst.base.value, ms, n), n);
    Natural gamma = inst.target.value;
    Natural giant_count = (phi + ms - 1) / ms;
    for (Natural i = 0; i < giant_count; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            if (group_ops) *group_ops = ops;
            return i * ms + it->second;
        }
        gamma = gamma * stride % n;
        ++ops;
    }
    throw NotInSubgroup("target is not a power of the base");
}

/// One modulus per bit size (safe prime p), `trials` random exponents each,
/// solved with BSGS. Reports come back sorted by group order.
inline std::vector<AttackReport> scaling_benchmark(
    const std::vector<unsigned>& p_bits_list, unsigned m, bool doubled,
    unsigned trials, RandomSource& rng, std::uint64_t table_budget = (1ULL << 25)) {
    std::vector<AttackReport> reports;
    for (unsigned bits : p_bits_list) {
        auto [p, q] = gen_safe_prime(bits, rng);
        ModulusPtr mod = make_modulus_safe_prime(p, q, m, doubled);
        Unit g = find_generator(mod);
        for (unsigned t = 0; t < trials; ++t) {
            Natural x = rng.below(mod->phi);
            Natural target = mod_pow(g.value, x, mod->n);
            DlogInstance inst{g, Unit{target, mod}};
            AttackReport rep;
            rep.group_order = mod->phi;
            rep.algorithm = "bsgs";
            rep.bits = bits;
            auto t0 = std::chrono::steady_clock::now();
            rep.solution = dlog_bsgs(inst, table_budget, &rep.group_ops);
            auto t1 = std::chrono::steady_clock::now();
            rep.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
            reports.push_back(std::move(rep));
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const AttackReport& a, const AttackReport& b) {
                         return a.group_order < b.group_order;
                     });
    return reports;
}

/// Least-squares slope of log(median group_ops per bit size) against
/// log(group order). Theoretical value for BSGS is 0.5.
inline double fitted_loglog_slope(const std::vector<AttackReport>& reports) {
    // group by group_order (reports are sorted)
    std::vector<double> xs, ys;
    std::size_t i = 0;
    while (i < reports.size()) {
        std::size_t j = i;
        std::vector<double> ops;
        while (j < reports.size() && reports[j].group_order == reports[i].group_order) {
            ops.push_back(static_cast<double>(reports[j].group_ops));
            ++j;
        }
        std::sort(ops.begin(), ops.end());
        double median = ops.size() % 2 ? ops[ops.size() / 2]
                                       : 0.5 * (ops[ops.size() / 2 - 1] + ops[ops.size() / 2]);
        xs.push_back(std::log(reports[i].group_order.convert_to<double>()));
        ys.push_back(std::log(median));
        i = j;
    }
    if (xs.size() < 2) throw Error("slope fit needs at least two group sizes");
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// CSV serialization: one row per trial.
inline std::string reports_to_csv(const std::vector<AttackReport>& reports) {
    std::string csv = "group_order,algorithm,bits,elapsed_s,group_ops,solution\n";
    for (const AttackReport& r : reports) {
        csv += r.group_order.str() + "," + r.algorithm + "," + std::to_string(r.bits) +
               "," + std::to_string(r.elapsed_s) + "," + std::to_string(r.group_ops) +
               "," + r.solution.str() + "\n";
    }
    return csv;
}

}  // namespace unelgamal
