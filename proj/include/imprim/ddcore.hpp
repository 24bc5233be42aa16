#pragma once

// Delandtsheer-Doyen parameter extraction and the counting / rank-bound
// identities that constrain a block-transitive point-imprimitive 2-design:
//
//   c = (binom(k,2) - n) / m,   d = (binom(k,2) - m) / n,
//   n = inner pairs per block,  m*c = outer pairs per block,
//
// together with the block-count identities, the orbital pair-count formula
// n_Delta = c*n*u_Delta/(c-1) (and its inner analogue), rank bounds
// (Rank-1)/2 <= PairRank <= m or n, and the 3/2-transitivity conditions in
// the maximal-rank case.

#include <cstdint>
#include <vector>

#include "imprim/arith.hpp"
#include "imprim/permgrp.hpp"
#include "imprim/report.hpp"

namespace imprim {

struct Partition {
    std::vector<std::uint32_t> class_of;  // point -> class index
    std::uint64_t c = 0;                  // class size
    std::uint64_t d = 0;                  // number of classes

    Partition(std::vector<std::uint32_t> cls, std::uint64_t class_size, std::uint64_t num_classes)
        : class_of(std::move(cls)), c(class_size), d(num_classes) {
        if (c < 2 || d < 2) throw std::invalid_argument("Partition: must be non-trivial");
        if (class_of.size() != c * d) throw std::invalid_argument("Partition: size mismatch");
        std::vector<std::uint64_t> counts(d, 0);
        for (std::uint32_t j : class_of) {
            if (j >= d) throw std::invalid_argument("Partition: class index out of range");
            ++counts[j];
        }
        for (std::uint64_t cnt : counts)
            if (cnt != c) throw std::invalid_argument("Partition: classes must have equal size");
    }
};

struct DDParams {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t inner_count = 0;  // = n
    std::uint64_t outer_count = 0;  // = m*c

    friend bool operator==(const DDParams&, const DDParams&) = default;
};

struct DesignParams {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    BigCount lambda;
    BigCount b;
    BigCount r;
};

struct NotDdConsistent : std::runtime_error {
    std::uint64_t inner = 0;
    std::uint64_t outer = 0;
    NotDdConsistent(const std::string& what, std::uint64_t in, std::uint64_t out)
        : std::runtime_error(what), inner(in), outer(out) {}
};

inline std::uint64_t count_inner_pairs(const std::vector<std::uint32_t>& block,
                                       const Partition& part) {
    std::uint64_t inner = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (part.class_of[block[i]] == part.class_of[block[j]]) ++inner;
    return inner;
}

// Extracts (m, n) from one block. Fails unless the counts satisfy the
// divisibility and both class-count equations exactly: emitting an unfounded
// (m, n) would be worse than refusing.
inline DDParams dd_from_block(const std::vector<std::uint32_t>& block, const Partition& part) {
    const std::uint64_t k = block.size();
    if (k < 2) throw std::invalid_argument("dd_from_block: block size must be >= 2");
    const std::uint64_t inner = count_inner_pairs(block, part);
    const std::uint64_t outer = binom2(k) - inner;
    if (inner == 0 || outer == 0)
        throw NotDdConsistent("dd_from_block: block must contain both inner and outer pairs",
                              inner, outer);
    if (outer % part.c != 0)
        throw NotDdConsistent("dd_from_block: outer pair count not divisible by class size",
                              inner, outer);
    const std::uint64_t m = outer / part.c;
    const std::uint64_t n = inner;
    if (m * part.c + n != binom2(k))
        throw NotDdConsistent("dd_from_block: pair counts inconsistent", inner, outer);
    if ((binom2(k) - n) % m != 0 || (binom2(k) - n) / m != part.c ||
        (binom2(k) - m) % n != 0 || (binom2(k) - m) / n != part.d)
        throw NotDdConsistent("dd_from_block: class-count equations fail", inner, outer);
    return DDParams{m, n, inner, outer};
}

// Block-count identities. Returns the exact number of blocks alongside the
// report; both expressions must agree and divide exactly.
struct CountingIdentities {
    Report report;
    BigCount b;
};

inline CountingIdentities check_counting_identities(std::uint64_t c, std::uint64_t d,
                                                    std::uint64_t k, std::uint64_t m,
                                                    std::uint64_t n, const BigCount& lambda) {
    CountingIdentities out;
    Report& rep = out.report;
    const BigCount kc2 = binom2(k);
    rep.check_eq("points-minus-one", BigCount(c) * d - 1, kc2 * (c - 1) / n);
    rep.check_true("points-minus-one-exact", (kc2 * (c - 1)) % n == 0);
    rep.check_eq("points-minus-one-dual", BigCount(c) * d - 1, kc2 * (d - 1) / m);
    rep.check_true("points-minus-one-dual-exact", (kc2 * (d - 1)) % m == 0);
    rep.check_eq("mc-nd-balance", BigCount(m) * (c - 1), BigCount(n) * (d - 1));
    const BigCount num1 = BigCount(c) * d * (c - 1) * lambda;
    const BigCount num2 = BigCount(c) * d * (d - 1) * lambda;
    rep.check_true("block-count-exact", num1 % (2 * n) == 0 && num2 % (2 * m) == 0);
    const BigCount b1 = num1 / (2 * n), b2 = num2 / (2 * m);
    rep.check_eq("block-count-agree", b1, b2);
    out.b = b1;
    return out;
}

// (Rank(H)-1)/2 <= PairRank(H) <= n and the analogue for K with m.
inline Report check_rank_bounds(std::uint32_t h_rank, std::uint32_t h_pair_rank, std::uint64_t n,
                                std::uint32_t k_rank, std::uint32_t k_pair_rank, std::uint64_t m) {
    Report rep;
    rep.check_true("h-rank-lower", h_rank >= 1 && h_rank - 1 <= 2 * h_pair_rank,
                   "Rank(H)-1 <= 2 PairRank(H)");
    rep.check_true("h-pair-rank-upper", h_pair_rank <= n, "PairRank(H) <= n");
    rep.check_true("k-rank-lower", k_rank >= 1 && k_rank - 1 <= 2 * k_pair_rank,
                   "Rank(K)-1 <= 2 PairRank(K)");
    rep.check_true("k-pair-rank-upper", k_pair_rank <= m, "PairRank(K) <= m");
    return rep;
}

// A block as (class, position-in-class) coordinates, for orbital pair counts.
struct ClassPoint {
    std::uint32_t cls = 0;
    std::uint32_t pos = 0;
};

// Per-orbital pair counts in a block:
//   outer, for each K-orbital-pair {Delta, Delta*}:  c*n*u_Delta/(c-1) pairs,
//   inner, for each H-orbital-pair {Sigma, Sigma*}:  n*u_Sigma/(c-1) pairs,
// with integrality of n*u/(c-1) and totals recovering m*c and n.
inline Report verify_orbital_pair_counts(const std::vector<ClassPoint>& block,
                                         const OrbitalDecomposition& h_orbitals,
                                         const OrbitalDecomposition& k_orbitals,
                                         std::uint64_t c, std::uint64_t n) {
    Report rep;
    const auto k_reps = k_orbitals.pair_class_reps();
    const auto h_reps = h_orbitals.pair_class_reps();
    std::vector<std::uint64_t> outer_counts(k_orbitals.num_nontrivial(), 0);
    std::vector<std::uint64_t> inner_counts(h_orbitals.num_nontrivial(), 0);
    std::uint64_t outer_total = 0, inner_total = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j) {
            const ClassPoint& a = block[i];
            const ClassPoint& b = block[j];
            if (a.cls != b.cls) {
                std::uint32_t lab = k_orbitals.orbital_id(a.cls, b.cls);
                ++outer_counts[std::min(lab, k_orbitals.pairing(lab))];
                ++outer_total;
            } else {
                std::uint32_t lab = h_orbitals.orbital_id(a.pos, b.pos);
                ++inner_counts[std::min(lab, h_orbitals.pairing(lab))];
                ++inner_total;
            }
        }
    std::uint64_t expected_outer_total = 0, expected_inner_total = 0;
    for (std::uint32_t lab : k_reps) {
        const std::uint64_t u = k_orbitals.sym_subdegree(lab);
        rep.check_true("k-orbital-" + std::to_string(lab) + "-integral",
                       (n * u) % (c - 1) == 0, "n*u_Delta/(c-1) integral");
        const std::uint64_t expected = c * n * u / (c - 1);
        rep.check_eq("k-orbital-" + std::to_string(lab) + "-count", outer_counts[lab], expected,
                     "pairs of B spanning Delta-related classes");
        expected_outer_total += expected;
    }
    for (std::uint32_t lab : h_reps) {
        const std::uint64_t u = h_orbitals.sym_subdegree(lab);
        rep.check_true("h-orbital-" + std::to_string(lab) + "-integral",
                       (n * u) % (c - 1) == 0, "n*u_Sigma/(c-1) integral");
        const std::uint64_t expected = n * u / (c - 1);
        rep.check_eq("h-orbital-" + std::to_string(lab) + "-count", inner_counts[lab], expected,
                     "inner pairs of B lying in Sigma");
        expected_inner_total += expected;
    }
    rep.check_eq("outer-total", outer_total, expected_outer_total, "sum n_Delta = m*c");
    rep.check_eq("inner-total", inner_total, expected_inner_total, "sum n_Sigma = n");
    return rep;
}

// Maximal-rank case Rank = 2t+1: group order must be odd and every
// non-trivial subdegree must equal (degree-1)/(2t).
inline Report check_max_rank_conditions(const GeneratorSet& gens,
                                        const OrbitalDecomposition& od, std::uint64_t t,
                                        std::uint64_t order_cap = 10'000'000) {
    Report rep;
    rep.check_eq("max-rank", static_cast<std::uint64_t>(od.rank()), 2 * t + 1);
    const std::uint64_t deg = od.degree();
    rep.check_true("subdegree-divisible", (deg - 1) % (2 * t) == 0);
    const std::uint64_t want = (deg - 1) / (2 * t);
    auto th = is_three_halves_transitive(od);
    rep.check_true("three-halves", th.is_three_halves, "all non-trivial subdegrees equal");
    rep.check_eq("common-subdegree", th.common_subdegree, want);
    try {
        BigCount order = group_order_by_enumeration(gens, order_cap);
        rep.check_true("order-odd", order % 2 == 1, "|G| = " + order.str());
    } catch (const ResourceError&) {
        rep.skip("order-odd", "order cap exceeded; parity not checked");
    }
    return rep;
}

// r and b from (v, k, lambda) via lambda(v-1) = r(k-1) and vr = bk.
inline DesignParams design_params(std::uint64_t v, std::uint64_t k, const BigCount& lambda) {
    DesignParams dp;
    dp.v = v;
    dp.k = k;
    dp.lambda = lambda;
    const BigCount rnum = lambda * (v - 1);
    if (k < 2 || rnum % (k - 1) != 0)
        throw std::invalid_argument("design_params: not a 2-design parameter set (r)");
    dp.r = rnum / (k - 1);
    const BigCount bnum = dp.r * v;
    if (bnum % k != 0)
        throw std::invalid_argument("design_params: not a 2-design parameter set (b)");
    dp.b = bnum / k;
    return dp;
}

}  // namespace imprim
