#pragma once

// The Desarguesian projective plane PG(2, q) with its Singer cycle, modelled
// through GF(q^3): points are the nonzero field elements modulo GF(q)*
// scalars, indexed by discrete log mod v = q^2+q+1, which turns the Singer
// cycle into the +1 shift and lines into the translates of one difference
// set. When v = c*d, the order-c subgroup of the cycle partitions the points
// into d classes of size c, and the induced class/point groups are regular
// cyclic groups whose ranks attain the upper bounds of the rank inequalities.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "imprim/arith.hpp"
#include "imprim/ddcore.hpp"
#include "imprim/gf.hpp"
#include "imprim/permgrp.hpp"
#include "imprim/report.hpp"

namespace imprim {

struct SingerPlane {
    PrimePower q;
    std::uint64_t v = 0;                          // q^2 + q + 1
    std::vector<std::vector<std::uint32_t>> lines;  // v lines of q+1 sorted point indices
    Perm singer;                                  // i -> i+1 (mod v)
};

inline SingerPlane build_plane(std::uint64_t q) {
    auto pp = is_prime_power(q);
    if (!pp) throw std::invalid_argument("build_plane: q must be a prime power");
    SingerPlane plane;
    plane.q = *pp;
    plane.v = q * q + q + 1;
    Field cubic(pp->p, 3 * pp->a);
    const std::uint64_t v = plane.v;

    // GF(q) inside GF(q^3): zero plus the unique subgroup of order q-1.
    std::vector<std::uint64_t> subfield{0};
    for (std::uint64_t j = 0; j < q - 1; ++j) subfield.push_back(cubic.exp_of(j * v));

    // One line: the projective points of the span of {1, zeta}.
    std::set<std::uint32_t> first;
    for (std::uint64_t x : subfield)
        for (std::uint64_t y : subfield) {
            if (x == 0 && y == 0) continue;
            const std::uint64_t e = cubic.add(x, cubic.mul(y, cubic.zeta()));
            first.insert(static_cast<std::uint32_t>(cubic.dlog(e) % v));
        }
    if (first.size() != q + 1) throw std::logic_error("build_plane: bad line size");

    for (std::uint64_t t = 0; t < v; ++t) {
        std::vector<std::uint32_t> line;
        for (std::uint32_t i : first) line.push_back(static_cast<std::uint32_t>((i + t) % v));
        std::sort(line.begin(), line.end());
        plane.lines.push_back(std::move(line));
    }

    std::vector<std::uint32_t> im(v);
    for (std::uint64_t i = 0; i < v; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % v);
    plane.singer = Perm(std::move(im));
    return plane;
}

// Exhaustive verification that the plane is a 2-(v, q+1, 1) design and that
// the Singer cycle is regular on points and on lines.
inline Report verify_plane(const SingerPlane& plane) {
    Report rep;
    const std::uint64_t v = plane.v;
    std::vector<std::uint32_t> cover(v * v, 0);
    for (const auto& line : plane.lines)
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j)
                ++cover[static_cast<std::uint64_t>(line[i]) * v + line[j]];
    bool lambda_one = true;
    for (std::uint64_t x = 0; x < v && lambda_one; ++x)
        for (std::uint64_t y = x + 1; y < v; ++y)
            if (cover[x * v + y] != 1) { lambda_one = false; break; }
    rep.check_true("pair-coverage", lambda_one, "every point pair on exactly one line");
    std::set<std::vector<std::uint32_t>> distinct(plane.lines.begin(), plane.lines.end());
    rep.check_eq("line-count", static_cast<std::uint64_t>(distinct.size()), v);
    bool sizes = true;
    for (const auto& line : plane.lines) sizes = sizes && line.size() == plane.q.value + 1;
    rep.check_true("line-size", sizes);
    // singer maps lines to lines (regularity on lines follows from the count)
    bool closed = true;
    for (const auto& line : plane.lines) {
        std::vector<std::uint32_t> img;
        for (std::uint32_t pt : line) img.push_back(plane.singer[pt]);
        std::sort(img.begin(), img.end());
        if (!distinct.count(img)) { closed = false; break; }
    }
    rep.check_true("singer-preserves-lines", closed);
    return rep;
}

// Classes are the orbits of <singer^d>: point i lies in class i mod d, at
// position i div d within its class.
inline Partition singer_partition(const SingerPlane& plane, std::uint64_t c, std::uint64_t d) {
    if (c < 2 || d < 2 || c * d != plane.v)
        throw std::invalid_argument("singer_partition: need c*d = v with c, d >= 2");
    std::vector<std::uint32_t> cls(plane.v);
    for (std::uint64_t i = 0; i < plane.v; ++i) cls[i] = static_cast<std::uint32_t>(i % d);
    return Partition(std::move(cls), c, d);
}

struct SingerDD {
    DDParams dd;
    std::uint32_t h_rank = 0, h_pair_rank = 0;
    std::uint32_t k_rank = 0, k_pair_rank = 0;
    Report report;
};

inline SingerDD singer_dd(const SingerPlane& plane, std::uint64_t c, std::uint64_t d) {
    Partition part = singer_partition(plane, c, d);
    SingerDD out;
    Report& rep = out.report;

    // Block-transitivity witness: every line yields the same DD parameters.
    out.dd = dd_from_block(plane.lines[0], part);
    bool all_agree = true;
    for (const auto& line : plane.lines)
        if (dd_from_block(line, part) != out.dd) { all_agree = false; break; }
    rep.check_true("all-lines-agree", all_agree, "every line gives the same (m, n)");
    rep.check_eq("m-formula", out.dd.m, (d - 1) / 2, "m = (d-1)/2");
    rep.check_eq("n-formula", out.dd.n, (c - 1) / 2, "n = (c-1)/2");

    // Induced groups: regular cyclic on the class and on the class set.
    GeneratorSet h = cyclic_gens(static_cast<std::uint32_t>(c));
    GeneratorSet k = cyclic_gens(static_cast<std::uint32_t>(d));
    OrbitalDecomposition h_od(h), k_od(k);
    out.h_rank = h_od.rank();
    out.h_pair_rank = h_od.pair_rank();
    out.k_rank = k_od.rank();
    out.k_pair_rank = k_od.pair_rank();
    rep.check_eq("h-rank", static_cast<std::uint64_t>(out.h_rank), 2 * out.dd.n + 1,
                 "Rank(H) = 2n+1");
    rep.check_eq("k-rank", static_cast<std::uint64_t>(out.k_rank), 2 * out.dd.m + 1,
                 "Rank(K) = 2m+1");
    rep.merge(check_rank_bounds(out.h_rank, out.h_pair_rank, out.dd.n,
                                out.k_rank, out.k_pair_rank, out.dd.m));
    if (out.dd.m == 1)
        rep.check_eq("m1-k-pair-transitive", static_cast<std::uint64_t>(out.k_pair_rank),
                     std::uint64_t{1});
    if (out.dd.n == 1)
        rep.check_eq("n1-h-pair-transitive", static_cast<std::uint64_t>(out.h_pair_rank),
                     std::uint64_t{1});

    // Maximal-rank consequences: odd order, constant subdegree (c-1)/2n.
    rep.merge(check_max_rank_conditions(h, h_od, out.dd.n));
    rep.merge(check_max_rank_conditions(k, k_od, out.dd.m));

    // Per-orbital pair counts on one line.
    std::vector<ClassPoint> block;
    for (std::uint32_t pt : plane.lines[0])
        block.push_back({static_cast<std::uint32_t>(pt % d), static_cast<std::uint32_t>(pt / d)});
    rep.merge(verify_orbital_pair_counts(block, h_od, k_od, c, out.dd.n));
    return out;
}

// The q = p^(2f) family: v factors as d*c with d = p^2f + p^f + 1 and
// c = p^2f - p^f + 1, giving m = p^f(p^f+1)/2 and n = p^f(p^f-1)/2.
struct SquareFamilyParams {
    std::uint64_t q = 0, c = 0, d = 0, m = 0, n = 0;
};

inline SquareFamilyParams square_prime_power_family(std::uint64_t p, unsigned f) {
    if (!is_prime(p)) throw std::invalid_argument("square_prime_power_family: p must be prime");
    if (f < 1) throw std::invalid_argument("square_prime_power_family: f must be >= 1");
    std::uint64_t pf = 1;
    for (unsigned i = 0; i < f; ++i) pf *= p;
    SquareFamilyParams out;
    out.q = pf * pf;
    out.d = out.q + pf + 1;
    out.c = out.q - pf + 1;
    out.m = pf * (pf + 1) / 2;
    out.n = pf * (pf - 1) / 2;
    return out;
}

}  // namespace imprim
