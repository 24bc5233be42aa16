#pragma once

// Search and certification of useful pairs [n, c]:
//   n >= 2, c a prime power with c = 1 (mod 2n), c + n = binom(k,2), k >= 2n,
// plus near-misses (all conditions except k >= 2n, possible only for
// n in {6, 10, 15}) and the factorisation identities that rule those n out.
//
// The search iterates over k, not c: c = binom(k,2) - n is then determined
// and triangularity is free, so a scan up to c_max costs O(sqrt(c_max))
// candidates per n.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "imprim/arith.hpp"
#include "imprim/report.hpp"

namespace imprim {

struct UsefulPair {
    std::uint64_t n = 0;
    PrimePower c;
    std::uint64_t k = 0;
    std::uint64_t d = 0;

    friend bool operator==(const UsefulPair&, const UsefulPair&) = default;
};

struct NearMiss {
    std::uint64_t n = 0;
    PrimePower c;
    std::uint64_t k = 0;
    std::uint64_t d = 0;

    friend bool operator==(const NearMiss&, const NearMiss&) = default;
};

using PairClassification = std::variant<std::monostate, UsefulPair, NearMiss>;

// Re-checks every invariant of a certified pair, independently of how it was
// found. The k-bounds 2n+2 <= k <= n+d are a proved consequence of the other
// conditions; a violation is a logic error, not a classification result.
inline void revalidate(const UsefulPair& up) {
    const std::uint64_t c = up.c.value;
    if (up.n < 2) throw std::logic_error("UsefulPair: n < 2");
    if (!is_prime_power(c) || *is_prime_power(c) != up.c)
        throw std::logic_error("UsefulPair: c is not the stated prime power");
    if (c % (2 * up.n) != 1) throw std::logic_error("UsefulPair: c != 1 (mod 2n)");
    if (up.k * (up.k - 1) / 2 != c + up.n) throw std::logic_error("UsefulPair: c + n not binom(k,2)");
    if (up.k < 2 * up.n) throw std::logic_error("UsefulPair: k < 2n");
    if ((c - 1) % up.n != 0 || up.d != 1 + (c - 1) / up.n)
        throw std::logic_error("UsefulPair: d != 1 + (c-1)/n");
    if (up.k < 2 * up.n + 2 || up.k > up.n + up.d)
        throw std::logic_error("UsefulPair: k-bounds 2n+2 <= k <= n+d violated");
    if ((up.d - 1) % 2 != 0) throw std::logic_error("UsefulPair: d-1 must be even");
}

inline PairClassification classify_pair(std::uint64_t n, std::uint64_t c) {
    if (n < 2) throw std::invalid_argument("classify_pair: n must be >= 2");
    if (c < 2) throw std::invalid_argument("classify_pair: c must be >= 2");
    if (c % (2 * n) != 1) return std::monostate{};
    auto pp = is_prime_power(c);
    if (!pp) return std::monostate{};
    auto k = triangular_inverse(c + n);
    if (!k) return std::monostate{};
    const std::uint64_t d = 1 + (c - 1) / n;
    if (*k >= 2 * n) {
        UsefulPair up{n, *pp, *k, d};
        revalidate(up);
        return up;
    }
    return NearMiss{n, *pp, *k, d};
}

inline std::optional<UsefulPair> certify(std::uint64_t n, std::uint64_t c) {
    auto cls = classify_pair(n, c);
    if (auto* up = std::get_if<UsefulPair>(&cls)) return *up;
    return std::nullopt;
}

// All useful pairs with 2 <= n <= n_max and c <= c_max, sorted by (n, c).
inline std::vector<UsefulPair> search(std::uint64_t n_max, std::uint64_t c_max) {
    if (n_max < 2) throw std::invalid_argument("search: n_max must be >= 2");
    std::vector<UsefulPair> out;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        for (std::uint64_t k = 2 * n;; ++k) {
            const std::uint64_t c = binom2(k) - n;
            if (c > c_max) break;
            if (c < 2) continue;
            auto cls = classify_pair(n, c);
            if (auto* up = std::get_if<UsefulPair>(&cls)) out.push_back(*up);
        }
    }
    return out;  // already sorted: n ascending, c increasing with k
}

// Least c <= c_cap making [n, c] useful. The cap is mandatory: whether a
// useful pair exists at all for a given n is an open number-theoretic
// question, so an unbounded scan might not terminate.
inline std::optional<UsefulPair> smallest_c(std::uint64_t n, std::uint64_t c_cap) {
    if (n < 2) throw std::invalid_argument("smallest_c: n must be >= 2");
    for (std::uint64_t k = 2 * n;; ++k) {
        const std::uint64_t c = binom2(k) - n;
        if (c > c_cap) return std::nullopt;
        if (c < 2) continue;
        auto cls = classify_pair(n, c);
        if (auto* up = std::get_if<UsefulPair>(&cls)) return *up;
    }
}

inline std::vector<NearMiss> near_misses(std::uint64_t n, std::uint64_t c_cap) {
    if (n < 2) throw std::invalid_argument("near_misses: n must be >= 2");
    std::vector<NearMiss> out;
    for (std::uint64_t k = 2; k < 2 * n; ++k) {
        if (binom2(k) < n + 2) continue;
        const std::uint64_t c = binom2(k) - n;
        if (c > c_cap) continue;
        auto cls = classify_pair(n, c);
        if (auto* nm = std::get_if<NearMiss>(&cls)) out.push_back(*nm);
    }
    return out;
}

// For n in {6, 10, 15} and k = 4nb + r, binom(k,2) - n factorises as a
// product of two linear polynomials in b; these identities drive the proof
// that no useful pair exists for those n.
struct FactorRow {
    std::uint64_t n, r;        // k = 4nb + r
    std::uint64_t a1, a0;      // first factor  a1*b + a0
    std::uint64_t b1, b0;      // second factor b1*b + b0
};

inline const std::vector<FactorRow>& factor_rows() {
    static const std::vector<FactorRow> rows = {
        {6, 11, 12, 7, 24, 7},   {6, 14, 12, 5, 24, 17},
        {10, 14, 20, 9, 40, 9},  {10, 19, 20, 7, 40, 23},
        {10, 22, 20, 13, 40, 17}, {10, 27, 20, 11, 40, 31},
        {15, 17, 30, 11, 60, 11}, {15, 29, 30, 17, 60, 23},
        {15, 32, 30, 13, 60, 37}, {15, 44, 30, 19, 60, 49},
    };
    return rows;
}

inline Report check_factor_identities(std::uint64_t n, std::uint64_t b_max) {
    if (n != 6 && n != 10 && n != 15)
        throw std::invalid_argument("check_factor_identities: n must be 6, 10 or 15");
    Report rep;
    for (const FactorRow& row : factor_rows()) {
        if (row.n != n) continue;
        bool ok = true;
        std::uint64_t bad_b = 0;
        for (std::uint64_t b = 0; b <= b_max; ++b) {
            const std::uint64_t k = 4 * n * b + row.r;
            const std::uint64_t lhs = binom2(k) - n;
            const std::uint64_t rhs = (row.a1 * b + row.a0) * (row.b1 * b + row.b0);
            if (lhs != rhs) { ok = false; bad_b = b; break; }
        }
        rep.check_true("factor-n" + std::to_string(n) + "-r" + std::to_string(row.r), ok,
                       ok ? "all b in [0," + std::to_string(b_max) + "]"
                          : "fails at b = " + std::to_string(bad_b));
    }
    return rep;
}

inline std::string to_csv(const std::vector<UsefulPair>& rows) {
    std::string out = "n,c,k,d\n";
    for (const UsefulPair& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.c.value) + "," +
               std::to_string(r.k) + "," + std::to_string(r.d) + "\n";
    return out;
}

}  // namespace imprim
