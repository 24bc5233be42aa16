#pragma once

// Exact integer utilities: prime powers, triangular numbers, binomials and
// arbitrary-precision counting arithmetic. Everything here is exact; any
// operation that could silently lose information (division, narrowing)
// checks and throws instead.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace imprim {

using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& v) { return v.str(); }

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Largest r with r^a <= x, by bracketed binary search.
inline std::uint64_t integer_root(std::uint64_t x, unsigned a) {
    if (a == 1 || x < 2) return x;
    auto pow_capped = [](std::uint64_t b, unsigned e, std::uint64_t cap) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (b != 0 && r > cap / b) return cap + 1;
            r *= b;
        }
        return r;
    };
    std::uint64_t lo = 1, hi = 2;
    while (pow_capped(hi, a, x) <= x) { lo = hi; hi *= 2; }
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_capped(mid, a, x) <= x) lo = mid; else hi = mid;
    }
    return lo;
}

struct PrimePower {
    std::uint64_t p = 0;   // prime base
    unsigned a = 0;        // exponent >= 1
    std::uint64_t value = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Returns the unique (p, a) with p prime and p^a = c, if c is a prime power.
// Tries exponents from floor(log2 c) down to 1; the first prime root wins.
inline std::optional<PrimePower> is_prime_power(std::uint64_t c) {
    if (c < 2) throw std::invalid_argument("is_prime_power: input must be >= 2");
    unsigned max_a = 0;
    for (std::uint64_t t = c; t > 1; t >>= 1) ++max_a;
    for (unsigned a = max_a; a >= 1; --a) {
        std::uint64_t r = integer_root(c, a);
        std::uint64_t v = 1;
        bool exact = true;
        for (unsigned i = 0; i < a && exact; ++i) {
            if (r != 0 && v > c / r) exact = false; else v *= r;
        }
        if (exact && v == c && is_prime(r)) return PrimePower{r, a, c};
    }
    return std::nullopt;
}

// k such that k(k-1)/2 = t, if t is triangular.
inline std::optional<std::uint64_t> triangular_inverse(std::uint64_t t) {
    if (t < 1) return std::nullopt;
    std::uint64_t s = integer_root(8 * t + 1, 2);
    std::uint64_t k = (1 + s) / 2;
    if (k >= 2 && k * (k - 1) / 2 == t) return k;
    return std::nullopt;
}

inline std::uint64_t binom2(std::uint64_t k) { return k * (k - 1) / 2; }

inline BigCount factorial(std::uint64_t n) {
    BigCount r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount big_pow(const BigCount& base, std::uint64_t e) {
    BigCount r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigCount big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // always exact: r is binom(n-k+i, i) at this point
    }
    return r;
}

// n (n-1) ... (n-k+1)
inline BigCount falling_factorial(std::uint64_t n, std::uint64_t k) {
    BigCount r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
    return r;
}

struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* what = "exact_div") {
    if (den == 0 || num % den != 0)
        throw InexactDivision(std::string(what) + ": " + num.str() + " not divisible by " + den.str());
    return num / den;
}

}  // namespace imprim
