#pragma once

// Finite field GF(p^a) with a distinguished primitive element and dense
// log/exp tables.
//
// Elements are integer indices in [0, p^a): the index encodes the coefficient
// vector of a polynomial over GF(p) in base p, constant term least
// significant. Construction is fully deterministic: the reduction polynomial
// (for a > 1) is the least monic irreducible of degree a in this encoding,
// and zeta is the least element index of multiplicative order p^a - 1.

#include <cstdint>
#include <vector>

#include "imprim/arith.hpp"

namespace imprim {

class Field {
public:
    Field(std::uint64_t p, unsigned a) : p_(p), a_(a) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
        if (a < 1) throw std::invalid_argument("Field: exponent must be >= 1");
        if (a > 15) throw std::invalid_argument("Field: exponent too large");
        c_ = 1;
        for (unsigned i = 0; i < a; ++i) {
            if (c_ > (1ull << 20) / p) throw std::invalid_argument("Field: order too large");
            c_ *= p;
        }
        if (a_ > 1) find_reduction_poly();
        find_primitive();
        build_tables();
    }

    std::uint64_t p() const { return p_; }
    unsigned a() const { return a_; }
    std::uint64_t order() const { return c_; }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    std::uint64_t zeta() const { return zeta_; }

    // Reduction polynomial coefficients, low to high degree (size a+1, monic).
    // Empty for prime fields.
    const std::vector<std::uint64_t>& reduction_poly() const { return poly_; }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        if (a_ == 1) {
            std::uint64_t s = x + y;
            return s >= c_ ? s - c_ : s;
        }
        std::uint64_t r = 0, m = 1;
        for (unsigned i = 0; i < a_; ++i) {
            std::uint64_t dx = x % p_, dy = y % p_;
            std::uint64_t ds = dx + dy;
            if (ds >= p_) ds -= p_;
            r += ds * m;
            x /= p_; y /= p_; m *= p_;
        }
        return r;
    }

    std::uint64_t neg(std::uint64_t x) const {
        if (a_ == 1) return x == 0 ? 0 : c_ - x;
        std::uint64_t r = 0, m = 1;
        for (unsigned i = 0; i < a_; ++i) {
            std::uint64_t d = x % p_;
            r += (d == 0 ? 0 : p_ - d) * m;
            x /= p_; m *= p_;
        }
        return r;
    }

    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        if (a_ == 1) return x * y % c_;
        return poly_mul(x, y);
    }

    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t x) const {
        if (x == 0) throw std::invalid_argument("Field::inv: zero is not invertible");
        return exp_of((c_ - 1 - dlog(x)) % (c_ - 1));
    }

    // j such that zeta^j = x, for x != 0.
    std::uint64_t dlog(std::uint64_t x) const {
        if (x == 0) throw std::invalid_argument("Field::dlog: undefined at zero");
        return dlog_[x];
    }

    std::uint64_t exp_of(std::uint64_t j) const { return exp_[j % (c_ - 1)]; }

private:
    void find_reduction_poly() {
        // Candidate m encodes x^a + sum coeff_i x^i with coeff digits of m.
        for (std::uint64_t m = 0;; ++m) {
            if (m >= c_) throw std::logic_error("Field: no irreducible polynomial found");
            poly_.assign(a_ + 1, 0);
            std::uint64_t t = m;
            for (unsigned i = 0; i < a_; ++i) { poly_[i] = t % p_; t /= p_; }
            poly_[a_] = 1;
            if (is_irreducible()) return;
        }
    }

    // Trial division by every monic polynomial of degree 1..a/2.
    bool is_irreducible() const {
        if (poly_[0] == 0) return false;  // divisible by x
        for (unsigned deg = 1; 2 * deg <= a_; ++deg) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < deg; ++i) count *= p_;
            for (std::uint64_t m = 0; m < count; ++m) {
                std::vector<std::uint64_t> div(deg + 1, 0);
                std::uint64_t t = m;
                for (unsigned i = 0; i < deg; ++i) { div[i] = t % p_; t /= p_; }
                div[deg] = 1;
                if (divides(div)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<std::uint64_t>& div) const {
        std::vector<std::uint64_t> rem(poly_);
        const int dd = static_cast<int>(div.size()) - 1;
        for (int deg = static_cast<int>(a_); deg >= dd; --deg) {
            std::uint64_t coef = rem[deg];
            if (coef == 0) continue;
            rem[deg] = 0;
            for (int i = 0; i < dd; ++i) {
                std::uint64_t s = coef * div[i] % p_;
                std::uint64_t& r = rem[deg - dd + i];
                r = (r + p_ - s) % p_;
            }
        }
        for (int i = 0; i < dd; ++i)
            if (rem[i] != 0) return false;
        return true;
    }

    std::uint64_t poly_mul(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t dx[16], dy[16], prod[31] = {0};
        for (unsigned i = 0; i < a_; ++i) { dx[i] = x % p_; x /= p_; }
        for (unsigned i = 0; i < a_; ++i) { dy[i] = y % p_; y /= p_; }
        for (unsigned i = 0; i < a_; ++i) {
            if (dx[i] == 0) continue;
            for (unsigned j = 0; j < a_; ++j)
                prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
        }
        for (unsigned deg = 2 * a_ - 2; deg >= a_; --deg) {
            std::uint64_t coef = prod[deg];
            if (coef) {
                prod[deg] = 0;
                for (unsigned i = 0; i < a_; ++i) {
                    std::uint64_t s = coef * poly_[i] % p_;
                    std::uint64_t& r = prod[deg - a_ + i];
                    r = (r + p_ - s) % p_;
                }
            }
        }
        std::uint64_t r = 0, m = 1;
        for (unsigned i = 0; i < a_; ++i) { r += prod[i] * m; m *= p_; }
        return r;
    }

    std::uint64_t mul_order(std::uint64_t x) const {
        std::uint64_t o = 1, v = x;
        while (v != 1) {
            v = mul(v, x);
            ++o;
            if (o > c_) throw std::logic_error("Field: order computation diverged");
        }
        return o;
    }

    void find_primitive() {
        if (c_ == 2) { zeta_ = 1; return; }
        for (std::uint64_t x = 2; x < c_; ++x) {
            if (mul_order(x) == c_ - 1) { zeta_ = x; return; }
        }
        throw std::logic_error("Field: no primitive element found");
    }

    void build_tables() {
        exp_.assign(c_ - 1, 0);
        dlog_.assign(c_, 0);
        std::uint64_t v = 1;
        for (std::uint64_t j = 0; j < c_ - 1; ++j) {
            exp_[j] = v;
            dlog_[v] = j;
            v = mul(v, zeta_);
        }
        if (v != 1) throw std::logic_error("Field: zeta order mismatch");
    }

    std::uint64_t p_;
    unsigned a_;
    std::uint64_t c_;
    std::uint64_t zeta_ = 1;
    std::vector<std::uint64_t> poly_;   // low-to-high, monic; empty if a == 1
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> dlog_;
};

inline Field field_new(std::uint64_t p, unsigned a) { return Field(p, a); }

}  // namespace imprim
