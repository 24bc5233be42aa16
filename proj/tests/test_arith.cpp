#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "imprim/arith.hpp"

using namespace imprim;

TEST_CASE("prime power recognition") {
    CHECK(is_prime_power(13) == PrimePower{13, 1, 13});
    CHECK(is_prime_power(25) == PrimePower{5, 2, 25});
    CHECK_FALSE(is_prime_power(21).has_value());
    CHECK(is_prime_power(2) == PrimePower{2, 1, 2});
    CHECK(is_prime_power(64) == PrimePower{2, 6, 64});
    CHECK(is_prime_power(169) == PrimePower{13, 2, 169});
    CHECK(is_prime_power(841) == PrimePower{29, 2, 841});
    CHECK_FALSE(is_prime_power(1000000).has_value());
    CHECK_THROWS_AS(is_prime_power(1), std::invalid_argument);
    CHECK_THROWS_AS(is_prime_power(0), std::invalid_argument);
}

TEST_CASE("prime power vs trial division on random inputs") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<std::uint64_t> dist(2, 1000000);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t c = dist(rng);
        std::uint64_t x = c;
        int distinct = 0;
        std::uint64_t first_p = 0;
        unsigned exponent = 0;
        for (std::uint64_t p = 2; p * p <= x; ++p) {
            if (x % p == 0) {
                ++distinct;
                first_p = p;
                exponent = 0;
                while (x % p == 0) { x /= p; ++exponent; }
            }
        }
        if (x > 1) {
            ++distinct;
            if (distinct == 1) { first_p = x; exponent = 1; }
        }
        auto pp = is_prime_power(c);
        if (distinct == 1) {
            REQUIRE(pp.has_value());
            CHECK(pp->p == first_p);
            CHECK(pp->value == c);
        } else {
            CHECK_FALSE(pp.has_value());
        }
    }
}

TEST_CASE("triangular inverse") {
    CHECK(triangular_inverse(15) == 6);
    CHECK(triangular_inverse(28) == 8);
    CHECK_FALSE(triangular_inverse(16).has_value());
    CHECK(triangular_inverse(1) == 2);
    CHECK_FALSE(triangular_inverse(2).has_value());
}

TEST_CASE("triangular inverse inverts binom2 up to 1e5") {
    for (std::uint64_t k = 2; k <= 100000; ++k) {
        auto inv = triangular_inverse(binom2(k));
        REQUIRE(inv.has_value());
        REQUIRE(*inv == k);
    }
}

TEST_CASE("binomials and factorials") {
    CHECK(binom2(6) == 15);
    CHECK(binom2(2) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(factorial(0) == 1);
    CHECK(big_binomial(7, 3) == 35);
    CHECK(big_binomial(5, 0) == 1);
    CHECK(big_binomial(5, 6) == 0);
    CHECK(falling_factorial(7, 2) == 42);
    CHECK(big_pow(BigCount(13), 4) == 28561);
    CHECK(factorial(30) == BigCount("265252859812191058636308480000000"));
}

TEST_CASE("exact division") {
    CHECK(exact_div(BigCount(91) * 90, 15) == 546);
    CHECK_THROWS_AS(exact_div(BigCount(7), 2), InexactDivision);
    CHECK_THROWS_AS(exact_div(BigCount(7), 0), InexactDivision);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(1033));
    CHECK(is_prime(2069));
    CHECK(is_prime(25409));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(841));
    CHECK_FALSE(is_prime(1000003ull * 1000033ull));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}
