#include <catch2/catch_amalgamated.hpp>

#include "imprim/singer.hpp"

using namespace imprim;

TEST_CASE("Fano plane from the Singer model") {
    SingerPlane plane = build_plane(2);
    CHECK(plane.v == 7);
    REQUIRE(plane.lines.size() == 7);
    for (const auto& line : plane.lines) CHECK(line.size() == 3);
    CHECK(verify_plane(plane).all_passed());
}

TEST_CASE("PG(2,4) is a 2-(21,5,1) design") {
    SingerPlane plane = build_plane(4);
    CHECK(plane.v == 21);
    CHECK(verify_plane(plane).all_passed());
    // singer acts regularly: the +1 orbit of any point covers everything
    CHECK(plane.singer[20] == 0);
}

TEST_CASE("rejects non prime powers") {
    CHECK_THROWS_AS(build_plane(6), std::invalid_argument);
}

TEST_CASE("partition construction and errors") {
    SingerPlane plane = build_plane(4);
    Partition part = singer_partition(plane, 3, 7);
    CHECK(part.c == 3);
    CHECK(part.d == 7);
    CHECK_THROWS_AS(singer_partition(plane, 4, 5), std::invalid_argument);
    SingerPlane fano = build_plane(2);
    CHECK_THROWS_AS(singer_partition(fano, 7, 1), std::invalid_argument);
    SingerPlane plane3 = build_plane(3);
    CHECK(plane3.v == 13);
    CHECK(verify_plane(plane3).all_passed());
    CHECK_THROWS_AS(singer_partition(plane3, 13, 1), std::invalid_argument);
}

TEST_CASE("DD parameters for PG(2,4) with (c,d) = (3,7)") {
    SingerPlane plane = build_plane(4);
    SingerDD res = singer_dd(plane, 3, 7);
    CHECK(res.report.all_passed());
    CHECK(res.dd.m == 3);
    CHECK(res.dd.n == 1);
    CHECK(res.h_rank == 3);   // = 2n+1
    CHECK(res.k_rank == 7);   // = 2m+1
    CHECK(res.h_pair_rank == 1);
    CHECK(res.k_pair_rank == 3);
}

TEST_CASE("DD parameters for PG(2,4) with (c,d) = (7,3)") {
    SingerPlane plane = build_plane(4);
    SingerDD res = singer_dd(plane, 7, 3);
    CHECK(res.report.all_passed());
    CHECK(res.dd.m == 1);
    CHECK(res.dd.n == 3);
    CHECK(res.h_rank == 7);
    CHECK(res.k_rank == 3);
}

TEST_CASE("DD parameters for PG(2,9)") {
    SingerPlane plane = build_plane(9);
    CHECK(plane.v == 91);
    CHECK(verify_plane(plane).all_passed());
    SingerDD res = singer_dd(plane, 7, 13);
    CHECK(res.report.all_passed());
    CHECK(res.dd.m == 6);
    CHECK(res.dd.n == 3);
    CHECK(res.h_rank == 7);
    CHECK(res.k_rank == 13);
    SingerDD dual = singer_dd(plane, 13, 7);
    CHECK(dual.report.all_passed());
    CHECK(dual.dd.m == 3);
    CHECK(dual.dd.n == 6);
}

TEST_CASE("square prime power family") {
    SquareFamilyParams f21 = square_prime_power_family(2, 1);
    CHECK(f21.q == 4);
    CHECK(f21.d == 7);
    CHECK(f21.c == 3);
    CHECK(f21.m == 3);
    CHECK(f21.n == 1);
    SquareFamilyParams f31 = square_prime_power_family(3, 1);
    CHECK(f31.q == 9);
    CHECK(f31.d == 13);
    CHECK(f31.c == 7);
    CHECK(f31.m == 6);
    CHECK(f31.n == 3);
    SquareFamilyParams f22 = square_prime_power_family(2, 2);
    CHECK(f22.q == 16);
    CHECK(f22.d == 21);
    CHECK(f22.c == 13);
    CHECK(f22.m == 10);
    CHECK(f22.n == 6);
    CHECK_THROWS_AS(square_prime_power_family(4, 1), std::invalid_argument);
}

TEST_CASE("square family cross-checked against PG(2,16)") {
    SquareFamilyParams f = square_prime_power_family(2, 2);
    SingerPlane plane = build_plane(f.q);
    CHECK(plane.v == f.c * f.d);
    CHECK(verify_plane(plane).all_passed());
    SingerDD res = singer_dd(plane, f.c, f.d);
    CHECK(res.report.all_passed());
    CHECK(res.dd.m == f.m);
    CHECK(res.dd.n == f.n);
    CHECK(res.h_rank == 2 * f.n + 1);
    CHECK(res.k_rank == 2 * f.m + 1);
}
