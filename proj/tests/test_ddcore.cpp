#include <catch2/catch_amalgamated.hpp>

#include "imprim/construction.hpp"
#include "imprim/ddcore.hpp"

using namespace imprim;

namespace {

Partition uniform_partition(std::uint64_t c, std::uint64_t d) {
    std::vector<std::uint32_t> cls(c * d);
    for (std::uint64_t i = 0; i < c * d; ++i) cls[i] = static_cast<std::uint32_t>(i / c);
    return Partition(std::move(cls), c, d);
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({0, 0, 1}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 0, 0, 0}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 1, 0, 1}, 2, 1), std::invalid_argument);
    CHECK_NOTHROW(Partition({0, 1, 0, 1}, 2, 2));
}

TEST_CASE("dd_from_block on the wreath design block") {
    auto up = certify(2, 13);
    REQUIRE(up.has_value());
    WreathDesign des = build_design(*up);
    Partition part = des.partition();
    std::vector<std::uint32_t> ids;
    for (const auto& pt : des.block) ids.push_back(des.point_index(pt));
    DDParams dd = dd_from_block(ids, part);
    CHECK(dd.m == 1);
    CHECK(dd.n == 2);
    CHECK(dd.inner_count == 2);
    CHECK(dd.outer_count == 13);
}

TEST_CASE("dd_from_block rejects inconsistent data") {
    Partition part = uniform_partition(3, 4);
    // a block inside one class has no outer pairs
    CHECK_THROWS_AS(dd_from_block({0, 1}, part), NotDdConsistent);
    // spanning block with no inner pairs
    CHECK_THROWS_AS(dd_from_block({0, 3, 6}, part), NotDdConsistent);
    try {
        dd_from_block({0, 1}, part);
    } catch (const NotDdConsistent& e) {
        CHECK(e.inner == 1);
        CHECK(e.outer == 0);
    }
}

TEST_CASE("counting identities") {
    SECTION("forced arithmetic for (13,7,6,1,2)") {
        auto ci = check_counting_identities(13, 7, 6, 1, 2, 197730);
        CHECK(ci.report.all_passed());
        CHECK(ci.b == 53980290);
    }
    SECTION("scale consistency with the exact lambda") {
        auto ci = check_counting_identities(13, 7, 6, 1, 2, 395460);
        CHECK(ci.report.all_passed());
        CHECK(ci.b == 107960580);
    }
    SECTION("projective plane factorization (3,7,5,3,1)") {
        auto ci = check_counting_identities(3, 7, 5, 3, 1, 1);
        CHECK(ci.report.all_passed());
        CHECK(ci.b == 21);
    }
    SECTION("failure is reported with witnesses") {
        auto ci = check_counting_identities(13, 7, 6, 1, 3, 197730);
        CHECK_FALSE(ci.report.all_passed());
    }
}

TEST_CASE("rank bounds") {
    CHECK(check_rank_bounds(3, 2, 2, 2, 1, 1).all_passed());
    CHECK(check_rank_bounds(2, 1, 1, 2, 1, 1).all_passed());
    CHECK(check_rank_bounds(7, 3, 3, 7, 3, 3).all_passed());
    // PairRank above the DD parameter must fail
    CHECK_FALSE(check_rank_bounds(3, 2, 1, 2, 1, 1).all_passed());
    // Rank too large for the pair rank must fail
    CHECK_FALSE(check_rank_bounds(6, 2, 2, 2, 1, 1).all_passed());
}

TEST_CASE("orbital pair counts on the (2,13) design") {
    auto up = certify(2, 13);
    REQUIRE(up.has_value());
    WreathDesign des = build_design(*up);
    OrbitalDecomposition h_od(des.h_gens);
    OrbitalDecomposition k_od(symmetric_gens(7));
    std::vector<ClassPoint> block;
    for (const auto& pt : des.block)
        block.push_back({pt.cls, static_cast<std::uint32_t>(pt.elem)});
    Report rep = verify_orbital_pair_counts(block, h_od, k_od, 13, 2);
    CHECK(rep.all_passed());
    // one inner pair per H-orbital class, 13 outer pairs in the single K class
    bool saw_inner = false, saw_outer = false;
    for (const Check& c : rep.checks) {
        if (c.id == "h-orbital-0-count") { CHECK(c.lhs == "1"); saw_inner = true; }
        if (c.id == "k-orbital-0-count") { CHECK(c.lhs == "13"); saw_outer = true; }
    }
    CHECK(saw_inner);
    CHECK(saw_outer);
    // a corrupted block must fail the counts
    block[1].pos = 5;
    Report bad = verify_orbital_pair_counts(block, h_od, k_od, 13, 2);
    CHECK_FALSE(bad.all_passed());
}

TEST_CASE("max-rank conditions for regular cyclic groups") {
    {
        GeneratorSet g = cyclic_gens(3);
        OrbitalDecomposition od(g);
        CHECK(check_max_rank_conditions(g, od, 1).all_passed());
    }
    {
        GeneratorSet g = cyclic_gens(7);
        OrbitalDecomposition od(g);
        CHECK(check_max_rank_conditions(g, od, 3).all_passed());
    }
    {
        GeneratorSet g = cyclic_gens(13);
        OrbitalDecomposition od(g);
        CHECK(check_max_rank_conditions(g, od, 6).all_passed());
    }
    {
        // order cap exceeded: parity skipped but nothing fails
        GeneratorSet g = cyclic_gens(9);
        OrbitalDecomposition od(g);
        Report rep = check_max_rank_conditions(g, od, 4, 5);
        CHECK(rep.all_passed());
        bool skipped = false;
        for (const Check& c : rep.checks)
            if (c.status == Check::Status::Skip) skipped = true;
        CHECK(skipped);
    }
}

TEST_CASE("design parameters from (v, k, lambda)") {
    DesignParams dp = design_params(91, 6, 197730);
    CHECK(dp.r == 3559140);
    CHECK(dp.b == 53980290);
    DesignParams plane = design_params(21, 5, 1);
    CHECK(plane.r == 5);
    CHECK(plane.b == 21);
    DesignParams fano = design_params(7, 3, 1);
    CHECK(fano.r == 3);
    CHECK(fano.b == 7);
    CHECK_THROWS_AS(design_params(10, 4, 1), std::invalid_argument);
}
