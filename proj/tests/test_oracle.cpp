#include <doctest.h>

#include <algorithm>

#include "l1tv/errors.hpp"
#include "l1tv/oracle.hpp"
#include "test_util.hpp"

using namespace l1tv;

TEST_CASE("mask codes round-trip") {
    const GridGeom g(4, 5);
    for (std::uint32_t c : {0u, 1u, 0x5a5a5u, 0xfffffu}) CHECK(mask_code(mask_from_code(g, c)) == c);
    CHECK(mask_from_code(g, 2u).get(1, 0));
    CHECK_THROWS_AS(mask_code(BinaryMask(GridGeom(6, 6))), SizeLimitError);
}

TEST_CASE("brute force examples") {
    const Stencil n4 = Stencil::preset("n4");
    const GridGeom g(4, 4);
    const OracleResult e = brute_force_minimize(BinaryMask(g), EnergyParams::parse("2"), n4);
    CHECK(e.min_energy_units == 0);
    REQUIRE(e.minimizers.size() == 1);
    CHECK(e.minimizers[0].none());
    CHECK(e.enumerated == 65536);

    BinaryMask one(GridGeom(1, 1));
    one.set(0, 0);
    CHECK(brute_force_minimize(one, EnergyParams::parse("3"), n4).minimizers.at(0).none());

    BinaryMask block(g);
    for (int y = 1; y <= 2; ++y)
        for (int x = 1; x <= 2; ++x) block.set(x, y);
    const OracleResult b = brute_force_minimize(block, EnergyParams::parse("3"), n4);
    REQUIRE(b.minimizers.size() == 1);
    CHECK(b.minimizers[0] == block);
    CHECK(b.min_energy == doctest::Approx(8.0));
    CHECK_THROWS_AS(brute_force_minimize(BinaryMask(GridGeom(5, 5)), EnergyParams::parse("1"), n4), SizeLimitError);
}

TEST_CASE("Gray-code and table enumeration match a plain loop") {
    Rng rng(13);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 8; ++t) {
            const GridGeom g(3, t % 2 ? 3 : 4, t % 3 == 0 ? Rational{1, 2} : Rational{1, 1});
            const BinaryMask omega = testutil::random_mask(g, rng, 0.5);
            const EnergyParams p = EnergyParams::parse(t % 2 ? "0.75" : "2");
            for (Border b : {Border::background, Border::foreground, Border::interior}) {
                const auto ref = testutil::naive_brute_force(omega, p, st, b);
                const OracleResult gray = brute_force_minimize(omega, p, st, b);
                CHECK(gray.min_energy_units == ref.units);
                REQUIRE(gray.minimizers.size() == ref.argmins.size());
                for (std::size_t i = 0; i < ref.argmins.size(); ++i)
                    CHECK(mask_code(gray.minimizers[i]) == ref.argmins[i]);
                const PerimeterTable table(g, st, b);
                const OracleResult tab = brute_force_minimize(omega, p, table);
                CHECK(tab.min_energy_units == ref.units);
                CHECK(tab.minimizers.size() == ref.argmins.size());
            }
        }
    }
}

TEST_CASE("perimeter table") {
    const GridGeom g(3, 4);
    const Stencil st = Stencil::preset("n8");
    const PerimeterTable t(g, st);
    REQUIRE(t.size() == 4096);
    for (std::uint32_t c = 0; c < 4096; ++c) CHECK(t[c] == testutil::naive_perimeter_units(mask_from_code(g, c), st));
}

TEST_CASE("batched minimum over every omega") {
    const GridGeom g(3, 3);
    const Stencil st = Stencil::preset("n8");
    const PerimeterTable table(g, st);
    for (const char* lam : {"0.5", "1", "3"}) {
        const EnergyParams p = EnergyParams::parse(lam);
        const auto all = exhaustive_min_energy_all(table, p);
        REQUIRE(all.size() == 512);
        for (std::uint32_t c = 0; c < 512; ++c)
            CHECK(all[c] == testutil::naive_brute_force(mask_from_code(g, c), p, st).units);
    }
}

TEST_CASE("solver matches the oracle on small grids") {
    Rng rng(19);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 25; ++t) {
            const GridGeom g(4, 4 + t % 2);
            const BinaryMask omega = testutil::random_mask(g, rng, 0.5);
            const EnergyParams p = EnergyParams::parse(t % 3 == 0 ? "1" : (t % 3 == 1 ? "0.5" : "3"));
            const OptimalityMatch m = verify_optimality_small(omega, p, st);
            CHECK(m.energies_equal);
            CHECK(m.smallest_is_listed);
            CHECK(m.smallest_is_intersection);
            CHECK(m.largest_is_union);
        }
    }
}

TEST_CASE("every 4x4 omega at lambda 0.5 with N4") {
    const GridGeom g(4, 4);
    const Stencil st = Stencil::preset("n4");
    const EnergyParams p = EnergyParams::parse("0.5");
    const auto all = exhaustive_min_energy_all(PerimeterTable(g, st), p);
    int mismatches = 0;
    for (std::uint32_t c = 0; c < 65536; ++c)
        mismatches += minimize(mask_from_code(g, c), p, st).report.total_units != all[c];
    CHECK(mismatches == 0);
}
