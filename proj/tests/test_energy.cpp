#include <doctest.h>

#include <cmath>
#include <numbers>

#include "l1tv/energy.hpp"
#include "l1tv/errors.hpp"
#include "test_util.hpp"

using namespace l1tv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("energy parameters") {
    const EnergyParams p = EnergyParams::parse("0.1");
    CHECK(p.lambda == Rational{1, 10});
    CHECK(p.critical_radius() == doctest::Approx(20.0));
    CHECK(EnergyParams::parse("0.1", 3).critical_radius() == doctest::Approx(30.0));
    CHECK_THROWS_AS(EnergyParams::parse("0"), DomainError);
    CHECK_THROWS_AS(EnergyParams::parse("-1"), DomainError);
    CHECK_THROWS(EnergyParams(Rational{1, 1}, 0));
}

TEST_CASE("energy examples") {
    const GridGeom g(64, 64);
    const EnergyParams p = EnergyParams::parse("0.1");
    const Stencil st = Stencil::preset("n16");
    const BinaryMask disc = rasterize_disc({32, 32, 20}, g);

    const EnergyReport empty = energy(BinaryMask(g), disc, p, st);
    CHECK(empty.perimeter_term == 0);
    CHECK(empty.fidelity_term == doctest::Approx(0.1 * static_cast<double>(disc.count())));
    CHECK(std::abs(empty.fidelity_term - 0.1 * kPi * 400) <= 0.01 * 0.1 * kPi * 400);

    const EnergyReport same = energy(disc, disc, p, st);
    CHECK(same.fidelity_term == 0);
    CHECK(same.total == perimeter(disc, st));

    const GridGeom big(128, 128);
    const BinaryMask d30 = rasterize_disc({64, 64, 30}, big);
    CHECK(std::abs(energy(d30, d30, p, st).total - 2 * kPi * 30) <= 0.02 * 2 * kPi * 30);
}

TEST_CASE("exact units agree with the floating-point definition") {
    Rng rng(2);
    for (const char* lam : {"0.1", "1/3", "2.5", "7"}) {
        const EnergyParams p = EnergyParams::parse(lam);
        for (const Rational h : {Rational{1, 1}, Rational{1, 2}, Rational{3, 4}}) {
            const GridGeom g(11, 9, h);
            for (const char* name : {"n4", "n8", "n16"}) {
                const Stencil st = Stencil::preset(name);
                const BinaryMask s = testutil::random_mask(g, rng, 0.4), o = testutil::random_mask(g, rng, 0.6);
                for (Border b : {Border::background, Border::foreground, Border::interior}) {
                    const EnergyReport e = energy(s, o, p, st, b);
                    CHECK(e.total_units == testutil::naive_energy_units(s, o, p, st, b));
                    CHECK(e.total == doctest::Approx(testutil::naive_energy_value(s, o, p, st, b)).epsilon(1e-12));
                    CHECK(e.total_units == e.perimeter_units + e.fidelity_units);
                }
            }
        }
    }
}

TEST_CASE("energy_change and delta_energy_ball_union match full recomputation") {
    Rng rng(8);
    const EnergyParams p = EnergyParams::parse("0.1");
    const GridGeom g(80, 70);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 15; ++t) {
            const BinaryMask sigma = testutil::random_shapes(g, rng, 4), omega = testutil::random_shapes(g, rng, 4);
            const DiscSpec ball{rng.uniform(-5, 85), rng.uniform(-5, 75), rng.uniform(0.5, 25)};
            const EnergyDelta d = delta_energy_ball_union(sigma, ball, omega, p, st);
            const BinaryMask after = sigma | rasterize_disc(ball, g);
            CHECK(d.units == energy(after, omega, p, st).total_units - energy(sigma, omega, p, st).total_units);

            BinaryMask removed = sigma;
            paint_disc(removed, ball, false);
            for (Border b : {Border::background, Border::foreground}) {
                const EnergyDelta r = energy_change(sigma, removed, omega, p, st, b, disc_bounding_box(ball, g));
                CHECK(r.units == energy(removed, omega, p, st, b).total_units - energy(sigma, omega, p, st, b).total_units);
            }

            const BallUnionTerms terms = decompose_ball_union(sigma, rasterize_disc(ball, g), omega, p, st);
            CHECK(terms.total == d.units);
            CHECK(terms.ball_margin() + terms.intersection_margin() - terms.interaction + terms.outside_omega == terms.total);
            CHECK(terms.interaction >= 0);
            CHECK(terms.outside_omega >= 0);
        }
    }
}

TEST_CASE("ball-union examples") {
    const GridGeom g(128, 128);
    const EnergyParams p = EnergyParams::parse("0.1");
    const Stencil st = Stencil::preset("n16");
    const BinaryMask omega = rasterize_disc({64, 64, 40}, g);

    const BinaryMask sigma = rasterize_disc({64, 64, 30}, g);
    CHECK(delta_energy_ball_union(sigma, {64, 64, 10}, omega, p, st).units == 0);

    const BinaryMask empty(g);
    CHECK(delta_energy_ball_union(empty, {64, 64, 25}, omega, p, st).value < 0);
    CHECK(delta_energy_ball_union(empty, {64, 64, 15}, omega, p, st).value > 0);
}

TEST_CASE("continuum disc margin and ball volumes") {
    const EnergyParams p = EnergyParams::parse("0.1");
    CHECK(continuum_disc_energy_margin(20, p) == doctest::Approx(0).epsilon(1e-12).scale(100));
    CHECK(continuum_disc_energy_margin(10, p) == doctest::Approx(2 * kPi * 10 - 0.1 * kPi * 100).epsilon(1e-12));
    CHECK(continuum_disc_energy_margin(25, p) < 0);
    CHECK(std::abs(continuum_disc_energy_margin(30, EnergyParams::parse("0.1", 3))) < 1e-9);
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(kPi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4 * kPi / 3));
}

TEST_CASE("energy scale") {
    const GridGeom g(4, 4, Rational{1, 2});
    const EnergyScale s(g, EnergyParams::parse("1/3"));
    // unit = 1 / (D q b^2) with q = 3, b = 2
    CHECK(s.unit() == doctest::Approx(1.0 / (kWeightDenominator * 3.0 * 4.0)));
    CHECK(s.to_energy(s.cell_factor()) == doctest::Approx(1.0 / 3 * 0.25));
    CHECK(s.to_energy(s.edge_factor() * kWeightDenominator) == doctest::Approx(0.5));
    CHECK_THROWS(EnergyScale(GridGeom(4000, 4000, Rational{1, 1000003}), EnergyParams(Rational{1, 999999937})));
}
