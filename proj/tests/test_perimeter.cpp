#include <doctest.h>

#include <cmath>
#include <numbers>

#include "l1tv/errors.hpp"
#include "l1tv/perimeter.hpp"
#include "test_util.hpp"

using namespace l1tv;
using testutil::naive_perimeter_units;

namespace {
constexpr double kPi = std::numbers::pi;

BinaryMask rect(const GridGeom& g, int x0, int y0, int x1, int y1) {
    BinaryMask m(g);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) m.set(x, y);
    return m;
}
}  // namespace

TEST_CASE("perimeter trivial cases") {
    const GridGeom g(5, 5);
    for (const char* name : {"n4", "n8", "n16"}) CHECK(perimeter(BinaryMask(g), Stencil::preset(name)) == 0);
    BinaryMask one(g);
    one.set(2, 2);
    CHECK(perimeter(one, Stencil::preset("n4")) == 4.0);
}

TEST_CASE("N4 is the exact l1 perimeter of rectangles") {
    const Stencil n4 = Stencil::preset("n4");
    for (const Rational h : {Rational{1, 1}, Rational{1, 2}, Rational{3, 1}}) {
        const GridGeom g(20, 12, h);
        for (int w = 1; w <= 9; w += 2)
            for (int hh = 1; hh <= 7; hh += 3) {
                const BinaryMask m = rect(g, 3, 2, 3 + w - 1, 2 + hh - 1);
                CHECK(perimeter(m, n4) == 2.0 * (w + hh) * h.to_double());
                CHECK(perimeter_units(m, n4) == 2 * (w + hh) * kWeightDenominator);
            }
        // a rectangle on the edge pays the grid edge under the background convention only
        const BinaryMask corner = rect(g, 0, 0, 3, 2);
        CHECK(perimeter(corner, n4) == 14.0 * h.to_double());
        CHECK(perimeter(corner, n4, Border::interior) == 7.0 * h.to_double());
    }
}

TEST_CASE("Crofton weights") {
    const auto n4 = crofton_weights(preset_offsets("n4"), 1.0);
    REQUIRE(n4.size() == 2);
    CHECK(n4[0] == 1.0);
    CHECK(n4[1] == 1.0);

    // N8: four directions, each owning pi/4 of [0, pi)
    const auto n8 = crofton_weights(preset_offsets("n8"), 1.0);
    const auto off8 = preset_offsets("n8");
    for (std::size_t k = 0; k < off8.size(); ++k) {
        const bool diag = off8[k].dx != 0 && off8[k].dy != 0;
        CHECK(n8[k] > 0);
        CHECK(n8[k] == doctest::Approx(diag ? kPi / (8 * std::sqrt(2.0)) : kPi / 8).epsilon(1e-12));
        if (diag) CHECK(n8[k] < kPi / 8 * std::sqrt(2.0));
    }

    // N16: the axis direction owns atan(1/2) of the circle of directions
    const auto off16 = preset_offsets("n16");
    const auto n16 = crofton_weights(off16, 1.0);
    for (std::size_t k = 0; k < off16.size(); ++k)
        if (off16[k] == Offset{1, 0}) CHECK(n16[k] == doctest::Approx(std::atan(0.5) / 2).epsilon(1e-12));

    for (const char* name : {"n4", "n8", "n16"}) {
        const auto w1 = crofton_weights(preset_offsets(name), 1.0);
        const auto w2 = crofton_weights(preset_offsets(name), 2.0);
        for (std::size_t k = 0; k < w1.size(); ++k) CHECK(w2[k] == doctest::Approx(2 * w1[k]).epsilon(1e-15));
    }
    CHECK_THROWS_AS(crofton_weights(std::vector<Offset>{{1, 0}}, 1.0), ConfigError);
    CHECK_THROWS_AS(crofton_weights(std::vector<Offset>{{1, 0}, {2, 0}}, 1.0), ConfigError);
}

TEST_CASE("stencil validation") {
    CHECK_THROWS_AS(Stencil::preset("n6"), ConfigError);
    CHECK_THROWS_AS(Stencil("bad", {{-1, 0}, {0, 1}}, {1, 1}), ConfigError);
    CHECK_THROWS_AS(Stencil("dup", {{1, 0}, {1, 0}}, {1, 1}), ConfigError);
    CHECK_THROWS_AS(Stencil("size", {{1, 0}, {0, 1}}, {1}), ConfigError);
    CHECK(Stencil::preset("N16").size() == 8);
    CHECK(Stencil::preset("n16").reach() == 2);
}

TEST_CASE("spacing scales perimeter linearly") {
    const Stencil st = Stencil::preset("n16");
    const GridGeom g1(64, 64), g2(64, 64, Rational{2, 1});
    const BinaryMask a = rasterize_disc({32, 32, 20}, g1);
    BinaryMask b(g2);
    for (std::size_t i = 0; i < a.cells(); ++i) b.assign(i, a.test(i));
    CHECK(perimeter(b, st) == 2 * perimeter(a, st));
}

TEST_CASE("N16 digital discs are within 2% of the circumference") {
    const Stencil st = Stencil::preset("n16");
    for (double r : {30.0, 50.0}) {
        const GridGeom g(128, 128);
        const double p = perimeter(rasterize_disc({64, 64, r}, g), st);
        CHECK(std::abs(p - 2 * kPi * r) <= 0.02 * 2 * kPi * r);
    }
}

TEST_CASE("library perimeter matches naive pair enumeration") {
    Rng rng(5);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 30; ++t) {
            const GridGeom g(1 + t % 13, 1 + (t * 7) % 11);
            const BinaryMask m = testutil::random_mask(g, rng, 0.5);
            for (Border b : {Border::background, Border::foreground, Border::interior})
                CHECK(perimeter_units(m, st, b) == naive_perimeter_units(m, st, b));
        }
    }
}

TEST_CASE("complement identity across the border conventions") {
    Rng rng(9);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 50; ++t) {
            const BinaryMask m = testutil::random_mask(GridGeom(9, 7), rng, 0.45);
            CHECK(perimeter_units(m, st, Border::background) == perimeter_units(complement(m), st, Border::foreground));
            CHECK(perimeter_units(m, st, Border::interior) == perimeter_units(complement(m), st, Border::interior));
        }
    }
}

TEST_CASE("flip delta and box-restricted sums") {
    Rng rng(17);
    const Stencil st = Stencil::preset("n16");
    const GridGeom g(12, 10);
    for (int t = 0; t < 20; ++t) {
        BinaryMask m = testutil::random_mask(g, rng, 0.5);
        for (Border b : {Border::background, Border::foreground, Border::interior}) {
            const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(g.cells()) - 1));
            const std::int64_t before = perimeter_units(m, st, b);
            const std::int64_t d = flip_delta_units(m, i, st, b);
            BinaryMask f = m;
            f.flip(i);
            CHECK(perimeter_units(f, st, b) - before == d);

            const CellBox box{2, 3, 7, 6};
            const std::int64_t inside = perimeter_units_touching(m, st, b, box);
            CHECK(inside <= before);
            CHECK(perimeter_units_touching(m, st, b, CellBox{0, 0, g.width - 1, g.height - 1}) == before);
        }
    }
}

TEST_CASE("submodularity on random pairs") {
    Rng rng(23);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 300; ++t) {
            const GridGeom g(16, 16);
            const BinaryMask a = testutil::random_shapes(g, rng, 3), b = testutil::random_shapes(g, rng, 3);
            CHECK(perimeter_units(a | b, st) + perimeter_units(a & b, st) <= perimeter_units(a, st) + perimeter_units(b, st));
        }
    }
}

TEST_CASE("anisotropy bound") {
    // rho(t) = sum_k w_k |dx sin t - dy cos t|, swept densely
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        double worst = 0;
        for (int i = 0; i <= 200000; ++i) {
            const double t = kPi * i / 200000;
            double rho = 0;
            for (std::size_t k = 0; k < st.size(); ++k) {
                const Offset o = st.offsets()[k];
                rho += st.weight(k, 1.0) * std::abs(o.dx * std::sin(t) - o.dy * std::cos(t));
            }
            CHECK(directional_factor(st, t) == doctest::Approx(rho).epsilon(1e-12));
            worst = std::max(worst, std::abs(rho - 1));
        }
        const double bound = anisotropy_bound(st);
        CHECK(bound >= worst - 1e-12);
        CHECK(bound <= worst + 1e-8);
    }
    CHECK(anisotropy_bound(Stencil::preset("n4")) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-9));
    CHECK(anisotropy_bound(Stencil::preset("n16")) < anisotropy_bound(Stencil::preset("n8")));
    CHECK(anisotropy_bound(Stencil::preset("n8")) < anisotropy_bound(Stencil::preset("n4")));
}

TEST_CASE("a long straight edge is measured with the directional factor") {
    const Stencil st = Stencil::preset("n8");
    // half-plane below the line y = x / 2 on a wide strip, interior convention hides the grid edges
    const GridGeom g(400, 200);
    BinaryMask m(g);
    for (int y = 0; y < 200; ++y)
        for (int x = 0; x < 400; ++x) m.set(x, y, 2 * y < x);
    const double t = std::atan(0.5);
    const double length = 400 / std::cos(t);
    CHECK(perimeter(m, st, Border::interior) == doctest::Approx(directional_factor(st, t) * length).epsilon(0.01));
}
