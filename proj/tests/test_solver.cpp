#include <doctest.h>

#include "l1tv/errors.hpp"
#include "l1tv/grid_flow.hpp"
#include "l1tv/solver.hpp"
#include "test_util.hpp"

using namespace l1tv;

TEST_CASE("grid network on hand-checked instances") {
    const std::vector<Offset> off{{1, 0}};
    for (FlowAlgorithm a : {FlowAlgorithm::boykov_kolmogorov, FlowAlgorithm::push_relabel}) {
        // s -5-> [0] -3-> [1] -4-> t
        const std::vector<std::int64_t> caps{3};
        GridFlowNetwork net(2, 1, off, caps);
        net.add_terminal(0, 5, 0);
        net.add_terminal(1, 0, 4);
        CHECK(net.solve(a) == 3);
        CHECK(net.folded_constant() == 0);
        const auto small = net.source_side(true), large = net.source_side(false);
        CHECK(small[0] == 1);
        CHECK(small[1] == 0);
        CHECK(large[0] == 1);
        CHECK(large[1] == 0);

        // repeated terminal links fold: (2 + 3) from s and 4 to t on one node -> constant 4, residual 1 from s
        GridFlowNetwork fold(1, 1, off, caps);
        fold.add_terminal(0, 2, 0);
        fold.add_terminal(0, 3, 4);
        CHECK(fold.solve(a) == 0);
        CHECK(fold.folded_constant() == 4);

        // three cells in a row, middle link is the bottleneck, ties give distinct canonical cuts
        const std::vector<std::int64_t> caps2{2};
        GridFlowNetwork tie(3, 1, off, caps2);
        tie.add_terminal(0, 2, 0);
        tie.add_terminal(2, 0, 2);
        CHECK(tie.solve(a) == 2);
        const auto s = tie.source_side(true), l = tie.source_side(false);
        CHECK(s == std::vector<std::uint8_t>{0, 0, 0});
        CHECK(l == std::vector<std::uint8_t>{1, 1, 1});
    }
}

TEST_CASE("minimize examples") {
    const GridGeom g(96, 96);
    const EnergyParams p = EnergyParams::parse("0.1");
    const Stencil st = Stencil::preset("n16");

    CHECK(minimize(rasterize_disc({48, 48, 16}, g), p, st).sigma.none());

    const BinaryMask d25 = rasterize_disc({48, 48, 25}, g);
    const SolveResult r = minimize(d25, p, st);
    CHECK(std::abs(r.sigma.area() - d25.area()) <= 0.01 * d25.area());
    CHECK(r.report.total < energy(BinaryMask(g), d25, p, st).total);
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        BinaryMask pert = r.sigma;
        for (int k = 0; k < 5; ++k)
            pert.flip(static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(g.cells()) - 1)));
        CHECK(energy(pert, d25, p, st).total_units > r.report.total_units);
    }

    const SolveResult e = minimize(BinaryMask(g), p, st);
    CHECK(e.sigma.none());
    CHECK(e.report.total_units == 0);
}

TEST_CASE("single cell: keep iff lambda h^2 beats its perimeter") {
    const GridGeom g(3, 3);
    BinaryMask omega(g);
    omega.set(1, 1);
    const Stencil n4 = Stencil::preset("n4");
    CHECK(minimize(omega, EnergyParams::parse("5"), n4).sigma == omega);
    CHECK(minimize(omega, EnergyParams::parse("3"), n4).sigma.none());
    // lambda = 4 is a tie: smallest is empty, largest keeps the cell
    SolveOptions o;
    CHECK(minimize(omega, EnergyParams::parse("4"), n4, o).sigma.none());
    o.canonical = Canonical::largest;
    CHECK(minimize(omega, EnergyParams::parse("4"), n4, o).sigma == omega);
}

TEST_CASE("both max-flow algorithms give the same cut") {
    Rng rng(31);
    for (const char* name : {"n4", "n8", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 12; ++t) {
            const GridGeom g(40 + t, 33, t % 3 == 0 ? Rational{1, 2} : Rational{1, 1});
            const BinaryMask omega = t % 2 ? testutil::random_mask(g, rng, 0.5) : testutil::random_shapes(g, rng, 5);
            const EnergyParams p = EnergyParams::parse(t % 4 == 0 ? "0.25" : "1.5");
            for (Border b : {Border::background, Border::foreground, Border::interior})
                for (Canonical c : {Canonical::smallest, Canonical::largest}) {
                    SolveOptions bk{FlowAlgorithm::boykov_kolmogorov, c, b}, pr{FlowAlgorithm::push_relabel, c, b};
                    const SolveResult x = minimize(omega, p, st, bk), y = minimize(omega, p, st, pr);
                    CHECK(x.report.total_units == y.report.total_units);
                    CHECK(x.sigma == y.sigma);
                    CHECK(x.flow_value_units == y.flow_value_units);
                    CHECK(x.report.total_units == x.flow_value_units + x.offset_units);
                    CHECK(x.report.total_units == testutil::naive_energy_units(x.sigma, omega, p, st, b));
                }
        }
    }
}

TEST_CASE("canonical minimizers bracket each other") {
    Rng rng(41);
    const Stencil st = Stencil::preset("n8");
    for (int t = 0; t < 30; ++t) {
        const GridGeom g(24, 24);
        const BinaryMask omega = testutil::random_shapes(g, rng, 4);
        const EnergyParams p = EnergyParams::parse(t % 2 ? "0.5" : "0.75");
        SolveOptions lo, hi;
        hi.canonical = Canonical::largest;
        const SolveResult a = minimize(omega, p, st, lo), b = minimize(omega, p, st, hi);
        CHECK(a.report.total_units == b.report.total_units);
        CHECK(a.sigma.is_subset_of(b.sigma));
    }
}

TEST_CASE("solver duality under complement") {
    Rng rng(43);
    for (const char* name : {"n4", "n16"}) {
        const Stencil st = Stencil::preset(name);
        for (int t = 0; t < 20; ++t) {
            const GridGeom g(30, 26);
            const BinaryMask omega = testutil::random_shapes(g, rng, 5);
            const EnergyParams p = EnergyParams::parse("0.3");
            for (Border b : {Border::interior, Border::background}) {
                SolveOptions small{FlowAlgorithm::boykov_kolmogorov, Canonical::smallest, b};
                SolveOptions large{FlowAlgorithm::boykov_kolmogorov, Canonical::largest, flipped(b)};
                const SolveResult x = minimize(omega, p, st, small);
                const SolveResult y = minimize(complement(omega), p, st, large);
                CHECK(x.report.total_units == y.report.total_units);
                CHECK(complement(x.sigma) == y.sigma);
            }
        }
    }
}

TEST_CASE("disc minimizers grow with lambda") {
    // larger lambda weights fidelity more; the smallest minimizers of a disc grow with lambda
    const GridGeom g(64, 64);
    const BinaryMask omega = rasterize_disc({32, 32, 22}, g);
    const Stencil st = Stencil::preset("n16");
    BinaryMask prev(g);
    for (const char* lam : {"0.02", "0.05", "0.1", "0.2", "1"}) {
        const SolveResult r = minimize(omega, EnergyParams::parse(lam), st);
        CHECK(prev.is_subset_of(r.sigma));
        CHECK(r.sigma.is_subset_of(omega));
        prev = r.sigma;
    }
}
