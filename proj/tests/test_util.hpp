// Naive reference implementations shared by the unit tests. They
// deliberately avoid the library's fast paths (bit tricks, boxes,
// incremental updates) so they can serve as oracles.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "l1tv/energy.hpp"
#include "l1tv/fixtures.hpp"
#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"

namespace testutil {

using namespace l1tv;

inline bool cell_value(const BinaryMask& m, int x, int y, Border border, bool& skip) {
    skip = false;
    if (m.geom().contains(x, y)) return m.get(x, y);
    if (border == Border::interior) skip = true;
    return border == Border::foreground;
}

// Sum of quantized weights over every ordered-once pair (c, c + v_k) that differs.
inline std::int64_t naive_perimeter_units(const BinaryMask& m, const Stencil& st, Border border = Border::background) {
    std::int64_t total = 0;
    const int W = m.width(), H = m.height();
    const int reach = st.reach();
    for (int y = -reach; y < H + reach; ++y)
        for (int x = -reach; x < W + reach; ++x)
            for (std::size_t k = 0; k < st.size(); ++k) {
                const Offset o = st.offsets()[k];
                const int x2 = x + o.dx, y2 = y + o.dy;
                const bool in1 = m.geom().contains(x, y), in2 = m.geom().contains(x2, y2);
                if (!in1 && !in2) continue;
                bool s1 = false, s2 = false;
                const bool a = cell_value(m, x, y, border, s1), b = cell_value(m, x2, y2, border, s2);
                if (s1 || s2) continue;
                if (a != b) total += st.units()[k];
            }
    return total;
}

inline std::int64_t naive_energy_units(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& p,
                                       const Stencil& st, Border border = Border::background) {
    const EnergyScale sc(sigma.geom(), p);
    std::int64_t diff = 0;
    for (std::size_t i = 0; i < sigma.cells(); ++i) diff += sigma.test(i) != omega.test(i);
    return naive_perimeter_units(sigma, st, border) * sc.edge_factor() + diff * sc.cell_factor();
}

// Same energy in floating point straight from the definition.
inline double naive_energy_value(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& p,
                                 const Stencil& st, Border border = Border::background) {
    const double h = sigma.geom().h();
    double diff = 0;
    for (std::size_t i = 0; i < sigma.cells(); ++i) diff += sigma.test(i) != omega.test(i);
    return static_cast<double>(naive_perimeter_units(sigma, st, border)) / static_cast<double>(kWeightDenominator) * h +
           p.lambda_value() * diff * h * h;
}

inline BinaryMask from_code(const GridGeom& g, std::uint64_t code) {
    BinaryMask m(g);
    for (std::size_t i = 0; i < g.cells(); ++i) m.assign(i, (code >> i) & 1u);
    return m;
}

struct NaiveMin {
    std::int64_t units = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint64_t> argmins;
};

// Plain loop over every mask, energies recomputed from scratch.
inline NaiveMin naive_brute_force(const BinaryMask& omega, const EnergyParams& p, const Stencil& st,
                                  Border border = Border::background) {
    NaiveMin best;
    const std::uint64_t n = std::uint64_t{1} << omega.cells();
    for (std::uint64_t c = 0; c < n; ++c) {
        const std::int64_t e = naive_energy_units(from_code(omega.geom(), c), omega, p, st, border);
        if (e < best.units) {
            best.units = e;
            best.argmins.clear();
        }
        if (e == best.units) best.argmins.push_back(c);
    }
    return best;
}

// `margin` rows and columns along the grid edge are left empty.
inline BinaryMask random_mask(const GridGeom& g, Rng& rng, double density, int margin = 0) {
    BinaryMask m(g);
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) {
            if (x < margin || y < margin || x >= g.width - margin || y >= g.height - margin) continue;
            if (rng.uniform(0, 1) < density) m.set(x, y);
        }
    return m;
}

// Random union of a few rectangles and discs: masks with long boundaries and some structure.
inline BinaryMask random_shapes(const GridGeom& g, Rng& rng, int shapes) {
    BinaryMask m(g);
    for (int s = 0; s < shapes; ++s) {
        if (rng.integer(0, 1) == 0) {
            paint_disc(m, {rng.uniform(0, g.width), rng.uniform(0, g.height), rng.uniform(1, g.width / 3.0) * g.h()});
        } else {
            const int x0 = static_cast<int>(rng.integer(0, g.width - 1)), y0 = static_cast<int>(rng.integer(0, g.height - 1));
            const int x1 = static_cast<int>(rng.integer(x0, g.width - 1)), y1 = static_cast<int>(rng.integer(y0, g.height - 1));
            for (int y = y0; y <= y1; ++y)
                for (int x = x0; x <= x1; ++x) m.set(x, y, rng.integer(0, 3) != 0 || s % 2 == 0);
        }
    }
    return m;
}

}  // namespace testutil
