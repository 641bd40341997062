#include "l1tv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

void require_small(const GridGeom& geom, std::size_t cap) {
    if (geom.cells() > cap)
        throw SizeLimitError("exhaustive enumeration refused: " + std::to_string(geom.cells()) + " cells (limit " +
                             std::to_string(cap) + ")");
}

}  // namespace

std::uint32_t mask_code(const BinaryMask& mask) {
    require_small(mask.geom(), 32);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < mask.cells(); ++i)
        if (mask.test(i)) code |= std::uint32_t{1} << i;
    return code;
}

BinaryMask mask_from_code(const GridGeom& geom, std::uint32_t code) {
    require_small(geom, 32);
    BinaryMask m(geom);
    for (std::size_t i = 0; i < geom.cells(); ++i)
        if ((code >> i) & 1u) m.assign(i, true);
    return m;
}

PerimeterTable::PerimeterTable(const GridGeom& geom, const Stencil& stencil, Border border) : geom_(geom) {
    require_small(geom, kOracleMaxCells);
    const std::uint64_t total = std::uint64_t{1} << geom.cells();
    table_.assign(total, 0);
    BinaryMask walk(geom);
    std::int64_t per = perimeter_units(walk, stencil, border);  // nonzero under the foreground border
    table_[0] = per;
    std::uint32_t gray = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        per += flip_delta_units(walk, static_cast<std::size_t>(bit), stencil, border);
        walk.flip(static_cast<std::size_t>(bit));
        gray ^= std::uint32_t{1} << bit;
        table_[gray] = per;
    }
}

OracleResult brute_force_minimize(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                                  Border border) {
    const GridGeom& geom = omega.geom();
    require_small(geom, kOracleMaxCells);
    const EnergyScale scale(geom, params);
    const std::uint64_t total = std::uint64_t{1} << geom.cells();

    BinaryMask walk(geom);
    // sigma = empty: every omega cell mismatched
    std::int64_t e = perimeter_units(walk, stencil, border) * scale.edge_factor() +
                     static_cast<std::int64_t>(omega.count()) * scale.cell_factor();
    std::int64_t best = e;
    std::vector<std::uint32_t> argmin{0};
    std::uint32_t gray = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        const auto cell = static_cast<std::size_t>(bit);
        e += flip_delta_units(walk, cell, stencil, border) * scale.edge_factor();
        // the cell matches omega after the flip iff it mismatched before
        e += (walk.test(cell) != omega.test(cell)) ? -scale.cell_factor() : scale.cell_factor();
        walk.flip(cell);
        gray ^= std::uint32_t{1} << bit;
        if (e < best) {
            best = e;
            argmin.assign(1, gray);
        } else if (e == best) {
            argmin.push_back(gray);
        }
    }

    std::sort(argmin.begin(), argmin.end());
    OracleResult r;
    r.min_energy_units = best;
    r.min_energy = scale.to_energy(best);
    r.enumerated = total;
    for (auto c : argmin) r.minimizers.push_back(mask_from_code(geom, c));
    return r;
}

OracleResult brute_force_minimize(const BinaryMask& omega, const EnergyParams& params, const PerimeterTable& table) {
    require_same_geom(omega.geom(), table.geom());
    const EnergyScale scale(omega.geom(), params);
    const std::uint32_t target = mask_code(omega);
    const auto ef = scale.edge_factor(), cf = scale.cell_factor();

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint32_t> argmin;
    const auto total = static_cast<std::uint32_t>(table.size());
    for (std::uint32_t c = 0; c < total; ++c) {
        const std::int64_t e = table[c] * ef + std::popcount(c ^ target) * cf;
        if (e < best) {
            best = e;
            argmin.assign(1, c);
        } else if (e == best) {
            argmin.push_back(c);
        }
    }
    OracleResult r;
    r.min_energy_units = best;
    r.min_energy = scale.to_energy(best);
    r.enumerated = table.size();
    for (auto c : argmin) r.minimizers.push_back(mask_from_code(omega.geom(), c));
    return r;
}

std::vector<std::int64_t> exhaustive_min_energy_all(const PerimeterTable& table, const EnergyParams& params) {
    require_small(table.geom(), 16);
    const EnergyScale scale(table.geom(), params);
    const auto ef = scale.edge_factor(), cf = scale.cell_factor();
    const int n = static_cast<int>(table.geom().cells());
    const int lo_bits = n / 2;
    const std::uint32_t lo_count = std::uint32_t{1} << lo_bits;
    const std::uint32_t hi_count = std::uint32_t{1} << (n - lo_bits);

    // inner[hi][omega_lo] = min over lo of P(hi, lo) + l |lo xor omega_lo|
    std::vector<std::int64_t> inner(static_cast<std::size_t>(hi_count) * lo_count);
    for (std::uint32_t hi = 0; hi < hi_count; ++hi) {
        for (std::uint32_t olo = 0; olo < lo_count; ++olo) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (std::uint32_t lo = 0; lo < lo_count; ++lo)
                best = std::min(best, table[(hi << lo_bits) | lo] * ef + std::popcount(lo ^ olo) * cf);
            inner[static_cast<std::size_t>(hi) * lo_count + olo] = best;
        }
    }

    std::vector<std::int64_t> out(table.size());
    for (std::uint32_t omega = 0; omega < table.size(); ++omega) {
        const std::uint32_t ohi = omega >> lo_bits, olo = omega & (lo_count - 1);
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::uint32_t hi = 0; hi < hi_count; ++hi)
            best = std::min(best, inner[static_cast<std::size_t>(hi) * lo_count + olo] + std::popcount(hi ^ ohi) * cf);
        out[omega] = best;
    }
    return out;
}

OptimalityMatch verify_optimality_small(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                                        SolveOptions options) {
    require_small(omega.geom(), kOracleMaxCells);
    OptimalityMatch m;
    m.oracle = brute_force_minimize(omega, params, stencil, options.border);
    options.canonical = Canonical::smallest;
    m.smallest = minimize(omega, params, stencil, options);
    options.canonical = Canonical::largest;
    m.largest = minimize(omega, params, stencil, options);

    m.energies_equal = m.smallest.report.total_units == m.oracle.min_energy_units &&
                       m.largest.report.total_units == m.oracle.min_energy_units;
    BinaryMask meet(omega.geom(), true), join(omega.geom());
    for (const auto& s : m.oracle.minimizers) {
        meet &= s;
        join |= s;
        if (s == m.smallest.sigma) m.smallest_is_listed = true;
    }
    m.smallest_is_intersection = meet == m.smallest.sigma;
    m.largest_is_union = join == m.largest.sigma;
    return m;
}

}  // namespace l1tv
