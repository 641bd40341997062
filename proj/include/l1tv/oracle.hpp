#pragma once

#include <cstdint>
#include <vector>

#include "l1tv/energy.hpp"
#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"
#include "l1tv/solver.hpp"

namespace l1tv {

inline constexpr std::size_t kOracleMaxCells = 20;

struct OracleResult {
    std::int64_t min_energy_units = 0;
    double min_energy = 0;
    std::vector<BinaryMask> minimizers;  // every mask attaining the minimum, in code order
    std::uint64_t enumerated = 0;
};

// Bit i of a code is cell i (row-major).
std::uint32_t mask_code(const BinaryMask& mask);
BinaryMask mask_from_code(const GridGeom& geom, std::uint32_t code);

// Perimeter units of every mask on a small grid, filled by a Gray-code walk.
class PerimeterTable {
public:
    PerimeterTable(const GridGeom& geom, const Stencil& stencil, Border border = Border::background);

    std::int64_t operator[](std::uint32_t code) const { return table_[code]; }
    std::size_t size() const { return table_.size(); }
    const GridGeom& geom() const { return geom_; }

private:
    GridGeom geom_;
    std::vector<std::int64_t> table_;
};

/* Enumerates all 2^cells masks in Gray-code order, updating the energy by
 * the one-cell perimeter and fidelity change at each step. */
OracleResult brute_force_minimize(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                                  Border border = Border::background);

// Same enumeration reading perimeters from a precomputed table.
OracleResult brute_force_minimize(const BinaryMask& omega, const EnergyParams& params, const PerimeterTable& table);

/* Minimum energy (units) for every omega on the table's grid at once:
 * out[code(omega)] = min over sigma of E(sigma; omega). The minimum over all
 * sigma is split as min over high bits of min over low bits, which keeps
 * the work at 2^(3n/2). At most 16 cells. */
std::vector<std::int64_t> exhaustive_min_energy_all(const PerimeterTable& table, const EnergyParams& params);

struct OptimalityMatch {
    bool energies_equal = false;
    bool smallest_is_listed = false;   // canonical smallest min-cut is one of the oracle's minimizers
    bool smallest_is_intersection = false;
    bool largest_is_union = false;
    SolveResult smallest;
    SolveResult largest;
    OracleResult oracle;
};

// Solver vs. exhaustive enumeration on a grid of at most kOracleMaxCells cells.
OptimalityMatch verify_optimality_small(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                                        SolveOptions options = {});

}  // namespace l1tv
