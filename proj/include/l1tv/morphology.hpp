#pragma once

#include <cstdint>
#include <vector>

#include "l1tv/energy.hpp"
#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"

namespace l1tv {

/* Exact squared Euclidean distance transform (grid units, two-pass
 * separable scan). out[i] is the squared distance from cell i to the
 * nearest seed cell, or -1 when there is no seed at all. */
std::vector<std::int64_t> squared_distance_transform(const std::vector<std::uint8_t>& seeds, int width, int height);

// Largest integer k with every offset of squared length <= k inside the disc of this radius.
std::int64_t disc_squared_extent(double radius, double h);

/* Cell c is kept iff the rasterized disc of `radius` centred at c lies in
 * the mask. `outside` says what lies beyond the grid (background or
 * foreground; interior is treated as background). */
BinaryMask erode(const BinaryMask& mask, double radius, Border outside = Border::background);
BinaryMask dilate(const BinaryMask& mask, double radius, Border outside = Border::background);
// Union of all rasterized radius-discs contained in the mask.
BinaryMask opening(const BinaryMask& mask, double radius, Border outside = Border::background);

struct SandwichBounds {
    BinaryMask inner;  // union of the balls inside omega
    BinaryMask outer;  // complement of the union of the balls inside omega^c
    double radius_R = 0;
    double radius_used = 0;
};

/* Balls of radius R + margin_cells * h (R = n / lambda). Theorem-radius balls
 * are a subset of these, and the extra margin keeps rasterization noise at
 * exactly R out of the bounds. Omega^c extends to infinity beyond the grid. */
SandwichBounds sandwich_bounds(const BinaryMask& omega, const EnergyParams& params, int margin_cells = 2);

}  // namespace l1tv
