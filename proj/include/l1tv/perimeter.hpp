#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l1tv/grid.hpp"

namespace l1tv {

struct Offset {
    int dx = 0;
    int dy = 0;
    friend bool operator==(const Offset&, const Offset&) = default;
};

/* What lies beyond the grid when counting perimeter edges.
 *   background - outside cells are 0, so foreground on the edge pays perimeter
 *   foreground - outside cells are 1 (the complement of a background mask)
 *   interior   - edges leaving the grid are ignored */
enum class Border { background, foreground, interior };

Border flipped(Border b);
std::string_view to_string(Border b);
Border parse_border(std::string_view name);

// Integer weight denominator: every stencil weight is units / kWeightDenominator * h.
inline constexpr std::int64_t kWeightDenominator = std::int64_t{1} << 16;

/* Weighted neighbourhood. Offsets follow the half-plane convention
 * (dy > 0, or dy == 0 and dx > 0) so each unordered pair is listed once. */
class Stencil {
public:
    Stencil(std::string name, std::vector<Offset> offsets, std::vector<double> unit_weights);

    // "n4", "n8" or "n16" (case-insensitive).
    static Stencil preset(std::string_view name);
    // Cauchy-Crofton weights for an arbitrary offset set.
    static Stencil crofton(std::string name, std::vector<Offset> offsets);

    const std::string& name() const { return name_; }
    std::span<const Offset> offsets() const { return offsets_; }
    std::size_t size() const { return offsets_.size(); }
    // weights at h = 1, before quantization
    std::span<const double> unit_weights() const { return unit_weights_; }
    // quantized weights, the ones every energy computation uses
    std::span<const std::int64_t> units() const { return units_; }
    double weight(std::size_t k, double h) const {
        return static_cast<double>(units_[k]) / static_cast<double>(kWeightDenominator) * h;
    }
    int reach() const { return reach_; }

private:
    std::string name_;
    std::vector<Offset> offsets_;
    std::vector<double> unit_weights_;
    std::vector<std::int64_t> units_;
    int reach_ = 0;
};

std::vector<Offset> preset_offsets(std::string_view name);

/* Crofton edge weights: w_k = h * dphi_k / (2 |v_k|), dphi_k being the share
 * of [0, pi) closest in angle to direction k. The exact N4 set is special
 * cased to weight h, which makes N4 the l1 perimeter. */
std::vector<double> crofton_weights(std::span<const Offset> offsets, double spacing_h);

// Sum of quantized weights over differing pairs, in units of h / kWeightDenominator.
std::int64_t perimeter_units(const BinaryMask& mask, const Stencil& stencil, Border border = Border::background);

// Same sum restricted to pairs with at least one endpoint in the box.
std::int64_t perimeter_units_touching(const BinaryMask& mask, const Stencil& stencil, Border border,
                                      const CellBox& box);

// Change of perimeter_units if cell i were flipped.
std::int64_t flip_delta_units(const BinaryMask& mask, std::size_t i, const Stencil& stencil, Border border);

double units_to_length(std::int64_t units, double h);

// Perimeter in length units.
double perimeter(const BinaryMask& mask, const Stencil& stencil, Border border = Border::background);

/* Directional length factor of the stencil: a long straight boundary with
 * unit tangent (cos t, sin t) is measured as rho(t) times its length. */
double directional_factor(const Stencil& stencil, double theta);
// max over t of |rho(t) - 1|, evaluated exactly on the piecewise-sinusoidal rho.
double anisotropy_bound(const Stencil& stencil);

}  // namespace l1tv
