#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"
#include "l1tv/rational.hpp"

namespace l1tv {

struct EnergyParams {
    Rational lambda{1, 10};
    int dimension_n = 2;

    EnergyParams() = default;
    explicit EnergyParams(Rational lambda_value, int n = 2);
    static EnergyParams parse(std::string_view lambda_text, int n = 2);

    double lambda_value() const { return lambda.to_double(); }
    // R = n / lambda: the radius at which a ball's perimeter cost equals its fidelity reward.
    double critical_radius() const { return static_cast<double>(dimension_n) / lambda_value(); }
};

/* Common integer unit for one (grid, lambda, stencil) combination. With
 * lambda = p/q and h = a/b the unit is 1 / (D q b^2):
 *   one perimeter unit (h / D of length) = a q b energy units,
 *   one cell of symmetric difference     = p a^2 D energy units. */
class EnergyScale {
public:
    EnergyScale(const GridGeom& geom, const EnergyParams& params);

    std::int64_t edge_factor() const { return edge_factor_; }
    std::int64_t cell_factor() const { return cell_factor_; }
    double unit() const { return unit_; }
    double to_energy(std::int64_t units) const { return static_cast<double>(units) * unit_; }

private:
    std::int64_t edge_factor_ = 1;
    std::int64_t cell_factor_ = 1;
    double unit_ = 1.0;
};

struct EnergyReport {
    // exact values in EnergyScale units
    std::int64_t perimeter_units = 0;
    std::int64_t fidelity_units = 0;
    std::int64_t total_units = 0;
    double unit = 1.0;

    double perimeter_term = 0;
    double fidelity_term = 0;
    double total = 0;

    EnergyParams params;
    std::string stencil_name;
    Border border = Border::background;
};

// E(sigma) = Per(sigma) + lambda |sigma xor omega|
EnergyReport energy(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& params,
                    const Stencil& stencil, Border border = Border::background);

struct EnergyDelta {
    std::int64_t units = 0;
    double value = 0;
};

/* E(after) - E(before), evaluated only over pairs touching `changed`, which
 * must contain every cell where the two masks differ. */
EnergyDelta energy_change(const BinaryMask& before, const BinaryMask& after, const BinaryMask& omega,
                          const EnergyParams& params, const Stencil& stencil, Border border, const CellBox& changed);

// E(sigma u B) - E(sigma), exact.
EnergyDelta delta_energy_ball_union(const BinaryMask& sigma, const DiscSpec& ball, const BinaryMask& omega,
                                    const EnergyParams& params, const Stencil& stencil,
                                    Border border = Border::background);

/* The same increment split into the terms of the ball-union comparison:
 *   dE = (Per(B) - l|B|) + (l|B n S| - Per(B n S)) - interaction + outside_omega
 * where interaction = Per(B) + Per(S) - Per(B u S) - Per(B n S) >= 0 is carried
 * by stencil edges joining B\S to S\B, and outside_omega = 2 l |B \ (S u Omega)|.
 * For B inside Omega with no such edges the last two terms vanish. */
struct BallUnionTerms {
    std::int64_t ball_perimeter = 0;
    std::int64_t ball_area = 0;              // l|B|
    std::int64_t intersection_area = 0;      // l|B n S|
    std::int64_t intersection_perimeter = 0;
    std::int64_t interaction = 0;
    std::int64_t outside_omega = 0;
    std::int64_t total = 0;
    double unit = 1.0;

    std::int64_t ball_margin() const { return ball_perimeter - ball_area; }
    std::int64_t intersection_margin() const { return intersection_area - intersection_perimeter; }
};

BallUnionTerms decompose_ball_union(const BinaryMask& sigma, const BinaryMask& ball, const BinaryMask& omega,
                                    const EnergyParams& params, const Stencil& stencil,
                                    Border border = Border::background);

// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

// E(B_r) - E(empty) for Omega = B_r in the continuum: n a_n r^(n-1) - l a_n r^n.
double continuum_disc_energy_margin(double r, const EnergyParams& params);

}  // namespace l1tv
