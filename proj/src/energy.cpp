#include "l1tv/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ConfigError("energy scale overflows 64-bit integers");
    return out;
}

}  // namespace

EnergyParams::EnergyParams(Rational lambda_value, int n) : lambda(lambda_value), dimension_n(n) {
    if (!lambda.positive()) throw DomainError("lambda must be positive, got " + lambda.str());
    if (n < 2) throw DomainError("dimension must be at least 2");
}

EnergyParams EnergyParams::parse(std::string_view lambda_text, int n) {
    return EnergyParams(Rational::parse(lambda_text), n);
}

EnergyScale::EnergyScale(const GridGeom& geom, const EnergyParams& params) {
    const std::int64_t p = params.lambda.num, q = params.lambda.den;
    const std::int64_t a = geom.spacing.num, b = geom.spacing.den;
    edge_factor_ = mul(mul(a, q), b);
    cell_factor_ = mul(mul(p, mul(a, a)), kWeightDenominator);
    const double denom = static_cast<double>(kWeightDenominator) * static_cast<double>(q) * static_cast<double>(b) *
                         static_cast<double>(b);
    unit_ = 1.0 / denom;

    // Worst case total: every cell cut on every edge of a 16-neighbourhood plus full fidelity.
    const double cells = static_cast<double>(geom.cells()) + 4.0 * (geom.width + geom.height) + 64.0;
    const double bound = cells * (16.0 * static_cast<double>(kWeightDenominator) * static_cast<double>(edge_factor_) +
                                  static_cast<double>(cell_factor_));
    if (bound > 0x1p61) throw ConfigError("energy scale overflows 64-bit integers for this grid and lambda");
}

EnergyReport energy(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& params,
                    const Stencil& stencil, Border border) {
    require_same_geom(sigma.geom(), omega.geom());
    const EnergyScale scale(sigma.geom(), params);
    EnergyReport r;
    r.perimeter_units = perimeter_units(sigma, stencil, border) * scale.edge_factor();
    r.fidelity_units = static_cast<std::int64_t>(symmetric_difference_count(sigma, omega)) * scale.cell_factor();
    r.total_units = r.perimeter_units + r.fidelity_units;
    r.unit = scale.unit();
    r.perimeter_term = scale.to_energy(r.perimeter_units);
    r.fidelity_term = scale.to_energy(r.fidelity_units);
    r.total = scale.to_energy(r.total_units);
    r.params = params;
    r.stencil_name = stencil.name();
    r.border = border;
    return r;
}

EnergyDelta energy_change(const BinaryMask& before, const BinaryMask& after, const BinaryMask& omega,
                          const EnergyParams& params, const Stencil& stencil, Border border, const CellBox& changed) {
    require_same_geom(before.geom(), after.geom());
    require_same_geom(before.geom(), omega.geom());
    const EnergyScale scale(before.geom(), params);
    const std::int64_t dper = perimeter_units_touching(after, stencil, border, changed) -
                              perimeter_units_touching(before, stencil, border, changed);
    std::int64_t dfid = 0;
    for (int y = changed.y0; y <= changed.y1; ++y) {
        for (int x = changed.x0; x <= changed.x1; ++x) {
            const bool o = omega.get(x, y);
            dfid += static_cast<int>(after.get(x, y) != o) - static_cast<int>(before.get(x, y) != o);
        }
    }
    EnergyDelta d;
    d.units = dper * scale.edge_factor() + dfid * scale.cell_factor();
    d.value = scale.to_energy(d.units);
    return d;
}

EnergyDelta delta_energy_ball_union(const BinaryMask& sigma, const DiscSpec& ball, const BinaryMask& omega,
                                    const EnergyParams& params, const Stencil& stencil, Border border) {
    require_same_geom(sigma.geom(), omega.geom());
    BinaryMask after = sigma;
    paint_disc(after, ball, true);
    return energy_change(sigma, after, omega, params, stencil, border, disc_bounding_box(ball, sigma.geom()));
}

BallUnionTerms decompose_ball_union(const BinaryMask& sigma, const BinaryMask& ball, const BinaryMask& omega,
                                    const EnergyParams& params, const Stencil& stencil, Border border) {
    require_same_geom(sigma.geom(), ball.geom());
    require_same_geom(sigma.geom(), omega.geom());
    const EnergyScale scale(sigma.geom(), params);
    const auto per = [&](const BinaryMask& m) { return perimeter_units(m, stencil, border) * scale.edge_factor(); };
    const auto lam = [&](std::size_t cells) { return static_cast<std::int64_t>(cells) * scale.cell_factor(); };

    const BinaryMask meet = sigma & ball;
    const BinaryMask join = sigma | ball;
    BallUnionTerms t;
    t.ball_perimeter = per(ball);
    t.ball_area = lam(ball.count());
    t.intersection_area = lam(meet.count());
    t.intersection_perimeter = per(meet);
    t.interaction = t.ball_perimeter + per(sigma) - per(join) - t.intersection_perimeter;
    t.outside_omega = 2 * lam(difference(difference(ball, sigma), omega).count());
    t.total = t.ball_margin() + t.intersection_margin() - t.interaction + t.outside_omega;
    t.unit = scale.unit();
    return t;
}

double unit_ball_volume(int n) {
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double continuum_disc_energy_margin(double r, const EnergyParams& params) {
    if (!(r > 0)) throw DomainError("radius must be positive");
    const int n = params.dimension_n;
    const double alpha = unit_ball_volume(n);
    return n * alpha * std::pow(r, n - 1) - params.lambda_value() * alpha * std::pow(r, n);
}

}  // namespace l1tv
