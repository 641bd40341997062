#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "l1tv/energy.hpp"
#include "l1tv/fixtures.hpp"
#include "l1tv/grid.hpp"
#include "l1tv/perimeter.hpp"
#include "l1tv/report.hpp"
#include "l1tv/solver.hpp"

namespace l1tv {

/* Roots of f(xi) = (2/R) xi^2 - 2 sqrt(pi) xi + (4 delta / R + 2 pi r - 2 pi r^2 / R),
 * i.e. xi = sqrt(pi R^2 / 4) +- sqrt(pi R^2 / 4 + pi r (r - R) - 2 delta).
 * `discriminant` is the quantity under the second root; it is reported
 * as-is when negative and no roots are produced. */
struct XiRoots {
    double xi_minus = 0;
    double xi_plus = 0;
    double discriminant = 0;
    bool real = false;
};

XiRoots xi_roots(double r, double R, double delta);
double xi_polynomial(double xi, double r, double R, double delta);

// Admissible open intervals (R, r_hat_factor * R) and (0, epsilon_max) in dimension n.
struct ShrinkIntervals {
    double r_hat_factor = 0;
    double epsilon_max = 0;
};
ShrinkIntervals shrink_intervals(int n);

struct DeltaThresholds {
    double cond1_prime = 0;  // pi R / 4 (r_hat - R)
    double cond2 = 0;        // pi R^2 / 8
    double cond3 = 0;        // pi R^2 / 24
    double cond4 = 0;        // C^2 R^2 / 24 (1 - e^-eps)^2
    double effective = 0;
};

/* Throws DomainError naming the violated interval. The delta conditions are
 * only derived in the plane, so n != 2 is rejected after the interval check. */
DeltaThresholds delta_thresholds(double R, double r_hat, double epsilon, double C, int n = 2);

/* Discretization budget for "is also a minimizer" checks on a ball:
 * anisotropy_bound(stencil) * Per(ball) + lambda * band_area(ball). */
struct Tolerance {
    double anisotropy = 0;
    double perimeter = 0;
    double band_area = 0;
    double value = 0;
};
Tolerance disc_tolerance(const DiscSpec& ball, const GridGeom& geom, const EnergyParams& params, const Stencil& stencil);
// Same budget for an arbitrary set; its band is the cells with a 4-neighbour of the other value.
Tolerance set_tolerance(const BinaryMask& set, const EnergyParams& params, const Stencil& stencil);

/* v(r) = |B_r \ sigma| sampled on [(1 - eps) R, R] and the comparison
 * sqrt(wbar(s)) = max(0, (C R / 2)(e^(-s/R) - 1) + sqrt(v(R))). */
struct DeficitCurve {
    std::vector<double> radii;
    std::vector<double> deficit;
    double R = 0;
    double epsilon = 0;
    double C = 1;
    double v_at_R = 0;

    double comparison(double s) const;
    bool nondecreasing() const;
};
DeficitCurve deficit_curve(const BinaryMask& sigma, double center_x, double center_y, double R, double epsilon,
                           double C, int samples = 33);

struct CheckReport {
    std::string id;
    bool passed = true;
    bool vacuous = false;
    bool precondition_met = true;
    Json details = Json::object();
};
Json to_json(const CheckReport& report);

/* |B_R \ sigma| <= 6 delta + tol_disc(B_R) for the R-disc concentric with
 * ball_hat. Reports an unmet precondition (and claims nothing) when
 * delta > delta_effective. */
CheckReport deficit_lemma_check(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& params,
                                const Stencil& stencil, const DiscSpec& ball_hat, double delta_measured, double delta_effective,
                                std::string id = "deficit");

struct Theorem1Options {
    int trials = 20;
    int margin_cells = 2;
    std::uint64_t seed = 42;
    FlowAlgorithm algorithm = FlowAlgorithm::boykov_kolmogorov;
};

/* Adds balls of radius R + margin inside omega to the canonical minimizer
 * (and removes balls inside omega^c) and checks 0 <= dE <= tol_disc. */
CheckReport check_theorem1(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                           const Theorem1Options& options, std::string id = "thm1");

struct Theorem2Setup {
    double r_hat = 24;
    double epsilon = 0.25;
    double C = 1;
    double notch_area = 0.5;
    NotchPlacement placement = NotchPlacement::boundary_bite;
    double notch_angle = 0;
    double hole_offset = 0.5;
    int width = 256;
    int height = 256;
    Rational spacing{1, 2};
    int margin_cells = 2;
};

CheckReport check_theorem2(const EnergyParams& params, const Stencil& stencil, const Theorem2Setup& setup,
                           std::string id = "thm2");

struct VanishingOptions {
    int width = 256;
    int height = 256;
    double area_fraction = 0.5;
    int band_cells = 2;
};

CheckReport check_vanishing(const EnergyParams& params, const std::vector<double>& radii, const Stencil& stencil,
                            const VanishingOptions& options, std::string id = "vanishing");

// Vieta identities on random (r, R, delta) and the double root at r = R, delta = pi R^2 / 8.
CheckReport check_roots(std::uint64_t seed, int samples, std::string id = "roots");

// Energy form of the sandwich bounds for the canonical minimizer.
CheckReport check_sandwich(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                           int margin_cells, std::string id = "sandwich");

struct VerifyConfig {
    EnergyParams params;
    Stencil stencil = Stencil::preset("n16");
    std::uint64_t seed = 42;
    int blob_fixtures = 50;
    int theorem1_trials = 20;
    int notch_placements = 10;
    int root_samples = 10000;
    int margin_cells = 2;
    double vanishing_area_fraction = 0.9;
    FlowAlgorithm algorithm = FlowAlgorithm::boykov_kolmogorov;
};

struct SuiteResult {
    std::vector<CheckReport> checks;  // sorted by id
    bool passed = true;
};

// suite: thm1 | thm2 | vanishing | deficit | roots | sandwich | all
SuiteResult run_suite(std::string_view suite, const VerifyConfig& config);
Json to_json(const SuiteResult& result, const VerifyConfig& config, std::string_view suite);

}  // namespace l1tv
