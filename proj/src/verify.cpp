#include "l1tv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "l1tv/errors.hpp"
#include "l1tv/morphology.hpp"

namespace l1tv {

namespace {

constexpr double kPi = std::numbers::pi;

// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads; results keep index order.
template <typename Fn>
std::vector<CheckReport> parallel_checks(int n, Fn fn) {
    std::vector<CheckReport> out(static_cast<std::size_t>(std::max(n, 0)));
    std::vector<std::exception_ptr> errors(out.size());
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(std::max(n, 1))));
    auto run = [&](unsigned w) {
        for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) {
            try {
                out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::string padded(int i) {
    std::string s = std::to_string(i);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

}  // namespace

// ---------------------------------------------------------------- roots

double xi_polynomial(double xi, double r, double R, double delta) {
    return (2.0 / R) * xi * xi - 2.0 * std::sqrt(kPi) * xi + (4.0 * delta / R + 2.0 * kPi * r - 2.0 * kPi * r * r / R);
}

XiRoots xi_roots(double r, double R, double delta) {
    if (!(r > 0) || !(R > 0)) throw DomainError("xi_roots needs r > 0 and R > 0");
    if (!(delta >= 0)) throw DomainError("xi_roots needs delta >= 0");
    const double half = std::sqrt(kPi * R * R / 4.0);
    // pi R^2 / 4 + pi r (r - R) = pi (r - R/2)^2
    double disc = kPi * (r - 0.5 * R) * (r - 0.5 * R) - 2.0 * delta;
    const double noise = 4.0 * std::numeric_limits<double>::epsilon() *
                         (kPi * R * R / 4.0 + kPi * r * std::abs(r - R) + 2.0 * delta);
    if (std::abs(disc) <= noise) disc = 0.0;

    XiRoots out;
    out.discriminant = disc;
    if (disc < 0) return out;
    out.real = true;
    out.xi_plus = half + std::sqrt(disc);
    // product of the roots is 2 delta + pi r (R - r); avoids cancellation in half - sqrt(disc)
    out.xi_minus = (2.0 * delta + kPi * r * (R - r)) / out.xi_plus;
    return out;
}

ShrinkIntervals shrink_intervals(int n) {
    if (n < 2) throw DomainError("dimension must be at least 2");
    const double nd = static_cast<double>(n);
    ShrinkIntervals s;
    s.r_hat_factor = std::pow(2.0 - std::pow((nd - 1.0) / nd, nd), 1.0 / nd);
    s.epsilon_max = 1.0 - 1.0 / std::pow(2.0, 1.0 / nd);
    return s;
}

DeltaThresholds delta_thresholds(double R, double r_hat, double epsilon, double C, int n) {
    if (!(R > 0)) throw DomainError("R must be positive");
    if (!(C > 0)) throw DomainError("C must be positive");
    const ShrinkIntervals iv = shrink_intervals(n);
    if (!(r_hat > R && r_hat < iv.r_hat_factor * R))
        throw DomainError("r_hat must lie in (R, " + std::to_string(iv.r_hat_factor) + " R), got r_hat=" +
                          std::to_string(r_hat) + " with R=" + std::to_string(R));
    if (!(epsilon > 0 && epsilon < iv.epsilon_max))
        throw DomainError("epsilon must lie in (0, " + std::to_string(iv.epsilon_max) + "), got " + std::to_string(epsilon));
    if (n != 2) throw DomainError("delta conditions are only available for n = 2");

    DeltaThresholds t;
    t.cond1_prime = kPi * R / 4.0 * (r_hat - R);
    t.cond2 = kPi * R * R / 8.0;
    t.cond3 = kPi * R * R / 24.0;
    const double g = 1.0 - std::exp(-epsilon);
    t.cond4 = C * C * R * R / 24.0 * g * g;
    t.effective = std::min({t.cond1_prime, t.cond2, t.cond3, t.cond4});
    return t;
}

// ---------------------------------------------------------------- tolerances

Tolerance disc_tolerance(const DiscSpec& ball, const GridGeom& geom, const EnergyParams& params, const Stencil& stencil) {
    Tolerance t;
    t.anisotropy = anisotropy_bound(stencil);
    t.perimeter = perimeter(rasterize_disc(ball, geom), stencil);
    t.band_area = disc_band_area(ball, geom);
    t.value = t.anisotropy * t.perimeter + params.lambda_value() * t.band_area;
    return t;
}

Tolerance set_tolerance(const BinaryMask& set, const EnergyParams& params, const Stencil& stencil) {
    Tolerance t;
    t.anisotropy = anisotropy_bound(stencil);
    t.perimeter = perimeter(set, stencil);
    std::size_t band = 0;
    const GridGeom& g = set.geom();
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            const bool v = set.get(x, y);
            const int nb[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            for (const auto& o : nb) {
                const int nx = x + o[0], ny = y + o[1];
                const bool w = g.contains(nx, ny) && set.get(nx, ny);
                if (v != w) {
                    ++band;
                    break;
                }
            }
        }
    }
    t.band_area = static_cast<double>(band) * g.cell_area();
    t.value = t.anisotropy * t.perimeter + params.lambda_value() * t.band_area;
    return t;
}

static Json tolerance_json(const Tolerance& t) {
    return {{"anisotropy", t.anisotropy}, {"perimeter", t.perimeter}, {"band_area", t.band_area}, {"tol_disc", t.value}};
}

// ---------------------------------------------------------------- deficit curve

double DeficitCurve::comparison(double s) const {
    const double root = std::max(0.0, (C * R / 2.0) * (std::exp(-s / R) - 1.0) + std::sqrt(v_at_R));
    return root * root;
}

bool DeficitCurve::nondecreasing() const {
    for (std::size_t i = 1; i < deficit.size(); ++i)
        if (deficit[i] < deficit[i - 1]) return false;
    return true;
}

DeficitCurve deficit_curve(const BinaryMask& sigma, double center_x, double center_y, double R, double epsilon,
                           double C, int samples) {
    if (samples < 2) throw DomainError("deficit curve needs at least two samples");
    DeficitCurve c;
    c.R = R;
    c.epsilon = epsilon;
    c.C = C;
    for (int i = 0; i < samples; ++i) {
        const double r = (1.0 - epsilon) * R + epsilon * R * i / (samples - 1);
        const BinaryMask ball = rasterize_disc({center_x, center_y, r}, sigma.geom());
        c.radii.push_back(r);
        c.deficit.push_back(difference(ball, sigma).area());
    }
    c.v_at_R = c.deficit.back();
    return c;
}

Json to_json(const CheckReport& r) {
    return {{"id", r.id},
            {"passed", r.passed},
            {"vacuous", r.vacuous},
            {"precondition_met", r.precondition_met},
            {"details", r.details}};
}

// ---------------------------------------------------------------- deficit lemma

CheckReport deficit_lemma_check(const BinaryMask& sigma, const BinaryMask& omega, const EnergyParams& params,
                                const Stencil& stencil, const DiscSpec& ball_hat, double delta_measured, double delta_effective,
                                std::string id) {
    require_same_geom(sigma.geom(), omega.geom());
    CheckReport rep;
    rep.id = std::move(id);
    const double R = params.critical_radius();
    rep.details["delta_measured"] = delta_measured;
    rep.details["delta_effective"] = delta_effective;
    rep.details["R"] = R;
    rep.details["r_hat"] = ball_hat.radius;
    if (delta_measured > delta_effective) {
        rep.precondition_met = false;
        rep.details["note"] = "delta exceeds the effective threshold; no claim";
        return rep;
    }
    const DiscSpec ball_R{ball_hat.center_x, ball_hat.center_y, R};
    const double deficit = difference(rasterize_disc(ball_R, sigma.geom()), sigma).area();
    const Tolerance tol = disc_tolerance(ball_R, sigma.geom(), params, stencil);
    const double bound = 6.0 * delta_measured + tol.value;
    rep.details["deficit"] = deficit;
    rep.details["bound"] = bound;
    rep.details["tolerance"] = tolerance_json(tol);
    // stricter area-only budget, reported but not asserted
    rep.details["within_band_only_bound"] = deficit <= 6.0 * delta_measured + tol.band_area;
    rep.passed = deficit <= bound;
    return rep;
}

// ---------------------------------------------------------------- theorem 1

namespace {

std::vector<std::size_t> sample_cells(const BinaryMask& mask, int limit, Rng& rng) {
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < mask.cells(); ++i)
        if (mask.test(i)) cells.push_back(i);
    const auto take = std::min(cells.size(), static_cast<std::size_t>(std::max(limit, 0)));
    for (std::size_t i = 0; i < take; ++i) {
        const auto j = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(i),
                                                            static_cast<std::int64_t>(cells.size() - 1)));
        std::swap(cells[i], cells[j]);
    }
    cells.resize(take);
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

CheckReport check_theorem1(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                           const Theorem1Options& options, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    const GridGeom& g = omega.geom();
    const double radius = params.critical_radius() + options.margin_cells * g.h();

    SolveOptions so;
    so.algorithm = options.algorithm;
    const SolveResult sol = minimize(omega, params, stencil, so);
    const BinaryMask& sigma = sol.sigma;

    Rng rng(options.seed);
    const auto inside = sample_cells(erode(omega, radius), options.trials, rng);
    const auto outside = sample_cells(erode(complement(omega), radius), options.trials, rng);

    int violations = 0, not_optimal = 0;
    double worst_inside = -std::numeric_limits<double>::infinity(), worst_outside = worst_inside;
    double worst_ratio = 0;
    Json tol_sample;
    auto test_ball = [&](std::size_t cell, bool add, double& worst) {
        const DiscSpec ball{static_cast<double>(cell % static_cast<std::size_t>(g.width)),
                            static_cast<double>(cell / static_cast<std::size_t>(g.width)), radius};
        EnergyDelta d;
        if (add) {
            d = delta_energy_ball_union(sigma, ball, omega, params, stencil);
        } else {
            BinaryMask after = sigma;
            paint_disc(after, ball, false);
            d = energy_change(sigma, after, omega, params, stencil, Border::background, disc_bounding_box(ball, g));
        }
        const Tolerance tol = disc_tolerance(ball, g, params, stencil);
        if (tol_sample.is_null()) tol_sample = tolerance_json(tol);
        worst = std::max(worst, d.value);
        worst_ratio = std::max(worst_ratio, d.value / tol.value);
        if (d.value > tol.value) ++violations;
        if (d.units < 0) ++not_optimal;
    };
    for (auto c : inside) test_ball(c, true, worst_inside);
    for (auto c : outside) test_ball(c, false, worst_outside);

    rep.vacuous = inside.empty() && outside.empty();
    rep.passed = violations == 0 && not_optimal == 0;
    rep.details = {{"radius", radius},
                   {"R", params.critical_radius()},
                   {"inside_trials", inside.size()},
                   {"outside_trials", outside.size()},
                   {"inside_vacuous", inside.empty()},
                   {"outside_vacuous", outside.empty()},
                   {"max_dE_inside", inside.empty() ? Json(nullptr) : Json(worst_inside)},
                   {"max_dE_outside", outside.empty() ? Json(nullptr) : Json(worst_outside)},
                   {"max_dE_over_tol", worst_ratio},
                   {"violations", violations},
                   {"negative_dE", not_optimal},
                   {"tolerance_first_ball", tol_sample},
                   {"sigma_area", sigma.area()},
                   {"energy", sol.report.total}};
    return rep;
}

// ---------------------------------------------------------------- theorem 2

CheckReport check_theorem2(const EnergyParams& params, const Stencil& stencil, const Theorem2Setup& setup,
                           std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    const double R = params.critical_radius();
    const DeltaThresholds th = delta_thresholds(R, setup.r_hat, setup.epsilon, setup.C, params.dimension_n);
    rep.details["thresholds"] = {{"cond1_prime", th.cond1_prime},
                                 {"cond2", th.cond2},
                                 {"cond3", th.cond3},
                                 {"cond4", th.cond4},
                                 {"effective", th.effective}};
    rep.details["notch_requested"] = setup.notch_area;
    rep.details["placement"] = setup.placement == NotchPlacement::boundary_bite ? "boundary-bite" : "interior-hole";
    rep.details["notch_angle"] = setup.notch_angle;
    if (!(setup.notch_area < th.effective)) {
        rep.precondition_met = false;
        rep.details["note"] = "notch area not below the effective delta; no claim";
        return rep;
    }

    FixtureParams fp;
    fp.width = setup.width;
    fp.height = setup.height;
    fp.spacing = setup.spacing;
    fp.radius = setup.r_hat;
    fp.notch_area = setup.notch_area;
    fp.placement = setup.placement;
    fp.notch_angle = setup.notch_angle;
    fp.hole_offset = setup.hole_offset;
    const Fixture fx = make_notched_disc(fp);
    const BinaryMask& omega = fx.mask;
    const GridGeom& g = omega.geom();
    const DiscSpec& hat = fx.discs.front();
    const double delta = difference(rasterize_disc(hat, g), omega).area();
    rep.details["delta_measured"] = delta;
    if (!(delta < th.effective)) {
        rep.precondition_met = false;
        rep.details["note"] = "rasterized notch not below the effective delta; no claim";
        return rep;
    }

    const SolveResult sol = minimize(omega, params, stencil);
    const BinaryMask& sigma = sol.sigma;

    const double margin = setup.margin_cells * g.h() / R;
    const DiscSpec inner{hat.center_x, hat.center_y, (1.0 - setup.epsilon) * R * (1.0 - margin)};
    const EnergyDelta dE = delta_energy_ball_union(sigma, inner, omega, params, stencil);
    const Tolerance tol = disc_tolerance(inner, g, params, stencil);
    const BinaryMask inner_mask = rasterize_disc(inner, g);
    const BinaryMask augmented = sigma | inner_mask;
    const bool contained_after = inner_mask.is_subset_of(augmented);
    const bool energy_ok = dE.value <= tol.value && dE.units >= 0;

    const CheckReport lemma = deficit_lemma_check(sigma, omega, params, stencil, hat, delta, th.effective, rep.id + "/lemma");

    // comparison bound: v(R - s) <= e^(lambda s) wbar(s) + band
    const DeficitCurve curve = deficit_curve(sigma, hat.center_x, hat.center_y, R, setup.epsilon, setup.C);
    bool comparison_ok = true;
    double worst_gap = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.radii.size(); ++i) {
        const double r = curve.radii[i];
        const double s = R - r;
        const double bound = std::exp(params.lambda_value() * s) * curve.comparison(s) +
                             disc_band_area({hat.center_x, hat.center_y, r}, g);
        worst_gap = std::max(worst_gap, curve.deficit[i] - bound);
        if (curve.deficit[i] > bound) comparison_ok = false;
    }

    rep.passed = energy_ok && contained_after && lemma.passed && comparison_ok && curve.nondecreasing();
    rep.details["inner_radius"] = inner.radius;
    rep.details["dE"] = dE.value;
    rep.details["tolerance"] = tolerance_json(tol);
    rep.details["inner_in_sigma"] = inner_mask.is_subset_of(sigma);
    rep.details["inner_in_augmented"] = contained_after;
    rep.details["deficit_lemma"] = lemma.details;
    rep.details["deficit_lemma_passed"] = lemma.passed;
    rep.details["deficit_curve_nondecreasing"] = curve.nondecreasing();
    rep.details["deficit_comparison_passed"] = comparison_ok;
    rep.details["deficit_comparison_worst_gap"] = worst_gap;
    rep.details["v_inner"] = curve.deficit.front();
    rep.details["v_R"] = curve.v_at_R;
    rep.details["sigma_area"] = sigma.area();
    rep.details["energy"] = sol.report.total;
    return rep;
}

// ---------------------------------------------------------------- vanishing

CheckReport check_vanishing(const EnergyParams& params, const std::vector<double>& radii, const Stencil& stencil,
                            const VanishingOptions& options, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    const GridGeom g(options.width, options.height);
    const double R = params.critical_radius();
    const double band = options.band_cells * g.h();
    Json rows = Json::array();
    bool ok = true;
    for (double r : radii) {
        const BinaryMask omega = rasterize_disc({0.5 * (g.width - 1), 0.5 * (g.height - 1), r}, g);
        const SolveResult sol = minimize(omega, params, stencil);
        std::string claim = "transition";
        bool row_ok = true;
        if (r <= R - band) {
            claim = "empty";
            row_ok = sol.sigma.none();
        } else if (r >= R + band) {
            claim = "nonempty";
            row_ok = sol.sigma.area() >= options.area_fraction * omega.area();
        }
        ok = ok && row_ok;
        rows.push_back({{"radius", r},
                        {"claim", claim},
                        {"passed", row_ok},
                        {"omega_area", omega.area()},
                        {"sigma_area", sol.sigma.area()},
                        {"continuum_margin", continuum_disc_energy_margin(r, params)},
                        {"energy", sol.report.total}});
    }
    rep.passed = ok;
    rep.details = {{"R", R}, {"area_fraction", options.area_fraction}, {"band", band}, {"rows", rows}};
    return rep;
}

// ---------------------------------------------------------------- roots suite

CheckReport check_roots(std::uint64_t seed, int samples, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    Rng rng(seed);
    int sum_fail = 0, prod_fail = 0, residual_fail = 0;
    double worst_sum = 0, worst_prod = 0;
    for (int i = 0; i < samples; ++i) {
        const double R = rng.uniform(1.0, 100.0);
        const double r = rng.uniform(0.05 * R, 2.0 * R);
        const double room = 0.5 * kPi * (r - 0.5 * R) * (r - 0.5 * R);  // delta keeping the discriminant >= 0
        const double delta = rng.uniform(0.0, room);
        const XiRoots x = xi_roots(r, R, delta);
        if (!x.real) {
            ++sum_fail;
            continue;
        }
        const double sum = x.xi_minus + x.xi_plus, want_sum = R * std::sqrt(kPi);
        const double prod = x.xi_minus * x.xi_plus, want_prod = 0.5 * R * (4.0 * delta / R + 2.0 * kPi * r * (1.0 - r / R));
        const double es = std::abs(sum - want_sum) / std::max({std::abs(want_sum), std::abs(x.xi_minus) + std::abs(x.xi_plus)});
        // relative to the size of the constant term's summands, which bounds what double inputs can resolve
        const double prod_scale = 2.0 * delta + kPi * r * std::abs(R - r);
        const double ep = std::abs(prod - want_prod) / std::max({std::abs(want_prod), prod_scale});
        worst_sum = std::max(worst_sum, es);
        worst_prod = std::max(worst_prod, ep);
        if (es > 1e-12) ++sum_fail;
        if (ep > 1e-12) ++prod_fail;
        // residual of f at each root, relative to the size of its terms
        for (double xi : {x.xi_minus, x.xi_plus}) {
            const double scale = (2.0 / R) * xi * xi + 2.0 * std::sqrt(kPi) * std::abs(xi) + 4.0 * delta / R +
                                 2.0 * kPi * r + 2.0 * kPi * r * r / R;
            if (std::abs(xi_polynomial(xi, r, R, delta)) > 1e-12 * scale) ++residual_fail;
        }
    }

    // double root on the boundary of the second delta condition
    int boundary_fail = 0;
    double worst_boundary = 0;
    for (double R : {1.0, 7.5, 20.0, 64.0, 333.0}) {
        const XiRoots x = xi_roots(R, R, kPi * R * R / 8.0);
        const double want = R * std::sqrt(kPi) / 2.0;
        const double e = std::max({std::abs(x.discriminant) / (kPi * R * R / 4.0), std::abs(x.xi_minus - want) / want,
                                   std::abs(x.xi_plus - want) / want});
        worst_boundary = std::max(worst_boundary, e);
        if (!x.real || e > 1e-12) ++boundary_fail;
    }

    rep.passed = sum_fail == 0 && prod_fail == 0 && residual_fail == 0 && boundary_fail == 0;
    rep.details = {{"samples", samples},
                   {"seed", seed},
                   {"tolerance", 1e-12},
                   {"sum_failures", sum_fail},
                   {"product_failures", prod_fail},
                   {"residual_failures", residual_fail},
                   {"boundary_failures", boundary_fail},
                   {"worst_sum_rel", worst_sum},
                   {"worst_product_rel", worst_prod},
                   {"worst_boundary_rel", worst_boundary}};
    return rep;
}

// ---------------------------------------------------------------- sandwich

CheckReport check_sandwich(const BinaryMask& omega, const EnergyParams& params, const Stencil& stencil,
                           int margin_cells, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    const SandwichBounds b = sandwich_bounds(omega, params, margin_cells);
    const SolveResult sol = minimize(omega, params, stencil);
    const BinaryMask& sigma = sol.sigma;
    const CellBox all{0, 0, omega.width() - 1, omega.height() - 1};

    const BinaryMask grown = sigma | b.inner;
    const BinaryMask shrunk = sigma & b.outer;
    const EnergyDelta d_in = energy_change(sigma, grown, omega, params, stencil, Border::background, all);
    const EnergyDelta d_out = energy_change(sigma, shrunk, omega, params, stencil, Border::background, all);
    const Tolerance tol_in = set_tolerance(b.inner, params, stencil);
    const Tolerance tol_out = set_tolerance(complement(b.outer), params, stencil);

    rep.vacuous = b.inner.none() && b.outer == BinaryMask(omega.geom(), true);
    rep.passed = d_in.value <= tol_in.value && d_out.value <= tol_out.value && d_in.units >= 0 && d_out.units >= 0 &&
                 b.inner.is_subset_of(omega) && omega.is_subset_of(b.outer);
    rep.details = {{"radius_used", b.radius_used},
                   {"inner_area", b.inner.area()},
                   {"outer_area", b.outer.area()},
                   {"dE_inner", d_in.value},
                   {"dE_outer", d_out.value},
                   {"tol_inner", tolerance_json(tol_in)},
                   {"tol_outer", tolerance_json(tol_out)},
                   // observed only: set-wise containment is not claimed
                   {"inner_in_sigma", b.inner.is_subset_of(sigma)},
                   {"sigma_in_outer", sigma.is_subset_of(b.outer)}};
    return rep;
}

// ---------------------------------------------------------------- suites

namespace {

std::vector<CheckReport> suite_thm1(const VerifyConfig& c) {
    const double R = c.params.critical_radius();
    return parallel_checks(c.blob_fixtures, [&](int i) {
        FixtureParams fp;
        fp.blob_radius_scale = R;
        const Fixture fx = make_blobs(fp, c.seed + static_cast<std::uint64_t>(i));
        Theorem1Options o;
        o.trials = c.theorem1_trials;
        o.margin_cells = c.margin_cells;
        o.seed = c.seed * 7919 + static_cast<std::uint64_t>(i);
        o.algorithm = c.algorithm;
        CheckReport r = check_theorem1(fx.mask, c.params, c.stencil, o, "thm1/blob-" + padded(i));
        r.details["fixture_seed"] = c.seed + static_cast<std::uint64_t>(i);
        r.details["blob_count"] = fx.discs.size();
        return r;
    });
}

Theorem2Setup placement(int i, int n) {
    Theorem2Setup s;
    s.placement = (i % 2 == 0) ? NotchPlacement::boundary_bite : NotchPlacement::interior_hole;
    s.notch_angle = 2.0 * kPi * i / std::max(n, 1) + 0.3;
    return s;
}

std::vector<CheckReport> suite_thm2(const VerifyConfig& c) {
    return parallel_checks(c.notch_placements, [&](int i) {
        Theorem2Setup s = placement(i, c.notch_placements);
        s.margin_cells = c.margin_cells;
        return check_theorem2(c.params, c.stencil, s, "thm2/notch-" + padded(i));
    });
}

std::vector<CheckReport> suite_vanishing(const VerifyConfig& c) {
    const double R = c.params.critical_radius();
    std::vector<double> radii;
    for (double f : {0.6, 0.7, 0.8, 0.9, 0.95, 1.0, 1.05, 1.1, 1.25, 1.5}) radii.push_back(f * R);
    VanishingOptions o;
    o.area_fraction = c.vanishing_area_fraction;
    return {check_vanishing(c.params, radii, c.stencil, o, "vanishing")};
}

std::vector<CheckReport> suite_deficit(const VerifyConfig& c) {
    const double R = c.params.critical_radius();
    const Theorem2Setup base;
    const double r_hat = base.r_hat / 20.0 * R;
    const DeltaThresholds th = delta_thresholds(R, r_hat, base.epsilon, base.C, c.params.dimension_n);
    std::vector<CheckReport> out;
    struct Case {
        const char* name;
        double area;
    };
    for (const Case cs : {Case{"deficit/exact-ball", 0.0}, Case{"deficit/notch-0.5", 0.5},
                          Case{"deficit/notch-above-cond2", th.cond2 * 1.05}}) {
        FixtureParams fp;
        fp.spacing = base.spacing;
        fp.radius = r_hat;
        fp.notch_area = cs.area;
        const Fixture fx = make_notched_disc(fp);
        const double delta = difference(rasterize_disc(fx.discs.front(), fx.mask.geom()), fx.mask).area();
        const SolveResult sol = minimize(fx.mask, c.params, c.stencil);
        out.push_back(deficit_lemma_check(sol.sigma, fx.mask, c.params, c.stencil, fx.discs.front(), delta, th.effective, cs.name));
    }
    return out;
}

std::vector<CheckReport> suite_sandwich(const VerifyConfig& c) {
    const double R = c.params.critical_radius();
    FixtureParams fp;
    fp.neck_blob_radius = 1.5 * R;
    fp.neck_width = 0.5 * R;
    fp.neck_separation = 5.0 * R;
    std::vector<CheckReport> out;
    out.push_back(check_sandwich(make_neck(fp).mask, c.params, c.stencil, c.margin_cells, "sandwich/neck"));
    fp.blob_radius_scale = R;
    for (int i = 0; i < 3; ++i)
        out.push_back(check_sandwich(make_blobs(fp, c.seed + 1000 + static_cast<std::uint64_t>(i)).mask, c.params,
                                     c.stencil, c.margin_cells, "sandwich/blob-" + padded(i)));
    return out;
}

}  // namespace

SuiteResult run_suite(std::string_view suite, const VerifyConfig& config) {
    const bool all = suite == "all";
    bool known = all;
    SuiteResult res;
    auto add = [&](std::string_view name, auto fn) {
        if (!all && suite != name) return;
        known = true;
        auto part = fn(config);
        res.checks.insert(res.checks.end(), part.begin(), part.end());
    };
    add("roots", [](const VerifyConfig& c) {
        return std::vector<CheckReport>{check_roots(c.seed, c.root_samples)};
    });
    add("thm1", suite_thm1);
    add("thm2", suite_thm2);
    add("vanishing", suite_vanishing);
    add("deficit", suite_deficit);
    add("sandwich", suite_sandwich);
    if (!known) throw ConfigError("unknown verify suite '" + std::string(suite) + "'");
    std::sort(res.checks.begin(), res.checks.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    res.passed = std::all_of(res.checks.begin(), res.checks.end(), [](const CheckReport& r) { return r.passed; });
    return res;
}

Json to_json(const SuiteResult& result, const VerifyConfig& config, std::string_view suite) {
    Json checks = Json::array();
    int failed = 0, vacuous = 0, unmet = 0;
    for (const auto& c : result.checks) {
        checks.push_back(to_json(c));
        failed += !c.passed;
        vacuous += c.vacuous;
        unmet += !c.precondition_met;
    }
    return {{"tool_version", kToolVersion},
            {"suite", std::string(suite)},
            {"config", {{"lambda", config.params.lambda.str()},
                        {"R", config.params.critical_radius()},
                        {"seed", config.seed},
                        {"blob_fixtures", config.blob_fixtures},
                        {"theorem1_trials", config.theorem1_trials},
                        {"notch_placements", config.notch_placements},
                        {"root_samples", config.root_samples},
                        {"margin_cells", config.margin_cells},
                        {"vanishing_area_fraction", config.vanishing_area_fraction},
                        {"algorithm", std::string(to_string(config.algorithm))}}},
            {"stencil", to_json(config.stencil)},
            {"passed", result.passed},
            {"summary", {{"checks", result.checks.size()}, {"failed", failed}, {"vacuous", vacuous},
                         {"precondition_unmet", unmet}}},
            {"checks", checks}};
}

}  // namespace l1tv
