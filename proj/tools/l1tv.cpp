// l1tv: command-line front end for the binary L1TV minimizer and its checks.
#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "l1tv/errors.hpp"
#include "l1tv/fixtures.hpp"
#include "l1tv/io.hpp"
#include "l1tv/morphology.hpp"
#include "l1tv/oracle.hpp"
#include "l1tv/report.hpp"
#include "l1tv/solver.hpp"
#include "l1tv/verify.hpp"

using namespace l1tv;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string lambda = "0.1";
    std::string stencil = "n16";
    std::string spacing = "1";
    std::string border = "background";
    std::string algorithm = "bk";
    std::uint64_t seed = 42;
};

void add_lambda(CLI::App* cmd, Common& c) {
    cmd->add_option("--lambda", c.lambda, "fidelity weight (decimal or p/q)")->capture_default_str();
}
void add_stencil(CLI::App* cmd, Common& c) {
    cmd->add_option("--stencil", c.stencil, "n4 | n8 | n16")->capture_default_str();
}
void add_spacing(CLI::App* cmd, Common& c) {
    cmd->add_option("--spacing", c.spacing, "grid spacing h of the input image")->capture_default_str();
}

Json config_echo(const Common& c, std::string_view command) {
    return {{"command", std::string(command)},
            {"lambda", c.lambda},
            {"stencil", c.stencil},
            {"spacing", c.spacing},
            {"border", c.border},
            {"algorithm", c.algorithm},
            {"seed", c.seed}};
}

Json envelope(const Common& c, std::string_view command, const Stencil& stencil) {
    return {{"tool_version", kToolVersion}, {"config", config_echo(c, command)}, {"stencil", to_json(stencil)}};
}

Json tol_json(const Tolerance& t) {
    return {{"anisotropy", t.anisotropy}, {"perimeter", t.perimeter}, {"band_area", t.band_area}, {"tol_disc", t.value}};
}

void emit(const std::string& path, const Json& j) {
    if (path.empty() || path == "-") std::cout << j.dump(2) << "\n";
    else write_json(path, j);
}

void require_writable_dir(const std::string& path) {
    if (path.empty() || path == "-") return;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
        throw ConfigError("output directory does not exist: " + parent.string());
}

void require_input(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("input file not found: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary L1TV minimization and verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Common c;

    // minimize
    std::string in_path, out_path, report_path;
    bool largest = false, timing = false;
    auto* minimize_cmd = app.add_subcommand("minimize", "exact global minimizer by min-cut");
    minimize_cmd->add_option("--input", in_path, "PGM/PBM mask")->required();
    add_lambda(minimize_cmd, c);
    add_stencil(minimize_cmd, c);
    add_spacing(minimize_cmd, c);
    minimize_cmd->add_option("--out", out_path, "minimizer image (PGM or PBM by extension)");
    minimize_cmd->add_option("--report", report_path, "JSON report path (- for stdout)");
    minimize_cmd->add_flag("--largest", largest, "return the largest minimizer instead of the smallest");
    minimize_cmd->add_option("--algorithm", c.algorithm, "bk | push-relabel")->capture_default_str();
    minimize_cmd->add_option("--border", c.border, "background | foreground | interior")->capture_default_str();
    minimize_cmd->add_flag("--timing", timing, "include wall-clock timing in the report");

    // bounds
    std::string inner_path, outer_path;
    int margin_cells = 2;
    auto* bounds_cmd = app.add_subcommand("bounds", "inner/outer sandwich bounds by morphological opening");
    bounds_cmd->add_option("--input", in_path)->required();
    add_lambda(bounds_cmd, c);
    add_spacing(bounds_cmd, c);
    add_stencil(bounds_cmd, c);
    bounds_cmd->add_option("--out-inner", inner_path)->required();
    bounds_cmd->add_option("--out-outer", outer_path)->required();
    bounds_cmd->add_option("--margin-cells", margin_cells)->capture_default_str()->check(CLI::NonNegativeNumber);
    bounds_cmd->add_option("--report", report_path);

    // verify
    std::string suite = "all";
    VerifyConfig vc;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"thm1", "thm2", "vanishing", "deficit", "roots", "sandwich", "all"}))
        ->capture_default_str();
    add_lambda(verify_cmd, c);
    add_stencil(verify_cmd, c);
    verify_cmd->add_option("--seed", c.seed)->capture_default_str();
    verify_cmd->add_option("--report", report_path);
    verify_cmd->add_option("--blobs", vc.blob_fixtures, "blob fixtures for thm1")->capture_default_str();
    verify_cmd->add_option("--trials", vc.theorem1_trials, "balls per side per fixture")->capture_default_str();
    verify_cmd->add_option("--placements", vc.notch_placements, "notch placements for thm2")->capture_default_str();
    verify_cmd->add_option("--root-samples", vc.root_samples)->capture_default_str();
    verify_cmd->add_option("--margin-cells", vc.margin_cells)->capture_default_str();
    verify_cmd->add_option("--algorithm", c.algorithm)->capture_default_str();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "compare the solver with exhaustive enumeration (<= 20 cells)");
    oracle_cmd->add_option("--input", in_path)->required();
    add_lambda(oracle_cmd, c);
    add_stencil(oracle_cmd, c);
    add_spacing(oracle_cmd, c);
    oracle_cmd->add_option("--report", report_path);

    // energy
    std::string sigma_path;
    auto* energy_cmd = app.add_subcommand("energy", "evaluate E(sigma; omega)");
    energy_cmd->add_option("--input", in_path, "omega")->required();
    energy_cmd->add_option("--sigma", sigma_path, "candidate set (defaults to omega)");
    add_lambda(energy_cmd, c);
    add_stencil(energy_cmd, c);
    add_spacing(energy_cmd, c);
    energy_cmd->add_option("--border", c.border)->capture_default_str();
    energy_cmd->add_option("--report", report_path);

    // sweep-lambda
    std::vector<std::string> lambdas;
    auto* sweep_cmd = app.add_subcommand("sweep-lambda", "solve for an increasing list of lambda values");
    sweep_cmd->add_option("--input", in_path)->required();
    sweep_cmd->add_option("--lambdas", lambdas, "increasing positive values")->required()->delimiter(',');
    add_stencil(sweep_cmd, c);
    add_spacing(sweep_cmd, c);
    sweep_cmd->add_option("--report", report_path);

    // fixtures
    std::string kind = "disc";
    FixtureParams fp;
    std::string manifest_path;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "generate a test mask and its manifest");
    fixtures_cmd->add_option("--kind", kind)->check(CLI::IsMember({"disc", "notched-disc", "blobs", "neck"}))
        ->capture_default_str();
    fixtures_cmd->add_option("--seed", c.seed)->capture_default_str();
    fixtures_cmd->add_option("--width", fp.width)->capture_default_str();
    fixtures_cmd->add_option("--height", fp.height)->capture_default_str();
    add_spacing(fixtures_cmd, c);
    fixtures_cmd->add_option("--radius", fp.radius)->capture_default_str();
    fixtures_cmd->add_option("--notch-area", fp.notch_area)->capture_default_str();
    fixtures_cmd->add_option("--notch-angle", fp.notch_angle)->capture_default_str();
    fixtures_cmd->add_flag("--interior-hole", [&fp](std::int64_t) { fp.placement = NotchPlacement::interior_hole; });
    fixtures_cmd->add_option("--blob-scale", fp.blob_radius_scale)->capture_default_str();
    fixtures_cmd->add_option("--neck-width", fp.neck_width)->capture_default_str();
    fixtures_cmd->add_option("--out", out_path)->required();
    fixtures_cmd->add_option("--manifest", manifest_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const Rational spacing = Rational::parse(c.spacing);
        if (!spacing.positive()) throw ConfigError("spacing must be positive");

        if (*minimize_cmd) {
            require_input(in_path);
            require_writable_dir(out_path);
            require_writable_dir(report_path);
            const EnergyParams params = EnergyParams::parse(c.lambda);
            const Stencil st = Stencil::preset(c.stencil);
            SolveOptions so;
            so.algorithm = parse_flow_algorithm(c.algorithm);
            so.border = parse_border(c.border);
            so.canonical = largest ? Canonical::largest : Canonical::smallest;
            const BinaryMask omega = read_mask(in_path, spacing);
            const SolveResult r = minimize(omega, params, st, so);
            if (!out_path.empty()) write_mask(out_path, r.sigma, format_for_path(out_path));
            Json j = envelope(c, "minimize", st);
            j["config"]["input"] = in_path;
            j["config"]["canonical"] = largest ? "largest" : "smallest";
            j["result"] = to_json(r, timing);
            j["tol_disc"] = tol_json(set_tolerance(r.sigma, params, st));
            if (!report_path.empty()) emit(report_path, j);
            else std::cout << "energy " << r.report.total << "  area " << r.sigma.area() << "\n";
            return 0;
        }

        if (*bounds_cmd) {
            require_input(in_path);
            require_writable_dir(inner_path);
            require_writable_dir(outer_path);
            const EnergyParams params = EnergyParams::parse(c.lambda);
            const Stencil st = Stencil::preset(c.stencil);
            const BinaryMask omega = read_mask(in_path, spacing);
            const SandwichBounds b = sandwich_bounds(omega, params, margin_cells);
            write_mask(inner_path, b.inner, format_for_path(inner_path));
            write_mask(outer_path, b.outer, format_for_path(outer_path));
            Json j = envelope(c, "bounds", st);
            j["config"]["margin_cells"] = margin_cells;
            j["R"] = b.radius_R;
            j["radius_used"] = b.radius_used;
            j["inner_area"] = b.inner.area();
            j["outer_area"] = b.outer.area();
            j["tol_disc"] = {{"inner", tol_json(set_tolerance(b.inner, params, st))},
                             {"outer_complement", tol_json(set_tolerance(complement(b.outer), params, st))}};
            if (!report_path.empty()) emit(report_path, j);
            return 0;
        }

        if (*verify_cmd) {
            require_writable_dir(report_path);
            vc.params = EnergyParams::parse(c.lambda);
            vc.stencil = Stencil::preset(c.stencil);
            vc.seed = c.seed;
            vc.algorithm = parse_flow_algorithm(c.algorithm);
            const SuiteResult res = run_suite(suite, vc);
            Json j = to_json(res, vc, suite);
            if (!report_path.empty()) emit(report_path, j);
            std::ostream& log = report_path == "-" ? std::cerr : std::cout;
            for (const auto& chk : res.checks) {
                log << (chk.passed ? "PASS " : "FAIL ") << chk.id;
                if (!chk.precondition_met) log << " (precondition unmet)";
                if (chk.vacuous) log << " (vacuous)";
                log << "\n";
            }
            return res.passed ? 0 : kExitFail;
        }

        if (*oracle_cmd) {
            require_input(in_path);
            require_writable_dir(report_path);
            const EnergyParams params = EnergyParams::parse(c.lambda);
            const Stencil st = Stencil::preset(c.stencil);
            const BinaryMask omega = read_mask(in_path, spacing);
            if (omega.cells() > kOracleMaxCells)
                throw SizeLimitError("oracle supports at most " + std::to_string(kOracleMaxCells) + " cells");
            const OptimalityMatch m = verify_optimality_small(omega, params, st);
            Json j = envelope(c, "oracle", st);
            j["oracle_min_energy"] = m.oracle.min_energy;
            j["oracle_min_energy_units"] = m.oracle.min_energy_units;
            j["minimizer_count"] = m.oracle.minimizers.size();
            j["enumerated"] = m.oracle.enumerated;
            j["solver"] = to_json(m.smallest, false);
            j["energies_equal"] = m.energies_equal;
            j["smallest_is_listed"] = m.smallest_is_listed;
            j["smallest_is_intersection"] = m.smallest_is_intersection;
            j["largest_is_union"] = m.largest_is_union;
            j["tol_disc"] = tol_json(set_tolerance(m.smallest.sigma, params, st));
            const bool ok = m.energies_equal && m.smallest_is_listed && m.smallest_is_intersection && m.largest_is_union;
            j["passed"] = ok;
            emit(report_path, j);
            return ok ? 0 : kExitFail;
        }

        if (*energy_cmd) {
            require_input(in_path);
            if (!sigma_path.empty()) require_input(sigma_path);
            require_writable_dir(report_path);
            const EnergyParams params = EnergyParams::parse(c.lambda);
            const Stencil st = Stencil::preset(c.stencil);
            const BinaryMask omega = read_mask(in_path, spacing);
            const BinaryMask sigma = sigma_path.empty() ? omega : read_mask(sigma_path, spacing);
            const EnergyReport e = energy(sigma, omega, params, st, parse_border(c.border));
            Json j = envelope(c, "energy", st);
            j["energy"] = to_json(e);
            j["tol_disc"] = tol_json(set_tolerance(sigma, params, st));
            emit(report_path, j);
            return 0;
        }

        if (*sweep_cmd) {
            require_input(in_path);
            require_writable_dir(report_path);
            std::vector<Rational> ls;
            for (const auto& s : lambdas) ls.push_back(Rational::parse(s));
            const Stencil st = Stencil::preset(c.stencil);
            const BinaryMask omega = read_mask(in_path, spacing);
            const SweepResult sw = sweep_lambda(omega, ls, st);
            Json j = envelope(c, "sweep-lambda", st);
            j["config"]["lambdas"] = lambdas;
            j["sweep"] = to_json(sw);
            Json tols = Json::array();
            for (const auto& e : sw.entries) tols.push_back(tol_json(set_tolerance(e.result.sigma, EnergyParams(e.lambda), st)));
            j["tol_disc"] = tols;
            emit(report_path, j);
            return 0;
        }

        if (*fixtures_cmd) {
            require_writable_dir(out_path);
            require_writable_dir(manifest_path);
            fp.spacing = spacing;
            const Fixture fx = make_fixture(parse_fixture_kind(kind), fp, c.seed);
            write_mask(out_path, fx.mask, format_for_path(out_path));
            Json m = fx.manifest;
            m["tool_version"] = kToolVersion;
            m["config"] = config_echo(c, "fixtures");
            if (!manifest_path.empty()) emit(manifest_path, m);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
