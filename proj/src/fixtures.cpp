#include "l1tv/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "l1tv/errors.hpp"

namespace l1tv {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

FixtureKind parse_fixture_kind(std::string_view name) {
    if (name == "disc") return FixtureKind::disc;
    if (name == "notched-disc") return FixtureKind::notched_disc;
    if (name == "blobs") return FixtureKind::blobs;
    if (name == "neck") return FixtureKind::neck;
    throw ConfigError("unknown fixture kind '" + std::string(name) + "' (disc, notched-disc, blobs, neck)");
}

std::string_view to_string(FixtureKind kind) {
    switch (kind) {
        case FixtureKind::disc: return "disc";
        case FixtureKind::notched_disc: return "notched-disc";
        case FixtureKind::blobs: return "blobs";
        case FixtureKind::neck: return "neck";
    }
    return "?";
}

namespace {

GridGeom geom_of(const FixtureParams& p) { return GridGeom(p.width, p.height, p.spacing); }

DiscSpec centred(const GridGeom& g, double radius) {
    return DiscSpec{0.5 * (g.width - 1), 0.5 * (g.height - 1), radius};
}

nlohmann::json disc_json(const DiscSpec& d) {
    return {{"center_x", d.center_x}, {"center_y", d.center_y}, {"radius", d.radius}};
}

nlohmann::json base_manifest(FixtureKind kind, const GridGeom& g) {
    return {{"kind", std::string(to_string(kind))},
            {"width", g.width},
            {"height", g.height},
            {"spacing", g.spacing.str()}};
}

double angle_gap(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2 * std::numbers::pi);
    return std::min(d, 2 * std::numbers::pi - d);
}

}  // namespace

Fixture make_disc(const FixtureParams& params) {
    const GridGeom g = geom_of(params);
    if (!(params.radius > 0)) throw DomainError("disc radius must be positive");
    Fixture f;
    const DiscSpec d = centred(g, params.radius);
    f.mask = rasterize_disc(d, g);
    f.discs = {d};
    f.manifest = base_manifest(FixtureKind::disc, g);
    f.manifest["discs"] = nlohmann::json::array({disc_json(d)});
    f.manifest["notch_area"] = 0.0;
    f.manifest["area"] = f.mask.area();
    return f;
}

/* Cells are removed one at a time until the removed area is the request
 * rounded to whole cells. A bite takes the cells of a narrow sector around
 * notch_angle farthest from the centre first; a hole takes the cells nearest
 * to a point at hole_offset * radius along notch_angle. */
Fixture make_notched_disc(const FixtureParams& params) {
    const GridGeom g = geom_of(params);
    if (!(params.radius > 0)) throw DomainError("disc radius must be positive");
    if (params.notch_area < 0) throw DomainError("notch area must be nonnegative");
    const DiscSpec d = centred(g, params.radius);
    BinaryMask ball = rasterize_disc(d, g);
    const double cell = g.cell_area();
    const auto wanted = static_cast<std::size_t>(std::llround(params.notch_area / cell));
    if (static_cast<double>(wanted) * cell > ball.area() || wanted >= ball.count())
        throw DomainError("notch larger than the disc");

    struct Candidate {
        double key1, key2;
        std::size_t index;
    };
    std::vector<Candidate> cand;
    const double hx = d.center_x + params.hole_offset * (params.radius / g.h()) * std::cos(params.notch_angle);
    const double hy = d.center_y + params.hole_offset * (params.radius / g.h()) * std::sin(params.notch_angle);
    for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
            if (!ball.get(x, y)) continue;
            const double dx = x - d.center_x, dy = y - d.center_y;
            if (params.placement == NotchPlacement::boundary_bite) {
                const double gap = angle_gap(std::atan2(dy, dx), params.notch_angle);
                // sector half-width: wide enough to hold the whole notch near the rim
                if (gap > 0.35) continue;
                cand.push_back({-std::hypot(dx, dy), gap, g.index(x, y)});
            } else {
                cand.push_back({std::hypot(x - hx, y - hy), 0.0, g.index(x, y)});
            }
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
        if (a.key1 != b.key1) return a.key1 < b.key1;
        if (a.key2 != b.key2) return a.key2 < b.key2;
        return a.index < b.index;
    });
    if (cand.size() < wanted) throw DomainError("notch does not fit in the chosen sector");

    Fixture f;
    f.mask = ball;
    for (std::size_t i = 0; i < wanted; ++i) f.mask.assign(cand[i].index, false);
    f.discs = {d};
    f.notch_area = difference(ball, f.mask).area();
    f.manifest = base_manifest(FixtureKind::notched_disc, g);
    f.manifest["discs"] = nlohmann::json::array({disc_json(d)});
    f.manifest["notch_requested"] = params.notch_area;
    f.manifest["notch_area"] = f.notch_area;
    f.manifest["notch_cells"] = wanted;
    f.manifest["notch_angle"] = params.notch_angle;
    f.manifest["placement"] = params.placement == NotchPlacement::boundary_bite ? "boundary-bite" : "interior-hole";
    f.manifest["area"] = f.mask.area();
    return f;
}

Fixture make_blobs(const FixtureParams& params, std::uint64_t seed) {
    const GridGeom g = geom_of(params);
    const double R = params.blob_radius_scale;
    if (!(R > 0)) throw DomainError("blob radius scale must be positive");
    if (params.blob_min < 1 || params.blob_max < params.blob_min) throw DomainError("bad blob count range");
    Rng rng(seed);
    const int count = static_cast<int>(rng.integer(params.blob_min, params.blob_max));
    const double margin = 2 * R / g.h();  // cells kept clear at the border

    Fixture f;
    f.mask = BinaryMask(g);
    f.manifest = base_manifest(FixtureKind::blobs, g);
    f.manifest["seed"] = seed;
    f.manifest["discs"] = nlohmann::json::array();
    for (int i = 0; i < count; ++i) {
        const double r = rng.uniform(0.5 * R, 2.0 * R);
        const double rc = r / g.h();
        const double lo_x = margin + rc, hi_x = g.width - 1 - margin - rc;
        const double lo_y = margin + rc, hi_y = g.height - 1 - margin - rc;
        if (hi_x < lo_x || hi_y < lo_y) throw DomainError("grid too small for blob fixtures with this radius scale");
        const DiscSpec d{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y), r};
        paint_disc(f.mask, d, true);
        f.discs.push_back(d);
        f.manifest["discs"].push_back(disc_json(d));
    }
    f.manifest["notch_area"] = 0.0;
    f.manifest["area"] = f.mask.area();
    return f;
}

Fixture make_neck(const FixtureParams& params) {
    const GridGeom g = geom_of(params);
    const double h = g.h();
    const double cx = 0.5 * (g.width - 1), cy = 0.5 * (g.height - 1);
    const double half_sep = 0.5 * params.neck_separation / h;
    const DiscSpec left{cx - half_sep, cy, params.neck_blob_radius};
    const DiscSpec right{cx + half_sep, cy, params.neck_blob_radius};
    if (left.center_x - params.neck_blob_radius / h < 0 || right.center_x + params.neck_blob_radius / h > g.width - 1)
        throw DomainError("neck fixture does not fit in the grid");
    if (!(params.neck_width > 0)) throw DomainError("neck width must be positive");

    Fixture f;
    f.mask = BinaryMask(g);
    paint_disc(f.mask, left, true);
    paint_disc(f.mask, right, true);
    // band of rows |y - cy| < width / 2 between the centres
    const double half_w = 0.5 * params.neck_width / h;
    for (int y = 0; y < g.height; ++y) {
        if (!(std::abs(y - cy) < half_w)) continue;
        for (int x = static_cast<int>(std::ceil(left.center_x)); x <= static_cast<int>(std::floor(right.center_x)); ++x)
            f.mask.set(x, y);
    }
    f.discs = {left, right};
    f.manifest = base_manifest(FixtureKind::neck, g);
    f.manifest["discs"] = nlohmann::json::array({disc_json(left), disc_json(right)});
    f.manifest["neck_width"] = params.neck_width;
    f.manifest["neck_separation"] = params.neck_separation;
    f.manifest["notch_area"] = 0.0;
    f.manifest["area"] = f.mask.area();
    return f;
}

Fixture make_fixture(FixtureKind kind, const FixtureParams& params, std::uint64_t seed) {
    switch (kind) {
        case FixtureKind::disc: return make_disc(params);
        case FixtureKind::notched_disc: return make_notched_disc(params);
        case FixtureKind::blobs: return make_blobs(params, seed);
        case FixtureKind::neck: return make_neck(params);
    }
    throw ConfigError("unknown fixture kind");
}

}  // namespace l1tv
