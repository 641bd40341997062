#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "l1tv/energy.hpp"
#include "l1tv/grid.hpp"

namespace l1tv {

// Seeded generator with a platform-independent mapping to doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();  // splitmix64
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1p-53; }
    // uniform integer in [lo, hi]
    std::int64_t integer(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

enum class FixtureKind { disc, notched_disc, blobs, neck };
FixtureKind parse_fixture_kind(std::string_view name);
std::string_view to_string(FixtureKind kind);

enum class NotchPlacement { boundary_bite, interior_hole };

struct FixtureParams {
    int width = 256;
    int height = 256;
    Rational spacing{1, 1};
    double radius = 20;         // disc / notched disc radius (r-hat), length units
    double notch_area = 0;      // requested |B_rhat \ Omega|
    NotchPlacement placement = NotchPlacement::boundary_bite;
    double notch_angle = 0;     // radians, direction of the notch from the centre
    double hole_offset = 0.5;   // interior hole centre at this fraction of the radius
    double blob_radius_scale = 20;  // blobs: radii drawn from [0.5, 2] x this (R)
    int blob_min = 3;
    int blob_max = 8;
    double neck_blob_radius = 30;
    double neck_width = 10;
    double neck_separation = 100;   // centre-to-centre distance
};

struct Fixture {
    BinaryMask mask;
    nlohmann::json manifest;
    // disc geometry the fixture was built around (first entry = reference ball)
    std::vector<DiscSpec> discs;
    double notch_area = 0;  // achieved |B_rhat \ Omega|
};

Fixture make_fixture(FixtureKind kind, const FixtureParams& params, std::uint64_t seed);

// Individual builders; the centre defaults to the middle of the grid.
Fixture make_disc(const FixtureParams& params);
Fixture make_notched_disc(const FixtureParams& params);
Fixture make_blobs(const FixtureParams& params, std::uint64_t seed);
Fixture make_neck(const FixtureParams& params);

}  // namespace l1tv
