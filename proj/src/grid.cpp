#include "l1tv/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "l1tv/errors.hpp"

namespace l1tv {

GridGeom::GridGeom(int w, int h, Rational spacing_h) : width(w), height(h), spacing(spacing_h) {
    if (w < 1 || h < 1)
        throw DimensionError("grid must be at least 1x1, got " + std::to_string(w) + "x" + std::to_string(h));
    if (!spacing.positive()) throw DomainError("grid spacing must be positive");
}

BinaryMask::BinaryMask(const GridGeom& geom, bool fill)
    : geom_(geom), words_((geom.cells() + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    clear_tail();
}

void BinaryMask::clear_tail() {
    const std::size_t rem = geom_.cells() & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

void BinaryMask::check_same(const BinaryMask& o) const { require_same_geom(geom_, o.geom_); }

void require_same_geom(const GridGeom& a, const GridGeom& b) {
    if (!(a == b))
        throw DimensionError("geometry mismatch: " + std::to_string(a.width) + "x" + std::to_string(a.height) +
                             " (h=" + a.spacing.str() + ") vs " + std::to_string(b.width) + "x" +
                             std::to_string(b.height) + " (h=" + b.spacing.str() + ")");
}

std::size_t BinaryMask::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BinaryMask::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BinaryMask::is_subset_of(const BinaryMask& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool BinaryMask::touches_border() const {
    const int w = width(), h = height();
    for (int x = 0; x < w; ++x)
        if (get(x, 0) || get(x, h - 1)) return true;
    for (int y = 0; y < h; ++y)
        if (get(0, y) || get(w - 1, y)) return true;
    return false;
}

BinaryMask& BinaryMask::operator|=(const BinaryMask& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

BinaryMask& BinaryMask::operator&=(const BinaryMask& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

BinaryMask& BinaryMask::operator^=(const BinaryMask& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BinaryMask& BinaryMask::subtract(const BinaryMask& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

BinaryMask operator|(BinaryMask a, const BinaryMask& b) { return a |= b; }
BinaryMask operator&(BinaryMask a, const BinaryMask& b) { return a &= b; }
BinaryMask operator^(BinaryMask a, const BinaryMask& b) { return a ^= b; }
BinaryMask difference(BinaryMask a, const BinaryMask& b) { return a.subtract(b); }

BinaryMask complement(const BinaryMask& a) {
    BinaryMask out = a;
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
}

std::size_t symmetric_difference_count(const BinaryMask& a, const BinaryMask& b) {
    require_same_geom(a.geom(), b.geom());
    std::size_t n = 0;
    const auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) n += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    return n;
}

double symmetric_difference_area(const BinaryMask& a, const BinaryMask& b) {
    return static_cast<double>(symmetric_difference_count(a, b)) * a.geom().cell_area();
}

namespace {

void require_radius(const DiscSpec& spec) {
    if (!(spec.radius > 0.0)) throw DomainError("disc radius must be positive");
}

}  // namespace

bool disc_contains_cell(const DiscSpec& spec, double h, int x, int y) {
    const double rr = (spec.radius / h) * (spec.radius / h);
    const double dx = static_cast<double>(x) - spec.center_x;
    const double dy = static_cast<double>(y) - spec.center_y;
    return dx * dx + dy * dy <= rr;
}

CellBox disc_bounding_box(const DiscSpec& spec, const GridGeom& geom) {
    const double rc = spec.radius / geom.h();
    CellBox box;
    box.x0 = static_cast<int>(std::max(0.0, std::floor(spec.center_x - rc)));
    box.y0 = static_cast<int>(std::max(0.0, std::floor(spec.center_y - rc)));
    box.x1 = static_cast<int>(std::min(static_cast<double>(geom.width - 1), std::ceil(spec.center_x + rc)));
    box.y1 = static_cast<int>(std::min(static_cast<double>(geom.height - 1), std::ceil(spec.center_y + rc)));
    if (spec.center_x + rc < 0.0 || spec.center_y + rc < 0.0 || spec.center_x - rc > geom.width - 1 ||
        spec.center_y - rc > geom.height - 1)
        box = CellBox{};
    return box;
}

void paint_disc(BinaryMask& mask, const DiscSpec& spec, bool value) {
    require_radius(spec);
    const CellBox box = disc_bounding_box(spec, mask.geom());
    const double h = mask.geom().h();
    for (int y = box.y0; y <= box.y1; ++y)
        for (int x = box.x0; x <= box.x1; ++x)
            if (disc_contains_cell(spec, h, x, y)) mask.set(x, y, value);
}

BinaryMask rasterize_disc(const DiscSpec& spec, const GridGeom& geom) {
    BinaryMask out(geom);
    paint_disc(out, spec, true);
    return out;
}

double disc_band_area(const DiscSpec& spec, const GridGeom& geom) {
    require_radius(spec);
    const double rc = spec.radius / geom.h();
    DiscSpec grown = spec;
    grown.radius = spec.radius + geom.h();
    const CellBox box = disc_bounding_box(grown, geom);
    std::size_t n = 0;
    for (int y = box.y0; y <= box.y1; ++y) {
        for (int x = box.x0; x <= box.x1; ++x) {
            const double lx = x - 0.5 - spec.center_x, hx = x + 0.5 - spec.center_x;
            const double ly = y - 0.5 - spec.center_y, hy = y + 0.5 - spec.center_y;
            const double nx = (lx > 0) ? lx : (hx < 0 ? hx : 0.0);
            const double ny = (ly > 0) ? ly : (hy < 0 ? hy : 0.0);
            const double fx = std::max(std::abs(lx), std::abs(hx));
            const double fy = std::max(std::abs(ly), std::abs(hy));
            const double near2 = nx * nx + ny * ny, far2 = fx * fx + fy * fy;
            if (near2 < rc * rc && rc * rc < far2) ++n;
        }
    }
    return static_cast<double>(n) * geom.cell_area();
}

}  // namespace l1tv
