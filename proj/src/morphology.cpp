#include "l1tv/morphology.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Extended {
    int pad = 0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    std::size_t at(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    }
};

Extended extend(const BinaryMask& mask, int pad, bool outside_value) {
    Extended e;
    e.pad = pad;
    e.width = mask.width() + 2 * pad;
    e.height = mask.height() + 2 * pad;
    e.bits.assign(static_cast<std::size_t>(e.width) * static_cast<std::size_t>(e.height), outside_value ? 1 : 0);
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x) e.bits[e.at(x + pad, y + pad)] = mask.get(x, y) ? 1 : 0;
    return e;
}

BinaryMask crop(const Extended& e, const GridGeom& geom) {
    BinaryMask out(geom);
    for (int y = 0; y < geom.height; ++y)
        for (int x = 0; x < geom.width; ++x)
            if (e.bits[e.at(x + e.pad, y + e.pad)]) out.set(x, y);
    return out;
}

// Keep cells whose nearest zero cell is farther than k.
void erode_in_place(Extended& e, std::int64_t k) {
    std::vector<std::uint8_t> zeros(e.bits.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i] = !e.bits[i];
    const auto d2 = squared_distance_transform(zeros, e.width, e.height);
    for (std::size_t i = 0; i < d2.size(); ++i) e.bits[i] = (d2[i] < 0 || d2[i] > k) ? 1 : 0;
}

// Set cells within k of a set cell.
void dilate_in_place(Extended& e, std::int64_t k) {
    const auto d2 = squared_distance_transform(e.bits, e.width, e.height);
    for (std::size_t i = 0; i < d2.size(); ++i) e.bits[i] = (d2[i] >= 0 && d2[i] <= k) ? 1 : 0;
}

int pad_for(double radius, double h, Border outside) {
    if (outside != Border::foreground) return 1;
    return static_cast<int>(std::ceil(radius / h)) + 2;
}

void require_radius(double radius) {
    if (!(radius >= 0)) throw DomainError("structuring radius must be nonnegative");
}

}  // namespace

std::vector<std::int64_t> squared_distance_transform(const std::vector<std::uint8_t>& seeds, int width, int height) {
    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (seeds.size() != n) throw DimensionError("distance transform input size mismatch");
    const std::int64_t inf = static_cast<std::int64_t>(width) + height + 1;

    // column pass: vertical distance to the nearest seed
    std::vector<std::int64_t> g(n);
    auto at = [width](int x, int y) {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    };
    for (int x = 0; x < width; ++x) {
        g[at(x, 0)] = seeds[at(x, 0)] ? 0 : inf;
        for (int y = 1; y < height; ++y) g[at(x, y)] = seeds[at(x, y)] ? 0 : std::min(inf, g[at(x, y - 1)] + 1);
        for (int y = height - 2; y >= 0; --y)
            if (g[at(x, y + 1)] < g[at(x, y)]) g[at(x, y)] = g[at(x, y + 1)] + 1;
    }

    // row pass: lower envelope of the parabolas (x - i)^2 + g(i)^2
    std::vector<std::int64_t> out(n);
    std::vector<int> s(static_cast<std::size_t>(width)), t(static_cast<std::size_t>(width));
    const std::int64_t none = inf * inf;
    for (int y = 0; y < height; ++y) {
        const std::int64_t* row = &g[at(0, y)];
        auto f = [&](std::int64_t x, int i) { return (x - i) * (x - i) + row[i] * row[i]; };
        auto sep = [&](int i, int u) {
            return floor_div(static_cast<std::int64_t>(u) * u - static_cast<std::int64_t>(i) * i + row[u] * row[u] -
                                 row[i] * row[i],
                             2 * static_cast<std::int64_t>(u - i));
        };
        int q = 0;
        s[0] = 0;
        t[0] = 0;
        for (int u = 1; u < width; ++u) {
            while (q >= 0 && f(t[static_cast<std::size_t>(q)], s[static_cast<std::size_t>(q)]) > f(t[static_cast<std::size_t>(q)], u)) --q;
            if (q < 0) {
                q = 0;
                s[0] = u;
            } else {
                const std::int64_t w = 1 + sep(s[static_cast<std::size_t>(q)], u);
                if (w < width) {
                    ++q;
                    s[static_cast<std::size_t>(q)] = u;
                    t[static_cast<std::size_t>(q)] = static_cast<int>(w);
                }
            }
        }
        for (int u = width - 1; u >= 0; --u) {
            const std::int64_t d = f(u, s[static_cast<std::size_t>(q)]);
            out[at(u, y)] = d >= none ? -1 : d;
            if (u == t[static_cast<std::size_t>(q)]) --q;
        }
    }
    return out;
}

std::int64_t disc_squared_extent(double radius, double h) {
    const double rr = (radius / h) * (radius / h);
    return static_cast<std::int64_t>(std::floor(rr));
}

BinaryMask erode(const BinaryMask& mask, double radius, Border outside) {
    require_radius(radius);
    const double h = mask.geom().h();
    Extended e = extend(mask, pad_for(radius, h, outside), outside == Border::foreground);
    erode_in_place(e, disc_squared_extent(radius, h));
    return crop(e, mask.geom());
}

BinaryMask dilate(const BinaryMask& mask, double radius, Border outside) {
    require_radius(radius);
    const double h = mask.geom().h();
    Extended e = extend(mask, outside == Border::foreground ? pad_for(radius, h, outside) : 0,
                        outside == Border::foreground);
    dilate_in_place(e, disc_squared_extent(radius, h));
    return crop(e, mask.geom());
}

BinaryMask opening(const BinaryMask& mask, double radius, Border outside) {
    require_radius(radius);
    const double h = mask.geom().h();
    const std::int64_t k = disc_squared_extent(radius, h);
    Extended e = extend(mask, pad_for(radius, h, outside), outside == Border::foreground);
    erode_in_place(e, k);
    dilate_in_place(e, k);
    return crop(e, mask.geom());
}

SandwichBounds sandwich_bounds(const BinaryMask& omega, const EnergyParams& params, int margin_cells) {
    if (margin_cells < 0) throw DomainError("margin must be nonnegative");
    SandwichBounds b;
    b.radius_R = params.critical_radius();
    b.radius_used = b.radius_R + margin_cells * omega.geom().h();
    b.inner = opening(omega, b.radius_used, Border::background);
    b.outer = complement(opening(complement(omega), b.radius_used, Border::foreground));
    if (!b.inner.is_subset_of(b.outer)) throw std::logic_error("sandwich bounds are not nested");
    return b;
}

}  // namespace l1tv
