#include "l1tv/perimeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "l1tv/errors.hpp"

namespace l1tv {

Border flipped(Border b) {
    switch (b) {
        case Border::background: return Border::foreground;
        case Border::foreground: return Border::background;
        case Border::interior: return Border::interior;
    }
    return b;
}

std::string_view to_string(Border b) {
    switch (b) {
        case Border::background: return "background";
        case Border::foreground: return "foreground";
        case Border::interior: return "interior";
    }
    return "?";
}

Border parse_border(std::string_view name) {
    if (name == "background") return Border::background;
    if (name == "foreground") return Border::foreground;
    if (name == "interior") return Border::interior;
    throw ConfigError("unknown border convention '" + std::string(name) + "'");
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool in_half_plane(const Offset& o) { return o.dy > 0 || (o.dy == 0 && o.dx > 0); }

void validate_offsets(std::span<const Offset> offsets) {
    if (offsets.empty()) throw ConfigError("stencil needs at least one offset");
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Offset& a = offsets[i];
        if (a.dx == 0 && a.dy == 0) throw ConfigError("stencil offset (0,0) is not allowed");
        for (std::size_t j = i + 1; j < offsets.size(); ++j) {
            const Offset& b = offsets[j];
            if (a == b) throw ConfigError("duplicate stencil offset");
            if (a.dx == -b.dx && a.dy == -b.dy)
                throw ConfigError("stencil lists both an offset and its negation");
        }
    }
}

bool is_n4(std::span<const Offset> offsets) {
    if (offsets.size() != 2) return false;
    auto axis = [](const Offset& o) { return std::abs(o.dx) + std::abs(o.dy) == 1; };
    return axis(offsets[0]) && axis(offsets[1]) && offsets[0].dx * offsets[1].dx == 0 &&
           offsets[0].dy * offsets[1].dy == 0;
}

double line_angle(const Offset& o) {
    double a = std::atan2(static_cast<double>(o.dy), static_cast<double>(o.dx));
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
}

}  // namespace

std::vector<Offset> preset_offsets(std::string_view name) {
    const std::string n = lower(name);
    std::vector<Offset> out{{1, 0}, {0, 1}};
    if (n == "n4") return out;
    out.push_back({1, 1});
    out.push_back({-1, 1});
    if (n == "n8") return out;
    out.push_back({2, 1});
    out.push_back({1, 2});
    out.push_back({-1, 2});
    out.push_back({-2, 1});
    if (n == "n16") return out;
    throw ConfigError("unknown stencil '" + std::string(name) + "' (expected n4, n8 or n16)");
}

std::vector<double> crofton_weights(std::span<const Offset> offsets, double spacing_h) {
    validate_offsets(offsets);
    if (!(spacing_h > 0)) throw DomainError("spacing must be positive");
    if (is_n4(offsets)) return std::vector<double>(offsets.size(), spacing_h);

    const std::size_t n = offsets.size();
    if (n < 2) throw ConfigError("stencil offsets are collinear; Crofton weights are undefined");
    std::vector<double> angle(n);
    for (std::size_t k = 0; k < n; ++k) angle[k] = line_angle(offsets[k]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(angle[i] - angle[j]) < 1e-12)
                throw ConfigError("stencil offsets are collinear; Crofton weights are undefined");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });

    std::vector<double> w(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t k = order[r];
        const std::size_t prev = order[(r + n - 1) % n], next = order[(r + 1) % n];
        double gap_prev = angle[k] - angle[prev];
        double gap_next = angle[next] - angle[k];
        if (gap_prev <= 0) gap_prev += std::numbers::pi;
        if (gap_next <= 0) gap_next += std::numbers::pi;
        const double dphi = 0.5 * (gap_prev + gap_next);
        const double len = std::hypot(static_cast<double>(offsets[k].dx), static_cast<double>(offsets[k].dy));
        w[k] = spacing_h * dphi / (2.0 * len);
    }
    return w;
}

Stencil::Stencil(std::string name, std::vector<Offset> offsets, std::vector<double> unit_weights)
    : name_(std::move(name)), offsets_(std::move(offsets)), unit_weights_(std::move(unit_weights)) {
    validate_offsets(offsets_);
    if (unit_weights_.size() != offsets_.size()) throw ConfigError("stencil weight count mismatch");
    for (const Offset& o : offsets_) {
        if (!in_half_plane(o)) throw ConfigError("stencil offsets must lie in the half-plane dy>0 or (dy==0, dx>0)");
        reach_ = std::max({reach_, std::abs(o.dx), std::abs(o.dy)});
    }
    units_.reserve(unit_weights_.size());
    for (double w : unit_weights_) {
        if (!(w > 0)) throw ConfigError("stencil weights must be positive");
        const auto u = static_cast<std::int64_t>(std::llround(w * static_cast<double>(kWeightDenominator)));
        units_.push_back(std::max<std::int64_t>(u, 1));
    }
}

Stencil Stencil::crofton(std::string name, std::vector<Offset> offsets) {
    auto w = crofton_weights(offsets, 1.0);
    return Stencil(std::move(name), std::move(offsets), std::move(w));
}

Stencil Stencil::preset(std::string_view name) { return crofton(lower(name), preset_offsets(name)); }

namespace {

struct Cells {
    const BinaryMask& mask;
    Border border;
    // -1 marks a pair that does not count (interior convention)
    int value(int x, int y) const {
        if (mask.geom().contains(x, y)) return mask.get(x, y) ? 1 : 0;
        switch (border) {
            case Border::background: return 0;
            case Border::foreground: return 1;
            case Border::interior: return -1;
        }
        return -1;
    }
};

bool in_box(const CellBox& b, int x, int y) { return x >= b.x0 && x <= b.x1 && y >= b.y0 && y <= b.y1; }

}  // namespace

std::int64_t perimeter_units_touching(const BinaryMask& mask, const Stencil& stencil, Border border,
                                      const CellBox& box) {
    if (box.empty()) return 0;
    const Cells cells{mask, border};
    const auto offsets = stencil.offsets();
    const auto units = stencil.units();
    std::int64_t total = 0;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        const int dx = offsets[k].dx, dy = offsets[k].dy;
        std::int64_t cut = 0;
        for (int y = box.y0; y <= box.y1; ++y) {
            for (int x = box.x0; x <= box.x1; ++x) {
                const int a = cells.value(x, y);
                // pair (p, p+v) with p in the box
                const int b = cells.value(x + dx, y + dy);
                if (b >= 0 && a != b) ++cut;
                // pair (p-v, p) whose first endpoint lies outside the box
                if (!in_box(box, x - dx, y - dy)) {
                    const int c = cells.value(x - dx, y - dy);
                    if (c >= 0 && a != c) ++cut;
                }
            }
        }
        total += cut * units[k];
    }
    return total;
}

std::int64_t perimeter_units(const BinaryMask& mask, const Stencil& stencil, Border border) {
    return perimeter_units_touching(mask, stencil, border, CellBox{0, 0, mask.width() - 1, mask.height() - 1});
}

std::int64_t flip_delta_units(const BinaryMask& mask, std::size_t i, const Stencil& stencil, Border border) {
    const Cells cells{mask, border};
    const int w = mask.width();
    const int x = static_cast<int>(i % static_cast<std::size_t>(w));
    const int y = static_cast<int>(i / static_cast<std::size_t>(w));
    const int here = mask.test(i) ? 1 : 0;
    const auto offsets = stencil.offsets();
    const auto units = stencil.units();
    std::int64_t delta = 0;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        for (int s : {1, -1}) {
            const int v = cells.value(x + s * offsets[k].dx, y + s * offsets[k].dy);
            if (v < 0) continue;
            delta += (v == here) ? units[k] : -units[k];
        }
    }
    return delta;
}

double units_to_length(std::int64_t units, double h) {
    return static_cast<double>(units) / static_cast<double>(kWeightDenominator) * h;
}

double perimeter(const BinaryMask& mask, const Stencil& stencil, Border border) {
    return units_to_length(perimeter_units(mask, stencil, border), mask.geom().h());
}

double directional_factor(const Stencil& stencil, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    double rho = 0;
    for (std::size_t k = 0; k < stencil.size(); ++k) {
        const Offset& o = stencil.offsets()[k];
        rho += stencil.weight(k, 1.0) * std::abs(o.dx * s - o.dy * c);
    }
    return rho;
}

double anisotropy_bound(const Stencil& stencil) {
    // rho is A cos t + B sin t between consecutive offset directions, so its
    // extremes sit on a breakpoint or on the single stationary point between.
    std::vector<double> breaks;
    for (const Offset& o : stencil.offsets()) breaks.push_back(line_angle(o));
    std::sort(breaks.begin(), breaks.end());
    breaks.push_back(breaks.front() + std::numbers::pi);

    double worst = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        worst = std::max(worst, std::abs(directional_factor(stencil, a) - 1.0));
        const double mid = 0.5 * (a + b);
        // coefficients of the sinusoid on (a, b), signs frozen at the midpoint
        double A = 0, B = 0;
        for (std::size_t k = 0; k < stencil.size(); ++k) {
            const Offset& o = stencil.offsets()[k];
            const double sgn = (o.dx * std::sin(mid) - o.dy * std::cos(mid)) >= 0 ? 1.0 : -1.0;
            A += -sgn * stencil.weight(k, 1.0) * o.dy;
            B += sgn * stencil.weight(k, 1.0) * o.dx;
        }
        for (double t = std::atan2(B, A) - 2 * std::numbers::pi; t < b + 2 * std::numbers::pi; t += std::numbers::pi)
            if (t > a && t < b) worst = std::max(worst, std::abs(A * std::cos(t) + B * std::sin(t) - 1.0));
    }
    return worst;
}

}  // namespace l1tv
