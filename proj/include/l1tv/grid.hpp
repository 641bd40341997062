#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "l1tv/rational.hpp"

namespace l1tv {

/* Regular W x H grid. Cell (x, y) has its center at grid coordinates (x, y)
 * and physical position (x * h, y * h). */
struct GridGeom {
    int width = 1;
    int height = 1;
    Rational spacing{1, 1};

    GridGeom() = default;
    GridGeom(int w, int h, Rational spacing_h = {1, 1});

    double h() const { return spacing.to_double(); }
    double cell_area() const { return h() * h(); }
    std::size_t cells() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
    bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    }
    double total_area() const { return static_cast<double>(cells()) * cell_area(); }

    friend bool operator==(const GridGeom&, const GridGeom&) = default;
};

// Bit-packed row-major occupancy field. Cells outside the grid are background.
class BinaryMask {
public:
    BinaryMask() = default;
    explicit BinaryMask(const GridGeom& geom, bool fill = false);

    const GridGeom& geom() const { return geom_; }
    int width() const { return geom_.width; }
    int height() const { return geom_.height; }
    std::size_t cells() const { return geom_.cells(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void assign(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= bit;
        else words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool get(int x, int y) const { return test(geom_.index(x, y)); }
    void set(int x, int y, bool v = true) { assign(geom_.index(x, y), v); }

    std::size_t count() const;
    double area() const { return static_cast<double>(count()) * geom_.cell_area(); }
    bool none() const;
    bool is_subset_of(const BinaryMask& other) const;
    // true if some set cell lies in the first/last row or column
    bool touches_border() const;

    std::span<const std::uint64_t> words() const { return words_; }

    BinaryMask& operator|=(const BinaryMask& o);
    BinaryMask& operator&=(const BinaryMask& o);
    BinaryMask& operator^=(const BinaryMask& o);
    // set difference in place: this \ o
    BinaryMask& subtract(const BinaryMask& o);

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

private:
    friend BinaryMask complement(const BinaryMask& a);
    void check_same(const BinaryMask& o) const;
    void clear_tail();

    GridGeom geom_;
    std::vector<std::uint64_t> words_;
};

BinaryMask operator|(BinaryMask a, const BinaryMask& b);
BinaryMask operator&(BinaryMask a, const BinaryMask& b);
BinaryMask operator^(BinaryMask a, const BinaryMask& b);
BinaryMask difference(BinaryMask a, const BinaryMask& b);
BinaryMask complement(const BinaryMask& a);

void require_same_geom(const GridGeom& a, const GridGeom& b);

std::size_t symmetric_difference_count(const BinaryMask& a, const BinaryMask& b);
double symmetric_difference_area(const BinaryMask& a, const BinaryMask& b);

// Euclidean disc; center in grid coordinates, radius in length units.
struct DiscSpec {
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 1.0;
};

/* Closed disc rasterization: cell (x, y) is set iff
 * (x - cx)^2 + (y - cy)^2 <= (radius / h)^2 in grid units. */
BinaryMask rasterize_disc(const DiscSpec& spec, const GridGeom& geom);
bool disc_contains_cell(const DiscSpec& spec, double h, int x, int y);
void paint_disc(BinaryMask& mask, const DiscSpec& spec, bool value = true);

struct CellBox {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // inclusive, clipped to the grid
    bool empty() const { return x1 < x0 || y1 < y0; }
};
CellBox disc_bounding_box(const DiscSpec& spec, const GridGeom& geom);

/* Area of the cells whose square [x-1/2, x+1/2] x [y-1/2, y+1/2] is cut by
 * the continuum circle, i.e. the only cells where the digital disc can
 * disagree with the continuum one. */
double disc_band_area(const DiscSpec& spec, const GridGeom& geom);

}  // namespace l1tv
