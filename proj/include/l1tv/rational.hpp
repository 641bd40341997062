#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace l1tv {

/* Exact positive-denominator fraction. Used for lambda and the grid spacing
 * so that every energy is an integer multiple of one common unit. */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);

    // Accepts "3", "0.125", "-2.5", "1e-1", "2.5E2" and "p/q".
    static Rational parse(std::string_view text);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool positive() const { return num > 0; }

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

}  // namespace l1tv
