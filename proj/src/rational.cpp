#include "l1tv/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "l1tv/errors.hpp"

namespace l1tv {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw ConfigError("rational overflow");
    return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ConfigError("malformed number: '" + std::string(whole) + "'");
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ConfigError("malformed number: '" + std::string(whole) + "'");
        v = checked_mul(v, 10);
        if (__builtin_add_overflow(v, c - '0', &v)) throw ConfigError("rational overflow");
    }
    return v;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ConfigError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational p = parse(text.substr(0, slash));
        const Rational q = parse(text.substr(slash + 1));
        if (q.num == 0) throw ConfigError("zero denominator in '" + std::string(whole) + "'");
        return p / q;
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    int exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        const std::int64_t ev = parse_int(exp_part, whole);
        if (ev > 18) throw ConfigError("exponent out of range: '" + std::string(whole) + "'");
        exponent = static_cast<int>(exp_negative ? -ev : ev);
        text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ConfigError("malformed number: '" + std::string(whole) + "'");

    std::int64_t num = int_part.empty() ? 0 : parse_int(int_part, whole);
    std::int64_t den = 1;
    for (char c : frac_part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ConfigError("malformed number: '" + std::string(whole) + "'");
        num = checked_mul(num, 10);
        if (__builtin_add_overflow(num, c - '0', &num)) throw ConfigError("rational overflow");
        den = checked_mul(den, 10);
    }
    for (; exponent > 0; --exponent) num = checked_mul(num, 10);
    for (; exponent < 0; ++exponent) den = checked_mul(den, 10);
    return make(negative ? -num : num, den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first to keep intermediates small
    const std::int64_t g1 = std::gcd(a.num, b.den);
    const std::int64_t g2 = std::gcd(b.num, a.den);
    const std::int64_t n1 = g1 ? a.num / g1 : a.num, d2 = g1 ? b.den / g1 : b.den;
    const std::int64_t n2 = g2 ? b.num / g2 : b.num, d1 = g2 ? a.den / g2 : a.den;
    return Rational::make(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw ConfigError("division by zero rational");
    return a * Rational::make(b.den, b.num);
}

}  // namespace l1tv
