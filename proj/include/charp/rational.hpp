#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

/// Exact non-float rational arithmetic for threshold exponents t = a/b.
using Rat = boost::rational<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

inline std::int64_t rat_floor(const Rat& t) { return floor_div(t.numerator(), t.denominator()); }
inline std::int64_t rat_ceil(const Rat& t) { return ceil_div(t.numerator(), t.denominator()); }

/// floor(t*s) without overflow for |num|, s within 2^31.
inline std::int64_t floor_scaled(const Rat& t, std::int64_t s) {
    __int128 num = static_cast<__int128>(t.numerator()) * s;
    __int128 den = t.denominator();
    __int128 q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) q -= 1;
    if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("floor_scaled overflow");
    return static_cast<std::int64_t>(q);
}

inline std::int64_t ceil_scaled(const Rat& t, std::int64_t s) {
    return -floor_scaled(-t, s);
}

inline std::string rat_str(const Rat& t) {
    if (t.denominator() == 1) return std::to_string(t.numerator());
    return std::to_string(t.numerator()) + "/" + std::to_string(t.denominator());
}

/// Parses "a" or "a/b" with decimal integers.
inline Rat parse_rat(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("bad rational: " + s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

} // namespace charp
