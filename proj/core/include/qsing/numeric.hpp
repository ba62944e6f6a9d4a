#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace qsing {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals,
// no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Ceiling of n/d for positive d.
inline Int ceil_div(const Int& n, const Int& d) {
    if (d <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
    Int q = n / d;
    if (q * d < n) ++q;
    return q;
}

inline long long to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace qsing
