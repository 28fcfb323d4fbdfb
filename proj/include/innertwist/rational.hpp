#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace innertwist {

/// Arbitrary-precision integers and rationals.  cpp_rational keeps values in
/// lowest terms with a positive denominator, so equality of values is
/// equality of representations — exactly what zero-tolerance checks need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The generic relational operators on cpp_rational run a continued-
/// fraction comparison whose cost dwarfs a representation check by two
/// orders of magnitude.  Values are always in lowest terms with a positive
/// denominator, so the predicates the kernel needs reduce to integer
/// comparisons on the stored parts.
inline bool rational_is_zero(const Rational& q) { return q.is_zero(); }

inline bool rational_is_one(const Rational& q) {
    return numerator(q) == 1 && denominator(q) == 1;
}

inline bool rational_equal(const Rational& a, const Rational& b) {
    return numerator(a) == numerator(b) && denominator(a) == denominator(b);
}

inline bool rational_negative(const Rational& q) {
    return numerator(q) < 0;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

} // namespace innertwist
