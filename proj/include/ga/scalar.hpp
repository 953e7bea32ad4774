#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "ga/error.hpp"

namespace ga {

// The two coefficient rings the engine supports. Rational is always kept in
// canonical lowest terms with a positive denominator (boost normalizes on
// every operation), so equality is exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }

inline bool scalar_is_negative(const Rational& x) { return x < 0; }
inline bool scalar_is_negative(double x) { return x < 0.0; }

inline std::string scalar_to_string(const Rational& x) { return x.str(); }

/// Shortest decimal form that round-trips to the same double.
inline std::string scalar_to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

template <class S>
S scalar_from_rational(const Rational& x);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& x) { return x; }

template <>
inline double scalar_from_rational<double>(const Rational& x) {
    return x.convert_to<double>();
}

template <class S>
constexpr const char* scalar_kind_name();

template <>
constexpr const char* scalar_kind_name<Rational>() { return "rational"; }

template <>
constexpr const char* scalar_kind_name<double>() { return "f64"; }

/// Parses "a", "a/b", or a decimal such as "-2.5e3" into an exact rational.
/// Throws Error on malformed input or a zero denominator.
Rational parse_rational_literal(std::string_view text);

inline bool approx_equal(double a, double b, double rtol = 1e-9, double atol = 1e-12) {
    double diff = std::fabs(a - b);
    if (diff <= atol) return true;
    return diff <= rtol * std::fmax(std::fabs(a), std::fabs(b));
}

/// Scalar comparison used by tests and the check runner: exact for rationals,
/// tolerance-based for doubles.
inline bool scalar_close(const Rational& a, const Rational& b) { return a == b; }
inline bool scalar_close(double a, double b) { return approx_equal(a, b); }

} // namespace ga
