#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dstrat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q", and decimal forms such as "-0.6" or "1.5e-3"; the
// decimal is converted exactly (0.6 becomes 3/5). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Exact rational for the shortest decimal that round-trips to `value`, so
// 0.6 maps to 3/5 rather than the nearest binary fraction.
Rational rational_from_double(double value);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

// C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0, and C(-1, 0) = 1 so that the
// empty symmetric power of an empty space counts as a single point.
BigInt binomial(long n, long k);

}  // namespace dstrat
