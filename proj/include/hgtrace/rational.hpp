// Exact integer and rational arithmetic used throughout the library.
// All combinatorial quantities are kept as reduced fractions; nothing is
// ever rounded except in the decimal rendering helpers below.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hgtrace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0; memoized per thread.
BigInt factorial(long n);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// b^e for e >= 0.
BigInt int_pow(const BigInt& base, long exp);

// b^e for any integer e; b must be nonzero when e < 0.
Rational rat_pow(const Rational& base, long exp);

// "num/den" with den always present, e.g. "9/1", "-3/8".
std::string fraction_string(const Rational& r);

enum class Rounding { down, up };

// Decimal rendering with `digits` places after the point, rounded in the
// requested direction (toward -inf / +inf).
std::string decimal_string(const Rational& r, int digits, Rounding dir);

} // namespace hgtrace
