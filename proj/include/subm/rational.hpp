#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace subm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator/denominator, always kept
/// canonical (gcd 1, positive denominator). No floating point appears anywhere
/// on an evaluation path.
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", even for integers ("3" -> "3/1"); the file formats rely on it.
std::string format_rational(const Rational& r);

/// Parses "p/q" or a bare integer "p". Throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// 2^-n
Rational pow2_neg(unsigned n);

/// 1/n
Rational harmonic(unsigned n);

}  // namespace subm
