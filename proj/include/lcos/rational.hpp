#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace lcos {

// All scores in the pipeline are exact rationals; doubles appear only at the
// reporting boundary.
using Rational = boost::rational<std::int64_t>;

Rational make_rational(std::int64_t numerator, std::int64_t denominator);

// Canonical "p/q" form after reduction, e.g. "9/2", "0/1", "-3/4".
std::string to_fraction_string(const Rational& r);

// Accepts "p/q", a bare integer, or a finite decimal such as "0.35".
Rational parse_fraction(const std::string& text);

// Exact decimal expansion when the reduced denominator is 2^a * 5^b,
// otherwise falls back to the fraction form.
std::string to_decimal_string(const Rational& r);

double to_double(const Rational& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace lcos
