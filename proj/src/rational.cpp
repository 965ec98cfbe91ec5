#include "lcos/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "lcos/errors.hpp"

namespace lcos {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw ValidationError("rational denominator must be non-zero");
  }
  return Rational(numerator, denominator);
}

std::string to_fraction_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator() << '/' << r.denominator();
  return out.str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) {
    throw ValidationError("empty string is not a rational");
  }
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const std::int64_t num = std::stoll(text.substr(0, slash));
      const std::int64_t den = std::stoll(text.substr(slash + 1));
      return make_rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      return Rational(std::stoll(text));
    }
    // Finite decimal: shift the point away.
    const std::string head = text.substr(0, dot);
    const std::string tail = text.substr(dot + 1);
    if (tail.empty() || tail.size() > 17) {
      throw ValidationError("cannot parse rational from '" + text + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    const bool negative = !head.empty() && head[0] == '-';
    const std::int64_t whole =
        (head.empty() || head == "-" ? 0 : std::llabs(std::stoll(head)));
    const std::int64_t frac = std::stoll(tail);
    if (frac < 0) {
      throw ValidationError("cannot parse rational from '" + text + "'");
    }
    const std::int64_t num = whole * scale + frac;
    return Rational(negative ? -num : num, scale);
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse rational from '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ValidationError("rational out of range: '" + text + "'");
  }
}

std::string to_decimal_string(const Rational& r) {
  std::int64_t den = r.denominator();
  // Strip factors of 2 and 5; anything left means no finite expansion.
  std::int64_t d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return to_fraction_string(r);
  }
  const int digits = std::max(twos, fives);
  if (digits == 0) {
    return std::to_string(r.numerator());
  }
  if (digits > 17) {
    return to_fraction_string(r);
  }
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = r.numerator() * (scale / den);
  const bool negative = scaled < 0;
  std::string body = std::to_string(negative ? -scaled : scaled);
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  // Trim trailing zeros but keep at least one fractional digit.
  while (body.back() == '0' && body[body.size() - 2] != '.') body.pop_back();
  return negative ? "-" + body : body;
}

double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

}  // namespace lcos
