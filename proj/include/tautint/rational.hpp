#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautint {

using Integer = boost::multiprecision::cpp_int;

/// The only scalar type in the library: an exact arbitrary-precision
/// fraction, always in lowest terms with a positive denominator (zero is
/// 0/1). All arithmetic is exact; nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den = 1) {
  if (den == 0) {
    throw std::invalid_argument("rational: denominator must be nonzero");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long long num, long long den) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "p" or "p/q" with an optional leading '-'; q must be a positive
/// integer. Anything else (decimals, exponents, signs elsewhere) is
/// rejected.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const auto read_digits = [&](Integer& out) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  Integer num;
  if (!read_digits(num)) return fail();
  Integer den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    ++pos;
    if (!read_digits(den)) return fail();
    if (pos != text.size()) return fail();
    if (den == 0) throw std::invalid_argument("fraction has zero denominator");
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

/// Lowest-terms text form: "p" when the denominator is 1, else "p/q".
/// Never produces "-0".
inline std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

inline Rational pow_rational(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::invalid_argument("pow: zero to negative power");
    return 1 / pow_rational(base, -exponent);
  }
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline Integer factorial(long n) {
  Integer out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace tautint
