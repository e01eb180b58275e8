#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ustar {

/// Exact rational number. All distances and labels use this type.
using Rational = mpq_class;

/// Parses an integer ("12", "-3"), a decimal ("0.25", "-1.5"), or a
/// fraction "p/q" with q != 0. Surrounding whitespace is ignored.
/// Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" in lowest terms otherwise.
/// parse_rational(format_rational(x)) == x for every x.
std::string format_rational(const Rational& value);

inline Rational make_rational(long num, unsigned long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ustar
