#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixmult {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& r);
Rational parse_fraction_string(const std::string& text);

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace mixmult
