#include "mixmult/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mixmult/errors.hpp"
#include "mixmult/numeric.hpp"

namespace mixmult {

std::uint64_t ExponentVector::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool ExponentVector::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t ExponentVector::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] > std::numeric_limits<Exponent>::max() - b.exps_[i])
      throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = a.exps_[i] + b.exps_[i];
  }
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

ExponentVector colon_quotient(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

ExponentVector pow(const ExponentVector& a, unsigned n) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = std::uint64_t{a[i]} * n;
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

ExponentVector variable_power(std::size_t nvars, std::size_t var, Exponent e) {
  ExponentVector r(nvars);
  r[var] = e;
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_fraction_string(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw InputError("bad fraction '" + text + "': " + e.what());
  }
}

}  // namespace mixmult
