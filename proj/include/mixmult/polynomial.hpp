#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mixmult/numeric.hpp"

namespace mixmult {

/// Sparse multivariate polynomial with exact rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class ExactPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  ExactPolynomial() = default;
  explicit ExactPolynomial(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const;
  /// Adds `c` to the coefficient of `e`.
  void add_term(const Exponents& e, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  ExactPolynomial homogeneous_part(unsigned degree) const;
  Rational evaluate(std::span<const Integer> point) const;
  Rational evaluate(std::span<const unsigned> point) const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Human-readable form in variables n0, n1, ...
std::string to_string(const ExactPolynomial& p);

}  // namespace mixmult
