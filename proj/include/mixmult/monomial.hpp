#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mixmult {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1}...x_s^{a_s} stored as its exponent vector.
///
/// Arithmetic is checked: a product whose exponent would not fit in
/// `Exponent` throws std::overflow_error instead of wrapping.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : exps_(nvars, 0) {}
  explicit ExponentVector(const std::vector<Exponent>& exps) : exps_(exps.begin(), exps.end()) {}
  ExponentVector(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }
  std::vector<Exponent> to_vector() const { return {exps_.begin(), exps_.end()}; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  /// Bit j set iff x_j occurs.
  std::uint64_t support_mask() const noexcept;

  /// true iff this monomial divides `other`.
  bool divides(const ExponentVector& other) const noexcept;

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return std::equal(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }
  /// Lexicographic.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }

 private:
  boost::container::small_vector<Exponent, 4> exps_;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
/// Componentwise max(a_i - b_i, 0): the generator of (a) : (b).
ExponentVector colon_quotient(const ExponentVector& a, const ExponentVector& b);
ExponentVector pow(const ExponentVector& a, unsigned n);
/// x_var^e in `nvars` variables.
ExponentVector variable_power(std::size_t nvars, std::size_t var, Exponent e);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& m) const noexcept;
};

}  // namespace mixmult
