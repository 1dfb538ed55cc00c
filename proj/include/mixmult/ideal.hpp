#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mixmult/monomial.hpp"

namespace mixmult {

/// A monomial ideal of k[x_1..x_s], held by its minimal generators.
///
/// The generator list is always minimal (no generator divides another) and
/// sorted lexicographically, so two ideals are equal iff their generator
/// lists are. The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Normalizes `gens`; throws InputError on a length mismatch.
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal principal(const ExponentVector& m);
  /// The monomial prime generated by the variables whose bits are set.
  static MonomialIdeal variables(std::size_t nvars, std::uint64_t mask);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const ExponentVector& m) const;
  /// this ⊇ other.
  bool contains(const MonomialIdeal& other) const;

  std::uint64_t max_generator_degree() const noexcept;
  /// Largest exponent of variable `var` over all generators.
  Exponent max_exponent(std::size_t var) const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Minimal generating set of the ideal generated by `gens`.
MonomialIdeal normalize(std::size_t nvars, std::vector<ExponentVector> gens);

bool membership(const ExponentVector& m, const MonomialIdeal& a);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned n);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// a · (m).
MonomialIdeal multiply(const MonomialIdeal& a, const ExponentVector& m);

/// a : (m).
MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& m);
/// a : b. Throws InputError when b is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : b^∞, iterated colon until the ascending chain stops.
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal radical(const MonomialIdeal& a);
/// true iff m ∈ √a.
bool in_radical(const ExponentVector& m, const MonomialIdeal& a);
/// true iff b ⊆ √a.
bool radical_contains(const MonomialIdeal& a, const MonomialIdeal& b);

/// Smallest c such that x_i^c ∈ j for every variable, or nullopt when j is
/// not primary to the maximal ideal.
std::optional<Exponent> primarity_exponent(const MonomialIdeal& j);
inline bool is_maximal_primary(const MonomialIdeal& j) { return primarity_exponent(j).has_value(); }

/// Number of monomials m with m ∈ p, m ∉ q, m ∉ l.
///
/// Throws NonArtinianError when that set is infinite. The count is exact:
/// membership along the last variable is a threshold, and thresholds are
/// constant beyond the largest generator exponent in every other variable,
/// so a finite box decides both the count and its finiteness.
std::uint64_t monomials_between(const MonomialIdeal& p, const MonomialIdeal& q,
                                const MonomialIdeal& l);

/// Monomials of total degree ≤ bound in `nvars` variables, graded then lex.
std::vector<ExponentVector> monomials_up_to_degree(std::size_t nvars, unsigned bound);

}  // namespace mixmult
