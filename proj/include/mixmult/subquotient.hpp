#pragma once

#include "mixmult/ideal.hpp"

namespace mixmult {

/// The module N = U/L for monomial ideals L ⊆ U.
///
/// The constructor replaces L by L ∩ U, so (U, L) with L not inside U denotes
/// (U + L)/L ≅ U/(L ∩ U).
class MonomialSubquotient {
 public:
  MonomialSubquotient() = default;
  MonomialSubquotient(MonomialIdeal upper, MonomialIdeal lower);

  /// R/L.
  static MonomialSubquotient cyclic(const MonomialIdeal& lower);

  const MonomialIdeal& upper() const noexcept { return upper_; }
  const MonomialIdeal& lower() const noexcept { return lower_; }
  std::size_t nvars() const noexcept { return upper_.nvars(); }
  bool is_zero() const { return lower_.contains(upper_); }

  friend bool operator==(const MonomialSubquotient&, const MonomialSubquotient&) = default;

 private:
  MonomialIdeal upper_;
  MonomialIdeal lower_;
};

/// Ann N = L : U.
MonomialIdeal annihilator(const MonomialSubquotient& n);

/// N / (0_N : b^∞) = U / ((L : b^∞) ∩ U).
MonomialSubquotient saturate_module(const MonomialSubquotient& n, const MonomialIdeal& b);

/// N / aN = U / (L + aU).
MonomialSubquotient quotient_by(const MonomialSubquotient& n, const MonomialIdeal& a);

/// aN = (aU + L)/L.
MonomialSubquotient scale_module(const MonomialSubquotient& n, const MonomialIdeal& a);

}  // namespace mixmult
