#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixmult/ideal.hpp"
#include "mixmult/subquotient.hpp"
#include "mixmult/text.hpp"

namespace mixmult {

class MultiIdealSystem;

/// A prime generated by a subset of the variables; the zero prime is the
/// empty subset. Variables are limited to 64.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t nvars, std::uint64_t mask);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t height() const noexcept;
  std::size_t coheight() const noexcept { return nvars_ - height(); }
  bool contains_variable(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  MonomialIdeal ideal() const { return MonomialIdeal::variables(nvars_, mask_); }
  /// Sorted variable names, the serialization used in reports.
  std::vector<std::string> names(const VariableContext& ctx) const;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;

 private:
  std::size_t nvars_ = 0;
  std::uint64_t mask_ = 0;
};

struct PrimeComponent {
  MonomialPrime prime;
  std::uint64_t local_length = 0;
  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// Minimal primes over `a`, found as the minimal vertex covers of the
/// generator supports. Sorted by mask. Throws EmptySpectrumError on the unit
/// ideal; the zero ideal gives the zero prime.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& a);

/// Krull dimension of R/a; -1 for the unit ideal.
int ring_dimension(const MonomialIdeal& a);
/// Krull dimension of N; -1 for the zero module.
int dimension(const MonomialSubquotient& n);

/// Length of N localized at `p`: invert the variables outside p and count the
/// standard monomials of the image. Throws InfiniteLengthError when p is not
/// minimal over Ann N.
std::uint64_t localization_length(const MonomialSubquotient& n, const MonomialPrime& p);

/// true iff ht((I + Ann N)/Ann N) > 0, i.e. I lies in no minimal prime of Ann N.
bool positive_height(const MonomialIdeal& i, const MonomialSubquotient& n);

/// Π: minimal primes p of Ann N with p ⊉ I and dim R/p = dim N̄, each with
/// ℓ(N_p). Throws DegenerateSystemError for degenerate systems.
std::vector<PrimeComponent> build_pi(const MultiIdealSystem& system);

}  // namespace mixmult
