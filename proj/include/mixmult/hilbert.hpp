#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mixmult/ideal.hpp"
#include "mixmult/numeric.hpp"
#include "mixmult/polynomial.hpp"
#include "mixmult/subquotient.hpp"
#include "mixmult/text.hpp"

namespace mixmult {

/// The input of every multiplicity computation: an m-primary J, ideals
/// I_1..I_d (d may be 0) and a module N, all over one variable context.
class MultiIdealSystem {
 public:
  /// Throws InputError when the contexts disagree or J is not m-primary.
  MultiIdealSystem(VariableContext ctx, MonomialIdeal j, std::vector<MonomialIdeal> ideals,
                   MonomialSubquotient n);

  const VariableContext& context() const noexcept { return ctx_; }
  const MonomialIdeal& j() const noexcept { return j_; }
  const std::vector<MonomialIdeal>& ideals() const noexcept { return ideals_; }
  const MonomialSubquotient& module() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return ctx_.size(); }
  std::size_t d() const noexcept { return ideals_.size(); }

  /// I = I_1...I_d; the unit ideal when d = 0.
  const MonomialIdeal& product() const noexcept { return product_; }
  /// N̄ = N/(0_N : I^∞).
  MonomialSubquotient saturated_module() const;
  /// I ⊆ √Ann N, or N̄ = 0.
  bool is_degenerate() const;
  /// Throws DegenerateSystemError when is_degenerate().
  void require_non_degenerate() const;

  MultiIdealSystem with_module(MonomialSubquotient n) const;
  MultiIdealSystem with_ideals(std::vector<MonomialIdeal> ideals) const;

  friend bool operator==(const MultiIdealSystem& a, const MultiIdealSystem& b) {
    return a.ctx_ == b.ctx_ && a.j_ == b.j_ && a.ideals_ == b.ideals_ && a.n_ == b.n_;
  }

 private:
  VariableContext ctx_;
  MonomialIdeal j_;
  std::vector<MonomialIdeal> ideals_;
  MonomialSubquotient n_;
  MonomialIdeal product_;
};

using GradeIndex = std::vector<unsigned>;  // (n_0, n_1, ..., n_d)

/// Lengths of the graded pieces J^{n0} I^n N / J^{n0+1} I^n N.
class FiberLengths {
 public:
  explicit FiberLengths(const MultiIdealSystem& system);
  ~FiberLengths();
  FiberLengths(const FiberLengths&) = delete;
  FiberLengths& operator=(const FiberLengths&) = delete;

  std::uint64_t at(const GradeIndex& n);
  /// J^{n0} I_1^{n1}...I_d^{nd} U, memoized.
  const MonomialIdeal& upper_ideal(const GradeIndex& n);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// ℓ(J^{n0} I^n N / J^{n0+1} I^n N).
std::uint64_t graded_piece_length(const MultiIdealSystem& system, unsigned n0,
                                  const std::vector<unsigned>& n);

struct LengthTable {
  unsigned offset = 0;
  std::map<GradeIndex, std::uint64_t> entries;
};

/// Lengths over the box [offset, offset + side)^{d+1}.
LengthTable length_table(const MultiIdealSystem& system, unsigned offset, unsigned side);

struct FitOptions {
  unsigned initial_offset = 1;
  unsigned offset_cap = 64;
  friend bool operator==(const FitOptions&, const FitOptions&) = default;
};

/// Mixed multiplicities keyed by (k0, k1, ..., kd).
using MixedTable = std::map<GradeIndex, Integer>;

struct BhattacharyaResult {
  /// Hilbert polynomial of the fiber module in n0..nd.
  ExactPolynomial polynomial;
  /// dim N̄.
  int q = 0;
  /// Homogeneous part of total degree q - 1.
  ExactPolynomial leading_form;
  MixedTable mixed;
  Integer tilde_e;
  /// Offset at which the fit stabilized.
  unsigned offset = 0;
  /// The fitting and validation samples.
  LengthTable fit_samples;
  LengthTable validation_samples;

  /// Mixed multiplicity of type k; 0 when |k| > q - 1. Throws InputError
  /// when |k| < q - 1 or k has the wrong arity.
  Integer mixed_at(const GradeIndex& k) const;
};

/// Fits the Hilbert polynomial of F_J(J, I; N) and extracts its mixed
/// multiplicities. Samples a tensor grid of side q at offset b, requires all
/// coefficients of total degree ≥ q to vanish and the fit to reproduce a
/// grid of side q + 1 at b + q; otherwise doubles b up to the cap.
BhattacharyaResult fit_bhattacharya(const MultiIdealSystem& system, const FitOptions& options = {});

/// e(J; N) for m-primary J.
Integer samuel_multiplicity(const VariableContext& ctx, const MonomialIdeal& j,
                            const MonomialSubquotient& n, const FitOptions& options = {});

/// Multiplicity of the Rees module ℜ(I; N̄) with respect to (J, ℜ_+),
/// evaluated as the sum of the mixed multiplicities of the fiber module.
Integer rees_multiplicity(const MultiIdealSystem& system, const FitOptions& options = {});

/// Solves for the polynomial of per-variable degree < side through the
/// tensor grid offset + [0, side)^nvars, by fraction-free elimination.
ExactPolynomial interpolate_tensor_grid(std::size_t nvars, unsigned offset, unsigned side,
                                        const std::map<GradeIndex, std::uint64_t>& values);

}  // namespace mixmult
