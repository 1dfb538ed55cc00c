#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/hilbert.hpp"

namespace mixmult {

/// A monomial x ∈ I_i offered as a weak-(FC) element; `index` is 1-based.
struct ElementCandidate {
  ExponentVector monomial;
  std::size_t index = 1;
  friend bool operator==(const ElementCandidate&, const ElementCandidate&) = default;
};

enum class TriState { holds, fails, inconclusive };
enum class FcClass { none, weak_fc, fc, inconclusive };

const char* to_string(TriState t);
const char* to_string(FcClass c);

struct WindowOptions {
  /// Side of each test window; two consecutive windows are examined.
  unsigned side = 3;
  /// Window start; defaults to max generator degree + primarity exponent of J.
  std::optional<unsigned> start;
  friend bool operator==(const WindowOptions&, const WindowOptions&) = default;
};

struct FcReport {
  bool cond_i = false;
  TriState cond_ii = TriState::inconclusive;
  bool cond_iii = false;
  /// Window bounds: [window_start, window_start + 2 * side) on every axis.
  unsigned window_start = 0;
  unsigned window_side = 0;
  bool first_window_holds = false;
  bool second_window_holds = false;
  int saturated_dim = 0;
  int quotient_dim = 0;
  FcClass classification = FcClass::none;
};

/// Default start of the stability windows for `system`.
unsigned default_window_start(const MultiIdealSystem& system);

/// Checks x against the three weak-(FC)/(FC) conditions.
///
/// (i)   (L : x) ∩ U ⊆ (L : I^∞) ∩ U, exactly.
/// (ii)  (xU + L) ∩ (J^{n0} I^{n+e_i} U + L) = x J^{n0} I^n U + L on two
///       consecutive windows of the (n0, n) grid; both hold → holds, both
///       fail → fails, otherwise inconclusive.
/// (iii) dim N/(xN : I^∞) = dim N̄ - 1, exactly.
/// Throws InputError when x ∉ I_i, and DegenerateSystemError for degenerate N.
FcReport check_weak_fc(const MultiIdealSystem& system, const ElementCandidate& cand,
                       const WindowOptions& window = {});

/// (J, I, N/xN).
MultiIdealSystem quotient_system(const MultiIdealSystem& system, const ElementCandidate& cand);

/// (J, I without I_i, I_i^v N).
MultiIdealSystem drop_index_system(const MultiIdealSystem& system, std::size_t index, unsigned v);

/// ℓ of the piece of M / x̄M at grade m, with M = F_J(J, I; N):
/// J^{m0} I^m N / (J^{m0+1} I^m N + x J^{m0} I^{m - e_i} N). Needs m_i ≥ 1.
std::uint64_t fiber_quotient_piece_length(const MultiIdealSystem& system,
                                          const ElementCandidate& cand, const GradeIndex& m);

struct FilterRegularReport {
  bool holds = false;
  unsigned window_start = 0;
  unsigned window_side = 0;
  /// First grade where the identity failed, if any.
  std::optional<GradeIndex> witness;
};

/// Tests ℓ((M/x̄M)_n) = ℓ(M_n) - ℓ(M_{n - e_i}) over both stability windows.
FilterRegularReport filter_regular_check(const MultiIdealSystem& system, const ElementCandidate& cand,
                                         const WindowOptions& window = {});
bool filter_regular_identity(const MultiIdealSystem& system, const ElementCandidate& cand,
                             const WindowOptions& window = {});

/// Monomials of I_i up to `degree_bound` that classify as weak-(FC) or (FC),
/// in graded-lex order. Throws InputError when degree_bound is below the
/// largest generator degree of I_i, and DegenerateSystemError for degenerate
/// systems.
std::vector<ElementCandidate> find_weak_fc(const MultiIdealSystem& system, std::size_t index,
                                           unsigned degree_bound, const WindowOptions& window = {});

}  // namespace mixmult
