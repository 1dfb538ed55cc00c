#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixmult/hilbert.hpp"
#include "mixmult/primes.hpp"
#include "mixmult/sequence.hpp"

namespace mixmult {

enum class Verdict { verified, violated, inconclusive };
const char* to_string(Verdict v);

using LabeledValues = std::vector<std::pair<std::string, Integer>>;

/// Outcome of one two-sided check. `lhs` and `rhs` are aligned: entry k of
/// each carries the same label, and the verdict is `verified` iff every pair
/// agrees. `inconclusive` comes only from stabilization limits or a missing
/// weak-(FC) certificate.
struct VerificationReport {
  std::string theorem_id;
  LabeledValues lhs;
  LabeledValues rhs;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  nlohmann::json witnesses = nlohmann::json::object();
  std::vector<std::string> notes;
};

struct VerifyOptions {
  FitOptions fit;
  WindowOptions window;
};

/// Mixed tables of N against Σ_{p∈Π} ℓ(N_p) · (tables of R/p).
VerificationReport verify_additivity(const MultiIdealSystem& system, const VerifyOptions& opts = {});

/// Tables of (J, I^u, N) against u^k-scaled tables of (J, I, N), plus the
/// ẽ-sum identity.
VerificationReport verify_scaling(const MultiIdealSystem& system, const std::vector<unsigned>& u,
                                  const VerifyOptions& opts = {});

/// 0 → L'/L → R/L → R/L' → 0 for L ⊆ L', over the J and ideals of `base`
/// (its module is ignored).
VerificationReport verify_exact_sequence(const MultiIdealSystem& base, const MonomialIdeal& l,
                                         const MonomialIdeal& l_prime, const VerifyOptions& opts = {});

/// Recursion for ẽ along a weak-(FC) element of I_i, with the dropped-index
/// module taken at v and v + 1.
VerificationReport verify_recursion(const MultiIdealSystem& system, const ElementCandidate& cand,
                                    unsigned v, const VerifyOptions& opts = {});

/// d = 1 chain formula: ẽ(N) against Σ_j e(J; N/(x_1..x_j)N : I^∞).
VerificationReport verify_chain(const MultiIdealSystem& system, const std::vector<ElementCandidate>& cands,
                                const VerifyOptions& opts = {});

/// p = max{t : e(J^[q-t], I^[t]; N) != 0} for a d = 1 fit.
unsigned chain_length(const BhattacharyaResult& fit);

/// First weak-(FC) monomial of I_index up to its largest generator degree,
/// or nullopt (also for degenerate systems).
std::optional<ElementCandidate> first_weak_fc(const MultiIdealSystem& system, std::size_t index,
                                              const WindowOptions& window = {});

/// Greedy chain x_1..x_p for a d = 1 system, each x_j weak-(FC) for N/(x_1..x_{j-1})N,
/// or nullopt when some step has no monomial candidate.
std::optional<std::vector<ElementCandidate>> find_chain(const MultiIdealSystem& system,
                                                        const VerifyOptions& opts = {});

/// Total degree of the fitted polynomial against dim N̄ - 1.
VerificationReport verify_degree_law(const MultiIdealSystem& system, const VerifyOptions& opts = {});

/// Mixed tables of N against those of N̄.
VerificationReport verify_saturation_invariance(const MultiIdealSystem& system, const VerifyOptions& opts = {});

/// Key "k0,k1,...,kd".
std::string grade_key(const GradeIndex& k);

}  // namespace mixmult
