#include "mixmult/sequence.hpp"

#include <algorithm>

#include "mixmult/errors.hpp"
#include "mixmult/primes.hpp"

namespace mixmult {

const char* to_string(TriState t) {
  switch (t) {
    case TriState::holds: return "holds";
    case TriState::fails: return "fails";
    case TriState::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(FcClass c) {
  switch (c) {
    case FcClass::none: return "none";
    case FcClass::weak_fc: return "weak-FC";
    case FcClass::fc: return "FC";
    case FcClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

void require_candidate(const MultiIdealSystem& system, const ElementCandidate& cand) {
  if (cand.index < 1 || cand.index > system.d())
    throw InputError("candidate index " + std::to_string(cand.index) + " is out of range 1.." +
                     std::to_string(system.d()));
  if (cand.monomial.size() != system.nvars()) throw InputError("candidate monomial has the wrong length");
  if (!system.ideals()[cand.index - 1].contains(cand.monomial))
    throw InputError("candidate " + format_monomial(system.context(), cand.monomial) + " is not in I_" +
                     std::to_string(cand.index));
}

// Grades of the cube [start, start + side)^dims, last coordinate fastest.
std::vector<GradeIndex> cube(std::size_t dims, unsigned start, unsigned side) {
  std::vector<GradeIndex> out;
  GradeIndex g(dims, start);
  for (;;) {
    out.push_back(g);
    std::size_t k = dims;
    while (k > 0) {
      --k;
      if (g[k] + 1 < start + side) {
        ++g[k];
        break;
      }
      g[k] = start;
      if (k == 0) return out;
    }
    if (dims == 0) return out;
  }
}

bool intersection_stable_at(FiberLengths& lengths, const MonomialIdeal& x_upper, const MonomialIdeal& lower,
                            const ExponentVector& x, std::size_t axis, const GradeIndex& n) {
  GradeIndex up = n;
  ++up[axis];
  const MonomialIdeal target = ideal_sum(multiply(lengths.upper_ideal(n), x), lower);
  const MonomialIdeal lhs = intersection(x_upper, ideal_sum(lengths.upper_ideal(up), lower));
  // xJ^{n0}I^nU + L is always inside the left side, so containment decides equality.
  return target.contains(lhs);
}

}  // namespace

unsigned default_window_start(const MultiIdealSystem& system) {
  std::uint64_t deg = system.j().max_generator_degree();
  for (const auto& i : system.ideals()) deg = std::max(deg, i.max_generator_degree());
  return static_cast<unsigned>(deg) + *primarity_exponent(system.j());
}

FcReport check_weak_fc(const MultiIdealSystem& system, const ElementCandidate& cand, const WindowOptions& window) {
  require_candidate(system, cand);
  system.require_non_degenerate();

  const auto& u = system.module().upper();
  const auto& l = system.module().lower();
  const ExponentVector& x = cand.monomial;
  FcReport r;

  const MonomialIdeal torsion = intersection(saturate(l, system.product()), u);
  r.cond_i = torsion.contains(intersection(colon(l, x), u));

  r.window_start = window.start.value_or(default_window_start(system));
  r.window_side = window.side;
  if (r.window_side == 0) throw InputError("window side must be positive");
  FiberLengths lengths(system);
  const MonomialIdeal x_upper = ideal_sum(multiply(u, x), l);
  auto window_holds = [&](unsigned start) {
    for (const auto& n : cube(system.d() + 1, start, r.window_side))
      if (!intersection_stable_at(lengths, x_upper, l, x, cand.index, n)) return false;
    return true;
  };
  r.first_window_holds = window_holds(r.window_start);
  r.second_window_holds = window_holds(r.window_start + r.window_side);
  if (r.first_window_holds && r.second_window_holds)
    r.cond_ii = TriState::holds;
  else if (!r.first_window_holds && !r.second_window_holds)
    r.cond_ii = TriState::fails;
  else
    r.cond_ii = TriState::inconclusive;

  r.saturated_dim = dimension(system.saturated_module());
  r.quotient_dim = dimension(saturate_module(quotient_by(system.module(), MonomialIdeal::principal(x)),
                                             system.product()));
  r.cond_iii = r.quotient_dim == r.saturated_dim - 1;

  if (!r.cond_i || r.cond_ii == TriState::fails)
    r.classification = FcClass::none;
  else if (r.cond_ii == TriState::inconclusive)
    r.classification = FcClass::inconclusive;
  else
    r.classification = r.cond_iii ? FcClass::fc : FcClass::weak_fc;
  return r;
}

MultiIdealSystem quotient_system(const MultiIdealSystem& system, const ElementCandidate& cand) {
  require_candidate(system, cand);
  return system.with_module(quotient_by(system.module(), MonomialIdeal::principal(cand.monomial)));
}

MultiIdealSystem drop_index_system(const MultiIdealSystem& system, std::size_t index, unsigned v) {
  if (index < 1 || index > system.d()) throw InputError("index out of range");
  std::vector<MonomialIdeal> rest;
  for (std::size_t k = 0; k < system.d(); ++k)
    if (k + 1 != index) rest.push_back(system.ideals()[k]);
  MultiIdealSystem scaled = system.with_module(scale_module(system.module(), ideal_power(system.ideals()[index - 1], v)));
  return scaled.with_ideals(std::move(rest));
}

namespace {

std::uint64_t quotient_piece(FiberLengths& lengths, const MultiIdealSystem& system, const ElementCandidate& cand,
                             const GradeIndex& m) {
  if (m.size() != system.d() + 1) throw InputError("grade index has the wrong arity");
  if (m[cand.index] == 0) throw InputError("grade must be positive along the candidate's index");
  GradeIndex next = m, below = m;
  ++next[0];
  --below[cand.index];
  const MonomialIdeal p = lengths.upper_ideal(m);
  const MonomialIdeal q = ideal_sum(lengths.upper_ideal(next), multiply(lengths.upper_ideal(below), cand.monomial));
  return monomials_between(p, q, system.module().lower());
}

}  // namespace

std::uint64_t fiber_quotient_piece_length(const MultiIdealSystem& system, const ElementCandidate& cand,
                                          const GradeIndex& m) {
  require_candidate(system, cand);
  FiberLengths lengths(system);
  return quotient_piece(lengths, system, cand, m);
}

FilterRegularReport filter_regular_check(const MultiIdealSystem& system, const ElementCandidate& cand,
                                         const WindowOptions& window) {
  require_candidate(system, cand);
  FilterRegularReport r;
  r.window_start = std::max(1u, window.start.value_or(default_window_start(system)));
  r.window_side = window.side;
  if (r.window_side == 0) throw InputError("window side must be positive");
  FiberLengths lengths(system);
  for (const auto& m : cube(system.d() + 1, r.window_start, 2 * r.window_side)) {
    GradeIndex below = m;
    --below[cand.index];
    const auto quotient = static_cast<long long>(quotient_piece(lengths, system, cand, m));
    const auto diff = static_cast<long long>(lengths.at(m)) - static_cast<long long>(lengths.at(below));
    if (quotient != diff) {
      r.witness = m;
      return r;
    }
  }
  r.holds = true;
  return r;
}

bool filter_regular_identity(const MultiIdealSystem& system, const ElementCandidate& cand,
                             const WindowOptions& window) {
  return filter_regular_check(system, cand, window).holds;
}

std::vector<ElementCandidate> find_weak_fc(const MultiIdealSystem& system, std::size_t index, unsigned degree_bound,
                                           const WindowOptions& window) {
  if (index < 1 || index > system.d()) throw InputError("index out of range");
  system.require_non_degenerate();
  const MonomialIdeal& target = system.ideals()[index - 1];
  if (degree_bound < target.max_generator_degree())
    throw InputError("degree bound is below the largest generator degree of I_" + std::to_string(index));
  std::vector<ElementCandidate> found;
  for (const auto& m : monomials_up_to_degree(system.nvars(), degree_bound)) {
    if (!target.contains(m)) continue;
    ElementCandidate cand{m, index};
    const auto cls = check_weak_fc(system, cand, window).classification;
    if (cls == FcClass::weak_fc || cls == FcClass::fc) found.push_back(std::move(cand));
  }
  return found;
}

}  // namespace mixmult
