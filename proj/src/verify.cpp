#include "mixmult/verify.hpp"

#include <numeric>
#include <optional>

#include "mixmult/errors.hpp"
#include "mixmult/report.hpp"

namespace mixmult {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string grade_key(const GradeIndex& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out;
}

namespace {

using Fitted = std::optional<BhattacharyaResult>;

constexpr const char* kReesNote = "Rees multiplicities are evaluated as tilde-e of the fiber module";

// Fit of a module that may be zero after saturation; an absent fit stands
// for the zero table.
Fitted fit_if_present(const MultiIdealSystem& system, const FitOptions& opts) {
  if (system.is_degenerate()) return std::nullopt;
  if (dimension(system.saturated_module()) <= 0) return std::nullopt;
  return fit_bhattacharya(system, opts);
}

int dim_of(const Fitted& f) { return f ? f->q : -1; }


// Mixed multiplicity with the zero convention for types above the leading
// degree. Types below it are a caller error.
Integer entry(const Fitted& f, const GradeIndex& k) {
  if (!f) return 0;
  return f->mixed_at(k);
}

std::vector<GradeIndex> types_of_degree(std::size_t arity, unsigned degree) {
  std::vector<GradeIndex> out;
  GradeIndex cur(arity, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (arity == 0) return;
    if (pos + 1 == arity) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Integer degree_sum(const Fitted& f, std::size_t arity, unsigned degree) {
  Integer s = 0;
  for (const auto& k : types_of_degree(arity, degree)) s += entry(f, k);
  return s;
}

void finalize(VerificationReport& r) {
  r.verdict = Verdict::verified;
  for (std::size_t i = 0; i < r.lhs.size(); ++i)
    if (r.lhs[i].second != r.rhs[i].second) {
      r.verdict = Verdict::violated;
      if (r.reason.empty()) r.reason = "mismatch at " + r.lhs[i].first;
      return;
    }
}

template <class Body>
VerificationReport guarded(std::string id, Body&& body) {
  VerificationReport r;
  r.theorem_id = std::move(id);
  r.verdict = Verdict::verified;
  try {
    body(r);
    if (r.verdict != Verdict::inconclusive) finalize(r);
  } catch (const NonStabilizedError& e) {
    r.verdict = Verdict::inconclusive;
    r.reason = e.what();
  }
  return r;
}

void push(VerificationReport& r, std::string label, Integer lhs, Integer rhs) {
  r.lhs.emplace_back(label, std::move(lhs));
  r.rhs.emplace_back(std::move(label), std::move(rhs));
}

nlohmann::json fit_summary(const Fitted& f) {
  if (!f) return nullptr;
  nlohmann::json j;
  j["q"] = f->q;
  j["offset"] = f->offset;
  j["tilde_e"] = integer_json(f->tilde_e);
  nlohmann::json mixed = nlohmann::json::object();
  for (const auto& [k, v] : f->mixed) mixed[grade_key(k)] = integer_json(v);
  j["mixed"] = mixed;
  return j;
}

bool all_maximal_primary(const MultiIdealSystem& system) {
  for (const auto& i : system.ideals())
    if (!is_maximal_primary(i)) return false;
  return true;
}

}  // namespace

VerificationReport verify_additivity(const MultiIdealSystem& system, const VerifyOptions& opts) {
  return guarded("additivity", [&](VerificationReport& r) {
    const auto pi = build_pi(system);
    const Fitted base = fit_bhattacharya(system, opts.fit);
    std::vector<Fitted> parts;
    for (const auto& c : pi)
      parts.push_back(fit_bhattacharya(system.with_module(MonomialSubquotient::cyclic(c.prime.ideal())), opts.fit));
    for (const auto& [k, e] : base->mixed) {
      Integer rhs = 0;
      for (std::size_t t = 0; t < pi.size(); ++t) rhs += Integer(pi[t].local_length) * entry(parts[t], k);
      push(r, grade_key(k), e, rhs);
    }
    r.witnesses["pi"] = to_json(system.context(), pi);
    r.witnesses["base"] = fit_summary(base);
    if (positive_height(system.product(), system.module()))
      r.notes.push_back("ht((I + Ann N)/Ann N) > 0: N̄ may be replaced by N");
    if (all_maximal_primary(system)) r.notes.push_back("all ideals are m-primary");
  });
}

VerificationReport verify_scaling(const MultiIdealSystem& system, const std::vector<unsigned>& u,
                                  const VerifyOptions& opts) {
  if (u.size() != system.d())
    throw InputError("scaling vector has " + std::to_string(u.size()) + " entries, expected " +
                     std::to_string(system.d()));
  for (unsigned ui : u)
    if (ui == 0) throw InputError("scaling exponents must be positive");
  return guarded("scaling", [&](VerificationReport& r) {
    std::vector<MonomialIdeal> powered;
    for (std::size_t k = 0; k < system.d(); ++k) powered.push_back(ideal_power(system.ideals()[k], u[k]));
    const Fitted base = fit_bhattacharya(system, opts.fit);
    const Fitted scaled = fit_bhattacharya(system.with_ideals(std::move(powered)), opts.fit);
    Integer weighted = 0;
    for (const auto& [k, e] : base->mixed) {
      Integer factor = 1;
      for (std::size_t t = 1; t < k.size(); ++t) factor *= boost::multiprecision::pow(Integer(u[t - 1]), k[t]);
      weighted += e * factor;
      push(r, grade_key(k), entry(scaled, k), e * factor);
    }
    push(r, "tilde_e", scaled->tilde_e, weighted);
    r.witnesses["base"] = fit_summary(base);
    r.witnesses["scaled"] = fit_summary(scaled);
  });
}

VerificationReport verify_exact_sequence(const MultiIdealSystem& base, const MonomialIdeal& l,
                                         const MonomialIdeal& l_prime, const VerifyOptions& opts) {
  if (l.nvars() != base.nvars() || l_prime.nvars() != base.nvars())
    throw InputError("ideal does not match the variable context");
  if (!l_prime.contains(l)) throw InputError("L must be contained in L'");
  return guarded("exactseq", [&](VerificationReport& r) {
    const Fitted w1 = fit_if_present(base.with_module(MonomialSubquotient(l_prime, l)), opts.fit);
    const Fitted w3 = fit_if_present(base.with_module(MonomialSubquotient::cyclic(l)), opts.fit);
    const Fitted w2 = fit_if_present(base.with_module(MonomialSubquotient::cyclic(l_prime)), opts.fit);
    const int p1 = dim_of(w1), p2 = dim_of(w2), p3 = dim_of(w3);
    push(r, "dim", p3, std::max(p1, p2));

    std::string branch;
    if (p1 == p3 && p2 == p3)
      branch = "equal";
    else if (p1 < p3)
      branch = "sub-drop";
    else
      branch = "quotient-drop";
    r.witnesses["branch"] = branch;
    r.witnesses["dims"] = {{"sub", p1}, {"middle", p3}, {"quotient", p2}};
    r.witnesses["sub"] = fit_summary(w1);
    r.witnesses["middle"] = fit_summary(w3);
    r.witnesses["quotient"] = fit_summary(w2);
    if (p3 < 0 || p3 != std::max(p1, p2)) return;

    auto rhs_at = [&](const GradeIndex& k) -> Integer {
      if (branch == "equal") return entry(w1, k) + entry(w2, k);
      return branch == "sub-drop" ? entry(w2, k) : entry(w1, k);
    };
    Integer lhs_sum = 0, rhs_sum = 0;
    for (const auto& [k, e] : w3->mixed) {
      const Integer rv = rhs_at(k);
      lhs_sum += e;
      rhs_sum += rv;
      push(r, grade_key(k), e, rv);
    }
    push(r, "tilde_e", lhs_sum, rhs_sum);
  });
}

VerificationReport verify_recursion(const MultiIdealSystem& system, const ElementCandidate& cand, unsigned v,
                                    const VerifyOptions& opts) {
  const FcReport fc = check_weak_fc(system, cand, opts.window);
  auto r = guarded("recursion", [&](VerificationReport& r) {
    r.witnesses["candidate"] = {{"monomial", format_monomial(system.context(), cand.monomial)},
                                {"index", cand.index}};
    r.witnesses["fc"] = to_json(fc);
    if (fc.classification != FcClass::weak_fc && fc.classification != FcClass::fc) {
      r.verdict = Verdict::inconclusive;
      r.reason = std::string("candidate has no weak-FC certificate (classification ") +
                 to_string(fc.classification) + ")";
      return;
    }
    const std::size_t i = cand.index;
    const Fitted base = fit_bhattacharya(system, opts.fit);
    const unsigned top = static_cast<unsigned>(base->q - 1);

    Integer with_i = 0, without_i = 0;
    bool hypothesis = false;
    for (const auto& [k, e] : base->mixed) {
      if (k[i] > 0) {
        with_i += e;
        hypothesis = hypothesis || e != 0;
      } else {
        without_i += e;
      }
    }
    r.witnesses["hypothesis_holds"] = hypothesis;

    const Fitted quot = fit_if_present(quotient_system(system, cand), opts.fit);
    if (quot && quot->q > base->q - 1) {
      push(r, "quotient_dim", quot->q, base->q - 1);
      r.reason = "the quotient N/xN has not dropped in dimension";
      return;
    }
    const Integer quot_tilde = top == 0 ? Integer(0) : degree_sum(quot, system.d() + 1, top - 1);
    push(r, "quotient_tilde_e", quot_tilde, with_i);

    for (const auto& [k, e] : base->mixed) {
      if (k[i] == 0) continue;
      GradeIndex shifted = k;
      --shifted[i];
      push(r, "shift:" + grade_key(k), e, entry(quot, shifted));
    }

    auto drop_tilde = [&](unsigned vv, int& dim) {
      const Fitted drop = fit_if_present(drop_index_system(system, i, vv), opts.fit);
      dim = dim_of(drop);
      if (drop && drop->q > base->q) throw std::logic_error("dropped-index module exceeds the base dimension");
      return degree_sum(drop, system.d(), top);
    };
    int dim_v = 0, dim_v1 = 0;
    const Integer drop_v = drop_tilde(v, dim_v);
    const Integer drop_v1 = drop_tilde(v + 1, dim_v1);
    r.witnesses["dropped"] = {{"v", v}, {"tilde_e_v", integer_json(drop_v)}, {"tilde_e_v_plus_1", integer_json(drop_v1)},
                              {"dim_v", dim_v}, {"dim_v_plus_1", dim_v1}};
    r.notes.push_back("v >> 0 is taken as stability at v and v + 1");
    if (drop_v != drop_v1 || dim_v != dim_v1) {
      r.verdict = Verdict::inconclusive;
      r.reason = "dropped-index multiplicity differs at v = " + std::to_string(v) + " and v + 1";
      return;
    }
    push(r, "dropped_tilde_e", drop_v, without_i);
    const bool full_dim = dim_v == base->q;
    r.witnesses["branch"] = full_dim ? "full-dimension" : "lower-dimension";
    push(r, "splitting", base->tilde_e, full_dim ? quot_tilde + drop_v : quot_tilde);

    if (positive_height(system.product(), system.module()))
      r.notes.push_back("ht((I + Ann N)/Ann N) > 0: the multiplicities of N̄ equal those of N");
    r.notes.push_back(kReesNote);
  });
  return r;
}

unsigned chain_length(const BhattacharyaResult& fit) {
  const unsigned top = static_cast<unsigned>(fit.q - 1);
  unsigned p = 0;
  for (unsigned t = 0; t <= top; ++t)
    if (fit.mixed_at({top - t, t}) != 0) p = t;
  return p;
}

std::optional<ElementCandidate> first_weak_fc(const MultiIdealSystem& system, std::size_t index,
                                              const WindowOptions& window) {
  if (index < 1 || index > system.d() || system.is_degenerate()) return std::nullopt;
  const auto bound = static_cast<unsigned>(system.ideals()[index - 1].max_generator_degree());
  auto found = find_weak_fc(system, index, bound, window);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<std::vector<ElementCandidate>> find_chain(const MultiIdealSystem& system, const VerifyOptions& opts) {
  if (system.d() != 1) throw InputError("the chain formula needs exactly one ideal");
  const unsigned p = chain_length(fit_bhattacharya(system, opts.fit));
  std::vector<ElementCandidate> chain;
  MultiIdealSystem step = system;
  for (unsigned j = 0; j < p; ++j) {
    auto next = first_weak_fc(step, 1, opts.window);
    if (!next) return std::nullopt;
    chain.push_back(*next);
    step = quotient_system(step, *next);
  }
  return chain;
}

VerificationReport verify_chain(const MultiIdealSystem& system, const std::vector<ElementCandidate>& cands,
                                const VerifyOptions& opts) {
  if (system.d() != 1) throw InputError("the chain formula needs exactly one ideal");
  for (const auto& c : cands)
    if (c.index != 1) throw InputError("chain candidates must lie in I_1");
  return guarded("chain", [&](VerificationReport& r) {
    const Fitted base = fit_bhattacharya(system, opts.fit);
    const unsigned p = chain_length(*base);
    r.witnesses["p"] = p;
    if (cands.size() != p) {
      r.verdict = Verdict::inconclusive;
      r.reason = "the chain has " + std::to_string(cands.size()) + " elements but p = " + std::to_string(p);
      return;
    }

    MonomialIdeal generated = MonomialIdeal::zero(system.nvars());
    nlohmann::json terms = nlohmann::json::array();
    Integer rhs = 0;
    for (std::size_t j = 0; j <= p; ++j) {
      const MultiIdealSystem step = system.with_module(quotient_by(system.module(), generated));
      if (j < p) {
        const auto fc = check_weak_fc(step, cands[j], opts.window);
        if (fc.classification != FcClass::weak_fc && fc.classification != FcClass::fc) {
          r.verdict = Verdict::inconclusive;
          r.reason = "chain element " + std::to_string(j + 1) + " is not weak-FC for the quotiented module";
          r.witnesses["failed_step"] = j + 1;
          return;
        }
      }
      const MonomialSubquotient sat = step.saturated_module();
      Integer e = 0;
      if (!sat.is_zero())
        e = samuel_multiplicity(system.context(), system.j(), sat, opts.fit);
      terms.push_back(integer_json(e));
      rhs += e;
      if (j < p) generated = ideal_sum(generated, MonomialIdeal::principal(cands[j].monomial));
    }
    r.witnesses["samuel_terms"] = terms;
    push(r, "tilde_e", base->tilde_e, rhs);
    if (positive_height(system.product(), system.module()))
      r.notes.push_back("ht((I + Ann N)/Ann N) > 0: the formula holds for N itself");
    r.notes.push_back(kReesNote);
  });
}

VerificationReport verify_degree_law(const MultiIdealSystem& system, const VerifyOptions& opts) {
  return guarded("degree", [&](VerificationReport& r) {
    const auto fit = fit_bhattacharya(system, opts.fit);
    push(r, "total_degree", fit.polynomial.total_degree(), dimension(system.saturated_module()) - 1);
  });
}

VerificationReport verify_saturation_invariance(const MultiIdealSystem& system, const VerifyOptions& opts) {
  return guarded("saturation", [&](VerificationReport& r) {
    const Fitted plain = fit_bhattacharya(system, opts.fit);
    const Fitted sat = fit_bhattacharya(system.with_module(system.saturated_module()), opts.fit);
    for (const auto& [k, e] : plain->mixed) push(r, grade_key(k), e, entry(sat, k));
    push(r, "tilde_e", plain->tilde_e, sat->tilde_e);
  });
}

}  // namespace mixmult
