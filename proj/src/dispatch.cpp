#include "mixmult/dispatch.hpp"

#include "mixmult/errors.hpp"

namespace mixmult {

std::vector<ElementCandidate> parse_candidates(const VariableContext& ctx, const std::vector<std::string>& specs,
                                               std::size_t default_index) {
  std::vector<ElementCandidate> out;
  for (const auto& s : specs) {
    std::size_t index = default_index;
    std::string mono = s;
    if (auto colon = s.find(':'); colon != std::string::npos) {
      const std::string prefix = s.substr(0, colon);
      if (prefix.empty() || prefix.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad candidate index in '" + s + "'");
      index = std::stoul(prefix);
      mono = s.substr(colon + 1);
    }
    out.push_back({parse_monomial(ctx, mono), index});
  }
  return out;
}

VerificationReport verify_document(const InstanceDocument& doc, const VerifyRequest& request) {
  const auto system = build_system(doc);
  const auto& ctx = system.context();
  const VerifyOptions opts{doc.fit, doc.window};
  const auto& specs = request.candidates.empty() ? doc.candidates.value_or(std::vector<std::string>{})
                                                 : request.candidates;
  const auto cands = parse_candidates(ctx, specs, doc.candidate_index.value_or(1));
  const auto& t = request.theorem;

  if (t == "additivity") return verify_additivity(system, opts);
  if (t == "scaling") {
    auto u = request.u.empty() ? doc.scaling.value_or(std::vector<unsigned>{}) : request.u;
    if (u.empty()) throw InputError("scaling needs the exponent vector u");
    return verify_scaling(system, u, opts);
  }
  if (t == "exactseq") {
    auto lp = request.lower_prime.empty() ? doc.lower_prime : std::optional(request.lower_prime);
    if (!lp) throw InputError("exactseq needs L' (an L_prime entry or --lprime)");
    return verify_exact_sequence(system, parse_ideal(ctx, doc.lower), parse_ideal(ctx, *lp), opts);
  }
  if (t == "recursion") {
    if (cands.empty()) throw InputError("recursion needs a candidate");
    return verify_recursion(system, cands.front(), request.v.value_or(doc.v.value_or(2)), opts);
  }
  if (t == "chain") return verify_chain(system, cands, opts);
  throw InputError("unknown theorem '" + t + "'");
}

}  // namespace mixmult
