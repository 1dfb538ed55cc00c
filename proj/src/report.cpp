#include "mixmult/report.hpp"

#include <limits>

namespace mixmult {

nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::json to_json(const ExactPolynomial& p) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) terms[grade_key(e)] = to_fraction_string(c);
  return {{"nvars", p.nvars()}, {"total_degree", p.total_degree()}, {"terms", terms}, {"text", to_string(p)}};
}

nlohmann::json to_json(const LengthTable& t) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [g, v] : t.entries) entries[grade_key(g)] = v;
  return {{"offset", t.offset}, {"entries", entries}};
}

nlohmann::json to_json(const BhattacharyaResult& r) {
  nlohmann::json mixed = nlohmann::json::object();
  for (const auto& [k, v] : r.mixed) mixed[grade_key(k)] = integer_json(v);
  nlohmann::json out;
  out["q"] = r.q;
  out["offset"] = r.offset;
  out["polynomial"] = to_json(r.polynomial);
  out["leading_form"] = to_json(r.leading_form);
  out["mixed"] = mixed;
  out["tilde_e"] = integer_json(r.tilde_e);
  out["rees_multiplicity"] = {{"value", integer_json(r.tilde_e)},
                              {"method", "sum of the mixed multiplicities of the fiber module"}};
  out["fit_samples"] = to_json(r.fit_samples);
  out["validation_samples"] = to_json(r.validation_samples);
  return out;
}

nlohmann::json to_json(const FcReport& r) {
  return {{"cond_i", r.cond_i},
          {"cond_ii", to_string(r.cond_ii)},
          {"cond_iii", r.cond_iii},
          {"window", {{"start", r.window_start}, {"side", r.window_side},
                      {"first_holds", r.first_window_holds}, {"second_holds", r.second_window_holds}}},
          {"saturated_dim", r.saturated_dim},
          {"quotient_dim", r.quotient_dim},
          {"classification", to_string(r.classification)}};
}

nlohmann::json to_json(const VerificationReport& r) {
  auto values = [](const LabeledValues& vs) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [label, v] : vs) out[label] = integer_json(v);
    return out;
  };
  nlohmann::json out;
  out["theorem"] = r.theorem_id;
  out["verdict"] = to_string(r.verdict);
  out["lhs"] = values(r.lhs);
  out["rhs"] = values(r.rhs);
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["witnesses"] = r.witnesses;
  out["notes"] = r.notes;
  return out;
}

nlohmann::json to_json(const VariableContext& ctx, const std::vector<PrimeComponent>& pi) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : pi) out.push_back({{"prime", c.prime.names(ctx)}, {"local_length", c.local_length}});
  return out;
}

nlohmann::json to_json(const VariableContext& ctx, const std::vector<MonomialPrime>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : primes) out.push_back(p.names(ctx));
  return out;
}

}  // namespace mixmult
