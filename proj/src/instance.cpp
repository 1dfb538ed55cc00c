#include "mixmult/instance.hpp"

#include <fstream>
#include <sstream>

#include "mixmult/errors.hpp"

namespace mixmult {

namespace {

using nlohmann::json;

std::vector<std::string> monomial_list(const json& node, const std::string& key) {
  if (!node.is_array()) throw InputError("'" + key + "' must be an array of monomial strings");
  std::vector<std::string> out;
  for (const auto& m : node) {
    if (!m.is_string()) throw InputError("'" + key + "' must be an array of monomial strings");
    out.push_back(m.get<std::string>());
  }
  return out;
}

std::vector<std::string> exponent_list(const VariableContext& ctx, const json& node, const std::string& key) {
  if (!node.is_array()) throw InputError("'" + key + "' must be an array of exponent vectors");
  std::vector<std::string> out;
  for (const auto& v : node) {
    if (!v.is_array() || v.size() != ctx.size())
      throw InputError("'" + key + "' entries must have " + std::to_string(ctx.size()) + " exponents");
    std::vector<Exponent> e;
    for (const auto& x : v) {
      if (!x.is_number_unsigned()) throw InputError("'" + key + "' exponents must be non-negative integers");
      e.push_back(x.get<Exponent>());
    }
    out.push_back(format_monomial(ctx, ExponentVector(e)));
  }
  return out;
}

// Reads `key` or `key_exponents` from `node`.
std::optional<std::vector<std::string>> ideal_field(const VariableContext& ctx, const json& node,
                                                    const std::string& key) {
  const bool plain = node.contains(key), exps = node.contains(key + "_exponents");
  if (plain && exps) throw InputError("give either '" + key + "' or '" + key + "_exponents', not both");
  if (plain) return monomial_list(node.at(key), key);
  if (exps) return exponent_list(ctx, node.at(key + "_exponents"), key + "_exponents");
  return std::nullopt;
}

unsigned unsigned_field(const json& node, const std::string& key) {
  if (!node.is_number_unsigned()) throw InputError("'" + key + "' must be a non-negative integer");
  return node.get<unsigned>();
}

}  // namespace

InstanceDocument parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  InstanceDocument out;
  if (!doc.contains("variables")) throw InputError("instance is missing 'variables'");
  out.variables = monomial_list(doc.at("variables"), "variables");
  const VariableContext ctx(out.variables);

  auto j = ideal_field(ctx, doc, "J");
  if (!j) throw InputError("instance is missing 'J'");
  out.j = *j;

  if (doc.contains("ideals") && doc.contains("ideals_exponents"))
    throw InputError("give either 'ideals' or 'ideals_exponents', not both");
  if (doc.contains("ideals")) {
    const auto& node = doc.at("ideals");
    if (!node.is_array()) throw InputError("'ideals' must be an array of ideals");
    for (const auto& i : node) out.ideals.push_back(monomial_list(i, "ideals"));
  } else if (doc.contains("ideals_exponents")) {
    const auto& node = doc.at("ideals_exponents");
    if (!node.is_array()) throw InputError("'ideals_exponents' must be an array of ideals");
    for (const auto& i : node) out.ideals.push_back(exponent_list(ctx, i, "ideals_exponents"));
  }

  if (doc.contains("module")) {
    const auto& m = doc.at("module");
    if (!m.is_object()) throw InputError("'module' must be an object with U and L");
    if (auto u = ideal_field(ctx, m, "U")) out.upper = *u;
    if (auto l = ideal_field(ctx, m, "L")) out.lower = *l;
  }
  out.lower_prime = ideal_field(ctx, doc, "L_prime");
  out.candidates = ideal_field(ctx, doc, "candidates");
  if (doc.contains("candidate_index")) out.candidate_index = unsigned_field(doc.at("candidate_index"), "candidate_index");
  if (doc.contains("v")) out.v = unsigned_field(doc.at("v"), "v");
  if (doc.contains("u")) {
    const auto& node = doc.at("u");
    if (!node.is_array()) throw InputError("'u' must be an array of positive integers");
    std::vector<unsigned> u;
    for (const auto& x : node) u.push_back(unsigned_field(x, "u"));
    out.scaling = u;
  }

  if (doc.contains("options")) {
    const auto& o = doc.at("options");
    if (!o.is_object()) throw InputError("'options' must be an object");
    if (o.contains("offset")) out.fit.initial_offset = unsigned_field(o.at("offset"), "offset");
    if (o.contains("cap")) out.fit.offset_cap = unsigned_field(o.at("cap"), "cap");
    if (o.contains("window")) out.window.side = unsigned_field(o.at("window"), "window");
    if (o.contains("window_start")) out.window.start = unsigned_field(o.at("window_start"), "window_start");
  }
  if (out.window.side == 0) throw InputError("'window' must be positive");

  (void)build_system(out);
  return out;
}

InstanceDocument parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

json serialize_instance(const InstanceDocument& doc) {
  json out;
  out["variables"] = doc.variables;
  out["J"] = doc.j;
  out["ideals"] = json::array();
  for (const auto& i : doc.ideals) out["ideals"].push_back(i);
  out["module"] = {{"U", doc.upper}, {"L", doc.lower}};
  if (doc.lower_prime) out["L_prime"] = *doc.lower_prime;
  if (doc.scaling) out["u"] = *doc.scaling;
  if (doc.candidates) out["candidates"] = *doc.candidates;
  if (doc.candidate_index) out["candidate_index"] = *doc.candidate_index;
  if (doc.v) out["v"] = *doc.v;
  json options = {{"offset", doc.fit.initial_offset}, {"cap", doc.fit.offset_cap}, {"window", doc.window.side}};
  if (doc.window.start) options["window_start"] = *doc.window.start;
  out["options"] = options;
  return out;
}

MultiIdealSystem build_system(const InstanceDocument& doc) {
  VariableContext ctx(doc.variables);
  MonomialIdeal j = parse_ideal(ctx, doc.j);
  std::vector<MonomialIdeal> ideals;
  for (const auto& i : doc.ideals) ideals.push_back(parse_ideal(ctx, i));
  MonomialSubquotient n(parse_ideal(ctx, doc.upper), parse_ideal(ctx, doc.lower));
  return MultiIdealSystem(std::move(ctx), std::move(j), std::move(ideals), std::move(n));
}

}  // namespace mixmult
