#include "mixmult/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "mixmult/errors.hpp"

namespace mixmult {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("at least one variable is required");
  if (names_.size() > 64) throw InputError("at most 64 variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("variable names must be non-empty");
    if (!(std::isalpha(static_cast<unsigned char>(n.front())) || n.front() == '_'))
      throw InputError("variable name must start with a letter: " + n);
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InputError("invalid character in variable name: " + n);
    if (!seen.insert(n).second) throw InputError("duplicate variable name: " + n);
  }
}

std::size_t VariableContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown variable: " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

ExponentVector parse_monomial(const VariableContext& ctx, std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw InputError("empty monomial");

  ExponentVector m(ctx.size());
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = compact.find('*', pos);
    std::string factor = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (factor.empty()) throw InputError("malformed monomial: " + std::string(text));
    if (factor != "1") {
      std::string base = factor;
      std::uint64_t e = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        base = factor.substr(0, caret);
        std::string digits = factor.substr(caret + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw InputError("malformed exponent in: " + std::string(text));
        if (digits.size() > 9) throw InputError("exponent too large in: " + std::string(text));
        e = std::stoull(digits);
      }
      std::size_t var = ctx.index_of(base);
      std::uint64_t total = std::uint64_t{m[var]} + e;
      if (total > std::numeric_limits<Exponent>::max()) throw InputError("exponent too large in: " + std::string(text));
      m[var] = static_cast<Exponent>(total);
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return m;
}

std::string format_monomial(const VariableContext& ctx, const ExponentVector& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal(const VariableContext& ctx, const std::vector<std::string>& gens) {
  std::vector<ExponentVector> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) ms.push_back(parse_monomial(ctx, g));
  return MonomialIdeal(ctx.size(), std::move(ms));
}

std::vector<std::string> format_ideal(const VariableContext& ctx, const MonomialIdeal& a) {
  std::vector<std::string> out;
  out.reserve(a.gens().size());
  for (const auto& g : a.gens()) out.push_back(format_monomial(ctx, g));
  return out;
}

std::string ideal_to_string(const VariableContext& ctx, const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& g : a.gens()) {
    if (!first) out += ", ";
    out += format_monomial(ctx, g);
    first = false;
  }
  return out + ")";
}

}  // namespace mixmult
