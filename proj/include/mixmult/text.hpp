#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mixmult/ideal.hpp"

namespace mixmult {

/// Ordered, distinct variable names of the ambient polynomial ring.
class VariableContext {
 public:
  VariableContext() = default;
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of `name`; throws InputError when unknown.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

/// Parses `x^2*y`, `x*y^3*z`, `1`. Whitespace is ignored. Repeated factors
/// multiply (`x*x` is `x^2`).
ExponentVector parse_monomial(const VariableContext& ctx, std::string_view text);
std::string format_monomial(const VariableContext& ctx, const ExponentVector& m);

MonomialIdeal parse_ideal(const VariableContext& ctx, const std::vector<std::string>& gens);
std::vector<std::string> format_ideal(const VariableContext& ctx, const MonomialIdeal& a);
/// `(x^2, x*y)` style, `(0)` for the zero ideal.
std::string ideal_to_string(const VariableContext& ctx, const MonomialIdeal& a);

}  // namespace mixmult
