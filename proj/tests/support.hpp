#pragma once

#include "mixmult/hilbert.hpp"
#include "mixmult/text.hpp"
#include "oracles.hpp"

namespace support {

inline mixmult::MonomialIdeal ideal(std::size_t s, const oracle::Gens& gens) {
  std::vector<mixmult::ExponentVector> v;
  for (const auto& g : gens) v.emplace_back(std::vector<mixmult::Exponent>(g.begin(), g.end()));
  return mixmult::MonomialIdeal(s, v);
}

inline oracle::Gens gens(const mixmult::MonomialIdeal& a) {
  oracle::Gens out;
  for (const auto& g : a.gens()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

inline mixmult::VariableContext xyz(std::size_t s) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return mixmult::VariableContext(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(s)));
}

/// System from monomial strings over x, y(, z).
inline mixmult::MultiIdealSystem system(std::size_t s, const std::vector<std::string>& j,
                                        const std::vector<std::vector<std::string>>& ideals,
                                        const std::vector<std::string>& lower = {},
                                        const std::vector<std::string>& upper = {"1"}) {
  const auto ctx = xyz(s);
  std::vector<mixmult::MonomialIdeal> is;
  for (const auto& i : ideals) is.push_back(mixmult::parse_ideal(ctx, i));
  return mixmult::MultiIdealSystem(ctx, mixmult::parse_ideal(ctx, j), is,
                                   mixmult::MonomialSubquotient(mixmult::parse_ideal(ctx, upper),
                                                                mixmult::parse_ideal(ctx, lower)));
}

inline mixmult::ExponentVector mono(std::size_t s, const std::string& text) {
  return mixmult::parse_monomial(xyz(s), text);
}

}  // namespace support
