#include "staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixmult::detail {

std::vector<Exponent> StaircaseIndex::extents_of(std::size_t nvars, std::span<const ExponentVector> gens) {
  std::vector<Exponent> ext(nvars > 0 ? nvars - 1 : 0, 0);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < ext.size(); ++j) ext[j] = std::max(ext[j], g[j]);
  return ext;
}

std::size_t StaircaseIndex::cell_count(std::span<const Exponent> extents) {
  std::size_t cells = 1;
  for (Exponent e : extents) {
    std::size_t side = std::size_t{e} + 1;
    if (cells > kMaxCells / side) return kMaxCells + 1;
    cells *= side;
  }
  return cells;
}

StaircaseIndex::StaircaseIndex(std::size_t nvars, std::span<const ExponentVector> gens,
                               std::span<const Exponent> extents)
    : nvars_(nvars), extents_(extents.begin(), extents.end()) {
  if (nvars == 0) throw std::logic_error("staircase index needs at least one variable");
  std::size_t cells = cell_count(extents_);
  if (cells > kMaxCells) throw std::length_error("staircase table too large");
  strides_.assign(extents_.size(), 1);
  for (std::size_t j = extents_.size(); j-- > 1;)
    strides_[j - 1] = strides_[j] * (std::size_t{extents_[j]} + 1);
  table_.assign(cells, kInfinity);

  const std::size_t last = nvars - 1;
  for (const auto& g : gens) {
    std::size_t cell = 0;
    bool inside = true;
    for (std::size_t j = 0; j < extents_.size(); ++j) {
      if (g[j] > extents_[j]) {
        inside = false;
        break;
      }
      cell += g[j] * strides_[j];
    }
    if (!inside) throw std::logic_error("generator outside staircase extents");
    table_[cell] = std::min(table_[cell], g[last]);
  }

  // Prefix minimum over the product order, one axis at a time.
  for (std::size_t j = 0; j < extents_.size(); ++j) {
    const std::size_t stride = strides_[j];
    const std::size_t span = stride * (std::size_t{extents_[j]} + 1);
    for (std::size_t base = 0; base < cells; base += span)
      for (std::size_t off = 0; off < stride; ++off)
        for (std::size_t k = 1; k <= extents_[j]; ++k) {
          std::size_t c = base + off + k * stride;
          table_[c] = std::min(table_[c], table_[c - stride]);
        }
  }
}

Exponent StaircaseIndex::threshold(std::span<const Exponent> prefix) const {
  std::size_t cell = 0;
  for (std::size_t j = 0; j < extents_.size(); ++j) cell += std::min(prefix[j], extents_[j]) * strides_[j];
  return table_[cell];
}

bool StaircaseIndex::contains(const ExponentVector& m) const {
  return m[nvars_ - 1] >= threshold(m.exponents().first(nvars_ - 1));
}

}  // namespace mixmult::detail
