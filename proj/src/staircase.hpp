#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mixmult/monomial.hpp"

namespace mixmult::detail {

/// Dense membership index of a monomial ideal.
///
/// For a prefix a' = (a_1..a_{s-1}) the index stores the least a_s with
/// (a', a_s) in the ideal, i.e. the minimum last exponent over generators
/// whose prefix divides a'. Values are constant once a' passes the extents in
/// any coordinate, so queries clamp.
class StaircaseIndex {
 public:
  static constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max();
  /// Tables above this many cells are refused.
  static constexpr std::size_t kMaxCells = std::size_t{1} << 25;

  StaircaseIndex(std::size_t nvars, std::span<const ExponentVector> gens,
                 std::span<const Exponent> extents);

  /// Prefix extents covering `gens`: per-coordinate maxima over the first
  /// nvars - 1 coordinates.
  static std::vector<Exponent> extents_of(std::size_t nvars, std::span<const ExponentVector> gens);
  static std::size_t cell_count(std::span<const Exponent> extents);

  Exponent threshold_at_cell(std::size_t cell) const { return table_[cell]; }
  Exponent threshold(std::span<const Exponent> prefix) const;
  bool contains(const ExponentVector& m) const;

  std::size_t cells() const noexcept { return table_.size(); }
  std::span<const Exponent> extents() const noexcept { return extents_; }
  /// Row-major strides over the prefix coordinates.
  std::span<const std::size_t> strides() const noexcept { return strides_; }

 private:
  std::size_t nvars_;
  std::vector<Exponent> extents_;
  std::vector<std::size_t> strides_;
  std::vector<Exponent> table_;
};

}  // namespace mixmult::detail
