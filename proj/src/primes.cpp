#include "mixmult/primes.hpp"

#include <algorithm>
#include <bit>

#include "mixmult/errors.hpp"
#include "mixmult/hilbert.hpp"

namespace mixmult {

MonomialPrime::MonomialPrime(std::size_t nvars, std::uint64_t mask) : nvars_(nvars), mask_(mask) {
  if (nvars > 64) throw InputError("at most 64 variables are supported");
  if (nvars < 64 && (mask >> nvars) != 0) throw InputError("prime mentions a variable outside the ring");
}

std::size_t MonomialPrime::height() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::string> MonomialPrime::names(const VariableContext& ctx) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (contains_variable(i)) out.push_back(ctx.name(i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_covers(const std::vector<std::uint64_t>& edges, std::uint64_t current,
                      std::vector<std::uint64_t>& out) {
  auto open = std::find_if(edges.begin(), edges.end(), [&](std::uint64_t e) { return (e & current) == 0; });
  if (open == edges.end()) {
    out.push_back(current);
    return;
  }
  for (std::uint64_t rest = *open; rest != 0; rest &= rest - 1) {
    std::uint64_t bit = rest & (~rest + 1);
    enumerate_covers(edges, current | bit, out);
  }
}

}  // namespace

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& a) {
  if (a.is_unit()) throw EmptySpectrumError("the unit ideal has no minimal primes");
  std::vector<std::uint64_t> edges;
  for (const auto& g : a.gens()) edges.push_back(g.support_mask());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  // Smaller edges first keeps the branching narrow.
  std::sort(edges.begin(), edges.end(), [](std::uint64_t x, std::uint64_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });

  std::vector<std::uint64_t> covers;
  enumerate_covers(edges, 0, covers);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  std::vector<MonomialPrime> out;
  for (std::uint64_t c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [&](std::uint64_t other) { return other != c && (other & ~c) == 0; });
    if (minimal) out.emplace_back(a.nvars(), c);
  }
  return out;
}

int ring_dimension(const MonomialIdeal& a) {
  if (a.is_unit()) return -1;
  int best = -1;
  for (const auto& p : minimal_primes(a)) best = std::max(best, static_cast<int>(p.coheight()));
  return best;
}

int dimension(const MonomialSubquotient& n) { return ring_dimension(annihilator(n)); }

std::uint64_t localization_length(const MonomialSubquotient& n, const MonomialPrime& p) {
  if (p.nvars() != n.nvars()) throw InputError("prime and module live in different rings");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n.nvars(); ++i)
    if (p.contains_variable(i)) keep.push_back(i);

  auto project = [&](const MonomialIdeal& a) {
    std::vector<ExponentVector> gens;
    for (const auto& g : a.gens()) {
      ExponentVector r(keep.size());
      for (std::size_t k = 0; k < keep.size(); ++k) r[k] = g[keep[k]];
      gens.push_back(std::move(r));
    }
    return MonomialIdeal(keep.size(), std::move(gens));
  };

  const MonomialIdeal upper = project(n.upper());
  const MonomialIdeal lower = project(n.lower());
  try {
    return monomials_between(upper, lower, MonomialIdeal::zero(keep.size()));
  } catch (const NonArtinianError&) {
    throw InfiniteLengthError("localization has infinite length; the prime is not minimal over Ann N");
  }
}

bool positive_height(const MonomialIdeal& i, const MonomialSubquotient& n) {
  const MonomialIdeal ann = annihilator(n);
  if (ann.is_unit()) return false;
  for (const auto& p : minimal_primes(ann))
    if (p.ideal().contains(i)) return false;
  return true;
}

std::vector<PrimeComponent> build_pi(const MultiIdealSystem& system) {
  system.require_non_degenerate();
  const int q = dimension(system.saturated_module());
  std::vector<PrimeComponent> pi;
  for (const auto& p : minimal_primes(annihilator(system.module()))) {
    if (static_cast<int>(p.coheight()) != q || p.ideal().contains(system.product())) continue;
    pi.push_back({p, localization_length(system.module(), p)});
  }
  return pi;
}

}  // namespace mixmult
