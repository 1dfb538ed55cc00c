#include "mixmult/ideal.hpp"

#include <algorithm>
#include <functional>

#include "mixmult/errors.hpp"
#include "staircase.hpp"

namespace mixmult {

namespace {

// Generator sets below this size are reduced by pairwise divisibility.
constexpr std::size_t kPairwiseLimit = 48;

std::vector<ExponentVector> minimalize_pairwise(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<ExponentVector> minimalize_staircase(std::size_t nvars, std::vector<ExponentVector> gens,
                                                 const std::vector<Exponent>& extents) {
  detail::StaircaseIndex index(nvars, gens, extents);
  const std::size_t last = nvars - 1;
  auto strides = index.strides();
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    std::size_t cell = 0;
    for (std::size_t j = 0; j < last; ++j) cell += g[j] * strides[j];
    if (index.threshold_at_cell(cell) != g[last]) continue;
    bool corner = true;
    for (std::size_t j = 0; j < last && corner; ++j)
      if (g[j] > 0 && index.threshold_at_cell(cell - strides[j]) <= g[last]) corner = false;
    if (corner) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw InputError("monomial has the wrong number of variables");

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) return;
  if (nvars == 0 || std::any_of(gens.begin(), gens.end(), [](const ExponentVector& g) { return g.is_one(); })) {
    gens_.assign(1, ExponentVector(nvars));
    return;
  }

  if (gens.size() <= kPairwiseLimit) {
    gens_ = minimalize_pairwise(std::move(gens));
  } else {
    auto extents = detail::StaircaseIndex::extents_of(nvars, gens);
    if (detail::StaircaseIndex::cell_count(extents) <= detail::StaircaseIndex::kMaxCells)
      gens_ = minimalize_staircase(nvars, std::move(gens), extents);
    else
      gens_ = minimalize_pairwise(std::move(gens));
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {ExponentVector(nvars)}); }

MonomialIdeal MonomialIdeal::principal(const ExponentVector& m) { return MonomialIdeal(m.size(), {m}); }

MonomialIdeal MonomialIdeal::variables(std::size_t nvars, std::uint64_t mask) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < nvars; ++i)
    if ((mask >> i) & 1u) gens.push_back(variable_power(nvars, i, 1));
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.nvars_ != nvars_) throw InputError("ideals live in different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

std::uint64_t MonomialIdeal::max_generator_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Exponent MonomialIdeal::max_exponent(std::size_t var) const noexcept {
  Exponent e = 0;
  for (const auto& g : gens_) e = std::max(e, g[var]);
  return e;
}

MonomialIdeal normalize(std::size_t nvars, std::vector<ExponentVector> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

bool membership(const ExponentVector& m, const MonomialIdeal& a) {
  if (m.size() != a.nvars()) throw InputError("monomial has the wrong number of variables");
  return a.contains(m);
}

static void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw InputError("ideals live in different rings");
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) gens.push_back(x * y);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned n) {
  MonomialIdeal r = MonomialIdeal::unit(a.nvars());
  for (unsigned k = 0; k < n; ++k) r = ideal_product(r, a);
  return r;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const ExponentVector& m) {
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(g * m);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& m) {
  if (m.size() != a.nvars()) throw InputError("monomial has the wrong number of variables");
  std::vector<ExponentVector> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(colon_quotient(g, m));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw InputError("colon by the zero ideal");
  MonomialIdeal r = MonomialIdeal::unit(a.nvars());
  for (const auto& g : b.gens()) {
    r = intersection(r, colon(a, g));
    if (r == a) break;
  }
  return r;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal current = a;
  for (;;) {
    MonomialIdeal next = colon(current, b);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<ExponentVector> gens;
  for (const auto& g : a.gens()) {
    ExponentVector r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(std::move(r));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

bool in_radical(const ExponentVector& m, const MonomialIdeal& a) {
  const auto support = m.support_mask();
  return std::any_of(a.gens().begin(), a.gens().end(),
                     [&](const ExponentVector& g) { return (g.support_mask() & ~support) == 0; });
}

bool radical_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(b.gens().begin(), b.gens().end(), [&](const ExponentVector& g) { return in_radical(g, a); });
}

std::optional<Exponent> primarity_exponent(const MonomialIdeal& j) {
  if (j.is_zero()) return std::nullopt;
  Exponent c = 0;
  for (std::size_t i = 0; i < j.nvars(); ++i) {
    std::optional<Exponent> best;
    for (const auto& g : j.gens()) {
      if ((g.support_mask() & ~(std::uint64_t{1} << i)) != 0) continue;
      if (!best || g[i] < *best) best = g[i];
    }
    if (!best) return std::nullopt;
    c = std::max(c, *best);
  }
  return c;
}

std::uint64_t monomials_between(const MonomialIdeal& p, const MonomialIdeal& q, const MonomialIdeal& l) {
  require_same_ring(p, q);
  require_same_ring(p, l);
  const std::size_t s = p.nvars();
  if (s == 0) return (p.is_unit() && !q.is_unit() && !l.is_unit()) ? 1 : 0;
  if (p.is_zero()) return 0;

  std::vector<ExponentVector> all = p.gens();
  all.insert(all.end(), q.gens().begin(), q.gens().end());
  all.insert(all.end(), l.gens().begin(), l.gens().end());
  const auto extents = detail::StaircaseIndex::extents_of(s, all);

  const detail::StaircaseIndex tp(s, p.gens(), extents);
  const detail::StaircaseIndex tq(s, q.gens(), extents);
  const detail::StaircaseIndex tl(s, l.gens(), extents);

  std::vector<Exponent> prefix(s - 1, 0);
  std::uint64_t count = 0;
  for (std::size_t cell = 0; cell < tp.cells(); ++cell) {
    const Exponent lo = tp.threshold_at_cell(cell);
    if (lo != detail::StaircaseIndex::kInfinity) {
      const Exponent hi = std::min(tq.threshold_at_cell(cell), tl.threshold_at_cell(cell));
      if (hi > lo) {
        if (hi == detail::StaircaseIndex::kInfinity)
          throw NonArtinianError("monomial count is infinite along the last variable");
        for (std::size_t j = 0; j < prefix.size(); ++j)
          if (prefix[j] == extents[j])
            throw NonArtinianError("monomial count is infinite along variable " + std::to_string(j));
        count += hi - lo;
      }
    }
    // Advance the row-major prefix counter.
    for (std::size_t j = prefix.size(); j-- > 0;) {
      if (prefix[j] < extents[j]) {
        ++prefix[j];
        break;
      }
      prefix[j] = 0;
    }
  }
  return count;
}

std::vector<ExponentVector> monomials_up_to_degree(std::size_t nvars, unsigned bound) {
  std::vector<ExponentVector> out;
  ExponentVector cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned remaining) {
    if (var + 1 >= nvars) {
      if (nvars == 0) {
        out.push_back(cur);
        return;
      }
      for (unsigned e = 0; e <= remaining; ++e) {
        cur[var] = e;
        out.push_back(cur);
      }
      cur[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      cur[var] = e;
      rec(var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a > b;
  });
  return out;
}

}  // namespace mixmult
