#pragma once

// Naive reference implementations used as test oracles. They work on plain
// integer vectors and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Mono = std::vector<unsigned>;
using Gens = std::vector<Mono>;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool in(const Mono& m, const Gens& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Mono& g) { return divides(g, m); });
}

inline unsigned degree(const Mono& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

inline unsigned max_degree(const Gens& gens) {
  unsigned d = 0;
  for (const auto& g : gens) d = std::max(d, degree(g));
  return d;
}

/// Quadratic divisibility filter, sorted.
inline Gens minimalize(Gens gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Gens out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline Gens product(const Gens& a, const Gens& b) {
  Gens out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Mono m(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) m[i] = x[i] + y[i];
      out.push_back(m);
    }
  return minimalize(out);
}

inline Gens power(const Gens& a, unsigned n, std::size_t s) {
  Gens out{Mono(s, 0)};
  for (unsigned k = 0; k < n; ++k) out = product(out, a);
  return out;
}

/// All monomials in s variables of total degree ≤ bound.
inline std::vector<Mono> monomials(std::size_t s, unsigned bound) {
  std::vector<Mono> out;
  Mono cur(s, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == s) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

/// #{m : deg m ≤ bound, m ∈ P, m ∉ Q, m ∉ L}.
inline std::uint64_t count_between(const Gens& p, const Gens& q, const Gens& l, std::size_t s, unsigned bound) {
  std::uint64_t n = 0;
  for (const auto& m : monomials(s, bound)) n += in(m, p) && !in(m, q) && !in(m, l);
  return n;
}

/// Smallest c with x_i^c ∈ J for all i.
inline unsigned primarity(const Gens& j, std::size_t s) {
  unsigned c = 0;
  for (std::size_t i = 0; i < s; ++i) {
    unsigned best = ~0u;
    for (const auto& g : j) {
      bool pure = true;
      for (std::size_t k = 0; k < s; ++k) pure = pure && (k == i || g[k] == 0);
      if (pure) best = std::min(best, g[i]);
    }
    c = std::max(c, best);
  }
  return c;
}

/// ℓ(J^{n0} I^n U / (J^{n0+1} I^n U + L) ∩ ...) by a degree-bounded scan; the
/// bound maxdeg(P) + s·c is sound because m^{s(c-1)+1} ⊆ J.
inline std::uint64_t fiber_length(const Gens& j, const std::vector<Gens>& ideals, const Gens& u, const Gens& l,
                                  std::size_t s, const std::vector<unsigned>& n) {
  Gens p = product(power(j, n[0], s), u);
  for (std::size_t k = 0; k < ideals.size(); ++k) p = product(p, power(ideals[k], n[k + 1], s));
  const Gens q = product(p, j);
  return count_between(p, q, l, s, max_degree(p) + static_cast<unsigned>(s) * primarity(j, s));
}

/// Minimal monomial primes over a monomial ideal, as sorted subsets, by brute
/// force over all 2^s subsets.
inline std::vector<std::uint64_t> minimal_primes(const Gens& a, std::size_t s) {
  auto contains = [&](std::uint64_t mask) {
    for (const auto& g : a) {
      bool hit = false;
      for (std::size_t i = 0; i < s; ++i) hit = hit || (((mask >> i) & 1u) && g[i] > 0);
      if (!hit) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> covers;
  for (std::uint64_t mask = 0; mask < (1ull << s); ++mask)
    if (contains(mask)) covers.push_back(mask);
  std::vector<std::uint64_t> out;
  for (auto c : covers) {
    bool minimal = true;
    for (auto d : covers) minimal = minimal && !(d != c && (d & c) == d);
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficients of the tensor-grid interpolant in the monomial basis, by
/// multivariate Newton forward differences in binomial form.
inline std::map<std::vector<unsigned>, Rat> newton_interpolate(
    std::size_t nv, unsigned offset, unsigned side, const std::map<std::vector<unsigned>, std::uint64_t>& values) {
  // Forward differences along each axis in turn.
  std::map<std::vector<unsigned>, Rat> diff;
  for (const auto& [g, v] : values) {
    bool inside = true;
    std::vector<unsigned> local(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      inside = inside && g[i] >= offset && g[i] < offset + side;
      local[i] = g[i] - offset;
    }
    if (inside) diff[local] = Rat(v);
  }
  for (std::size_t axis = 0; axis < nv; ++axis)
    for (unsigned order = 1; order < side; ++order)
      for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
        auto key = it->first;
        if (key[axis] < order) continue;
        auto prev = key;
        --prev[axis];
        it->second -= diff.at(prev);
      }
  // diff[j] is now Δ^j f(offset). Expand Σ Δ^j ∏ C(n_i - b, j_i) in powers of n.
  // Univariate C(t - b, k) as coefficients in t.
  auto binom_poly = [&](unsigned k) {
    std::vector<Rat> c{Rat(1)};
    for (unsigned r = 0; r < k; ++r) {
      // multiply by (t - b - r) / (r + 1)
      std::vector<Rat> next(c.size() + 1);
      const Rat shift = Rat(-static_cast<long>(offset) - static_cast<long>(r));
      for (std::size_t e = 0; e < c.size(); ++e) {
        next[e + 1] += c[e] / Rat(r + 1);
        next[e] += c[e] * shift / Rat(r + 1);
      }
      c = next;
    }
    return c;
  };
  std::map<std::vector<unsigned>, Rat> coeffs;
  for (const auto& [j, d] : diff) {
    if (d == 0) continue;
    std::map<std::vector<unsigned>, Rat> term{{std::vector<unsigned>(nv, 0), d}};
    for (std::size_t axis = 0; axis < nv; ++axis) {
      const auto b = binom_poly(j[axis]);
      std::map<std::vector<unsigned>, Rat> next;
      for (const auto& [e, c] : term)
        for (std::size_t p = 0; p < b.size(); ++p) {
          if (b[p] == 0) continue;
          auto f = e;
          f[axis] += static_cast<unsigned>(p);
          next[f] += c * b[p];
        }
      term = next;
    }
    for (const auto& [e, c] : term) coeffs[e] += c;
  }
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  return coeffs;
}

/// Random monomial ideal with up to `max_gens` generators of degree in
/// [1, max_deg], drawn from `rng`.
inline Gens random_gens(std::mt19937_64& rng, std::size_t s, unsigned max_gens, unsigned max_deg) {
  Gens out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % max_gens);
  for (unsigned k = 0; k < count; ++k) {
    Mono m(s, 0);
    const unsigned deg = 1 + static_cast<unsigned>(rng() % max_deg);
    for (unsigned t = 0; t < deg; ++t) ++m[rng() % s];
    out.push_back(m);
  }
  return out;
}

}  // namespace oracle
