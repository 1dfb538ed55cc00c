#include "mixmult/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "mixmult/errors.hpp"
#include "mixmult/primes.hpp"

namespace mixmult {

MultiIdealSystem::MultiIdealSystem(VariableContext ctx, MonomialIdeal j, std::vector<MonomialIdeal> ideals,
                                   MonomialSubquotient n)
    : ctx_(std::move(ctx)), j_(std::move(j)), ideals_(std::move(ideals)), n_(std::move(n)) {
  const std::size_t s = ctx_.size();
  if (j_.nvars() != s || n_.nvars() != s) throw InputError("ideal does not match the variable context");
  for (const auto& i : ideals_)
    if (i.nvars() != s) throw InputError("ideal does not match the variable context");
  if (!is_maximal_primary(j_)) throw InputError("J must be primary to the maximal ideal (contain a power of every variable)");
  product_ = MonomialIdeal::unit(s);
  for (const auto& i : ideals_) product_ = ideal_product(product_, i);
}

MonomialSubquotient MultiIdealSystem::saturated_module() const { return saturate_module(n_, product_); }

bool MultiIdealSystem::is_degenerate() const {
  if (n_.is_zero()) return true;
  return radical_contains(annihilator(n_), product_);
}

void MultiIdealSystem::require_non_degenerate() const {
  if (is_degenerate())
    throw DegenerateSystemError(
        "degenerate system: I = I_1...I_d is contained in the radical of Ann N (standing hypothesis violated)");
}

MultiIdealSystem MultiIdealSystem::with_module(MonomialSubquotient n) const {
  return MultiIdealSystem(ctx_, j_, ideals_, std::move(n));
}

MultiIdealSystem MultiIdealSystem::with_ideals(std::vector<MonomialIdeal> ideals) const {
  return MultiIdealSystem(ctx_, j_, std::move(ideals), n_);
}

struct FiberLengths::Impl {
  MonomialIdeal lower;
  std::vector<MonomialIdeal> factors;  // J, I_1, ..., I_d
  MonomialIdeal base;                  // U
  std::map<GradeIndex, MonomialIdeal> uppers;

  const MonomialIdeal& upper(const GradeIndex& n) {
    if (auto it = uppers.find(n); it != uppers.end()) return it->second;
    // Walk down to the nearest memoized grade, then multiply back up.
    std::vector<GradeIndex> path;
    GradeIndex cur = n;
    const MonomialIdeal* start = nullptr;
    for (;;) {
      if (auto it = uppers.find(cur); it != uppers.end()) {
        start = &it->second;
        break;
      }
      auto nz = std::find_if(cur.begin(), cur.end(), [](unsigned v) { return v != 0; });
      if (nz == cur.end()) {
        start = &uppers.emplace(cur, base).first->second;
        break;
      }
      path.push_back(cur);
      --*nz;
    }
    const MonomialIdeal* prev = start;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const GradeIndex& g = *it;
      auto nz = std::find_if(g.begin(), g.end(), [](unsigned v) { return v != 0; });
      const auto axis = static_cast<std::size_t>(nz - g.begin());
      prev = &uppers.emplace(g, ideal_product(factors[axis], *prev)).first->second;
    }
    return *prev;
  }
};

FiberLengths::FiberLengths(const MultiIdealSystem& system) : impl_(std::make_unique<Impl>()) {
  impl_->lower = system.module().lower();
  impl_->base = system.module().upper();
  impl_->factors.push_back(system.j());
  for (const auto& i : system.ideals()) impl_->factors.push_back(i);
}

FiberLengths::~FiberLengths() = default;

const MonomialIdeal& FiberLengths::upper_ideal(const GradeIndex& n) {
  if (n.size() != impl_->factors.size()) throw InputError("grade index has the wrong arity");
  return impl_->upper(n);
}

std::uint64_t FiberLengths::at(const GradeIndex& n) {
  GradeIndex next = n;
  next.at(0) += 1;
  // Copy: the second lookup may rehash nothing (std::map), but keep the
  // reference independent of insertion order anyway.
  const MonomialIdeal p = upper_ideal(n);
  const MonomialIdeal& q = upper_ideal(next);
  return monomials_between(p, q, impl_->lower);
}

std::uint64_t graded_piece_length(const MultiIdealSystem& system, unsigned n0, const std::vector<unsigned>& n) {
  if (n.size() != system.d()) throw InputError("grade index has the wrong arity");
  GradeIndex g;
  g.push_back(n0);
  g.insert(g.end(), n.begin(), n.end());
  FiberLengths lengths(system);
  return lengths.at(g);
}

namespace {

std::vector<GradeIndex> box_points(std::size_t nvars, unsigned offset, unsigned side) {
  std::vector<GradeIndex> out;
  if (side == 0) return out;
  GradeIndex cur(nvars, offset);
  for (;;) {
    out.push_back(cur);
    std::size_t k = nvars;
    while (k-- > 0) {
      if (cur[k] + 1 < offset + side) {
        ++cur[k];
        break;
      }
      cur[k] = offset;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

LengthTable sample_box(FiberLengths& lengths, std::size_t nvars, unsigned offset, unsigned side) {
  LengthTable t;
  t.offset = offset;
  for (const auto& g : box_points(nvars, offset, side)) t.entries.emplace(g, lengths.at(g));
  return t;
}

}  // namespace

LengthTable length_table(const MultiIdealSystem& system, unsigned offset, unsigned side) {
  FiberLengths lengths(system);
  return sample_box(lengths, system.d() + 1, offset, side);
}

ExactPolynomial interpolate_tensor_grid(std::size_t nvars, unsigned offset, unsigned side,
                                        const std::map<GradeIndex, std::uint64_t>& values) {
  const auto points = box_points(nvars, offset, side);
  const auto basis = box_points(nvars, 0, side);
  const std::size_t m = points.size();
  if (values.size() < m) throw InputError("interpolation grid is incomplete");

  // Augmented Vandermonde system, reduced by Bareiss fraction-free elimination.
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      Integer v = 1;
      for (std::size_t k = 0; k < nvars; ++k) v *= boost::multiprecision::pow(Integer(points[r][k]), basis[c][k]);
      a[r][c] = v;
    }
    auto it = values.find(points[r]);
    if (it == values.end()) throw InputError("interpolation grid is incomplete");
    a[r][m] = it->second;
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    while (piv < m && a[piv][k] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular interpolation system");
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  std::vector<Rational> x(m);
  for (std::size_t k = m; k-- > 0;) {
    Rational acc = Rational(a[k][m]);
    for (std::size_t j = k + 1; j < m; ++j) acc -= Rational(a[k][j]) * x[j];
    x[k] = acc / Rational(a[k][k]);
  }

  ExactPolynomial poly(nvars);
  for (std::size_t c = 0; c < m; ++c) poly.add_term(basis[c], x[c]);
  return poly;
}

Integer BhattacharyaResult::mixed_at(const GradeIndex& k) const {
  if (!mixed.empty() && k.size() != mixed.begin()->first.size())
    throw InputError("mixed multiplicity type has the wrong arity");
  const long total = std::accumulate(k.begin(), k.end(), 0L);
  if (total > q - 1) return 0;
  if (total < q - 1) throw InputError("mixed multiplicity type below the leading degree");
  auto it = mixed.find(k);
  return it == mixed.end() ? Integer(0) : it->second;
}

BhattacharyaResult fit_bhattacharya(const MultiIdealSystem& system, const FitOptions& options) {
  system.require_non_degenerate();
  const int q = dimension(system.saturated_module());
  if (q <= 0) throw DegenerateSystemError("the saturated module N/(0_N : I^inf) has dimension 0");
  const std::size_t nv = system.d() + 1;
  const auto side = static_cast<unsigned>(q);

  FiberLengths lengths(system);
  unsigned b = options.initial_offset;
  unsigned last_tried = b;
  while (b <= options.offset_cap) {
    last_tried = b;
    BhattacharyaResult r;
    r.q = q;
    r.offset = b;
    r.fit_samples = sample_box(lengths, nv, b, side);
    r.polynomial = interpolate_tensor_grid(nv, b, side, r.fit_samples.entries);

    bool ok = r.polynomial.total_degree() <= q - 1;
    if (ok) {
      r.validation_samples = sample_box(lengths, nv, b + side, side + 1);
      for (const auto& [g, value] : r.validation_samples.entries)
        if (r.polynomial.evaluate(std::span<const unsigned>(g)) != Rational(value)) {
          ok = false;
          break;
        }
    }
    if (ok) {
      r.leading_form = r.polynomial.homogeneous_part(side - 1);
      r.tilde_e = 0;
      for (const auto& k : box_points(nv, 0, side)) {
        if (std::accumulate(k.begin(), k.end(), 0u) != side - 1) continue;
        Rational v = r.leading_form.coefficient(k);
        for (unsigned ki : k) v *= factorial(ki);
        if (boost::multiprecision::denominator(v) != 1) throw std::logic_error("non-integral mixed multiplicity");
        Integer e = boost::multiprecision::numerator(v);
        r.mixed.emplace(k, e);
        r.tilde_e += e;
      }
      return r;
    }
    b = b == 0 ? 1 : 2 * b;
  }
  throw NonStabilizedError("length grid did not stabilize up to offset cap " + std::to_string(options.offset_cap),
                           last_tried);
}

Integer samuel_multiplicity(const VariableContext& ctx, const MonomialIdeal& j, const MonomialSubquotient& n,
                            const FitOptions& options) {
  MultiIdealSystem system(ctx, j, {}, n);
  auto r = fit_bhattacharya(system, options);
  return r.mixed.begin()->second;
}

Integer rees_multiplicity(const MultiIdealSystem& system, const FitOptions& options) {
  return fit_bhattacharya(system, options).tilde_e;
}

}  // namespace mixmult
