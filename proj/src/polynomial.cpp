#include "mixmult/polynomial.hpp"

#include <numeric>

#include "mixmult/errors.hpp"

namespace mixmult {

Rational ExactPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExactPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw InputError("term has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ExactPolynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

ExactPolynomial ExactPolynomial::homogeneous_part(unsigned degree) const {
  ExactPolynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) == degree) out.terms_.emplace(e, c);
  return out;
}

Rational ExactPolynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has the wrong arity");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer mono = 1;
    for (std::size_t i = 0; i < nvars_; ++i) mono *= boost::multiprecision::pow(point[i], e[i]);
    sum += c * mono;
  }
  return sum;
}

Rational ExactPolynomial::evaluate(std::span<const unsigned> point) const {
  std::vector<Integer> p(point.begin(), point.end());
  return evaluate(std::span<const Integer>(p));
}

std::string to_string(const ExactPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<ExactPolynomial::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    auto db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    return da != db ? da > db : a.first > b.first;
  });
  for (const auto& [e, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "n" + std::to_string(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace mixmult
