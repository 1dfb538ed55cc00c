#include "mixmult/subquotient.hpp"

#include "mixmult/errors.hpp"

namespace mixmult {

MonomialSubquotient::MonomialSubquotient(MonomialIdeal upper, MonomialIdeal lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.nvars() != lower_.nvars()) throw InputError("module ideals live in different rings");
  if (!upper_.contains(lower_)) lower_ = intersection(lower_, upper_);
}

MonomialSubquotient MonomialSubquotient::cyclic(const MonomialIdeal& lower) {
  return MonomialSubquotient(MonomialIdeal::unit(lower.nvars()), lower);
}

MonomialIdeal annihilator(const MonomialSubquotient& n) {
  if (n.upper().is_zero()) return MonomialIdeal::unit(n.nvars());
  return colon(n.lower(), n.upper());
}

MonomialSubquotient saturate_module(const MonomialSubquotient& n, const MonomialIdeal& b) {
  return MonomialSubquotient(n.upper(), intersection(saturate(n.lower(), b), n.upper()));
}

MonomialSubquotient quotient_by(const MonomialSubquotient& n, const MonomialIdeal& a) {
  return MonomialSubquotient(n.upper(), ideal_sum(n.lower(), ideal_product(a, n.upper())));
}

MonomialSubquotient scale_module(const MonomialSubquotient& n, const MonomialIdeal& a) {
  return MonomialSubquotient(ideal_product(a, n.upper()), n.lower());
}

}  // namespace mixmult
