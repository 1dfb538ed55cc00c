#include <doctest.h>

#include "mixmult/errors.hpp"
#include "mixmult/report.hpp"
#include "mixmult/verify.hpp"
#include "support.hpp"

using namespace mixmult;
using support::mono;
using support::system;

namespace {

Integer value(const LabeledValues& vs, const std::string& label) {
  for (const auto& [l, v] : vs)
    if (l == label) return v;
  FAIL("missing label " << label);
  return -1;
}

MonomialIdeal ideal(std::size_t s, const std::vector<std::string>& g) { return parse_ideal(support::xyz(s), g); }

}  // namespace

TEST_CASE("grade keys") {
  CHECK(grade_key({1, 0, 2}) == "1,0,2");
  CHECK(grade_key({}) == "");
}

TEST_CASE("additivity examples") {
  auto r = verify_additivity(system(2, {"x", "y"}, {{"x"}}, {"x*y"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "0,0") == 1);
  CHECK(value(r.rhs, "0,0") == 1);
  CHECK(r.witnesses["pi"].size() == 1);

  r = verify_additivity(system(2, {"x", "y"}, {{"x", "y"}}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "1,0") == 1);
  CHECK(value(r.lhs, "0,1") == 1);

  r = verify_additivity(system(2, {"x", "y"}, {{"y"}}, {"x^2", "x*y"}));
  CHECK(r.verdict == Verdict::verified);
}

TEST_CASE("additivity with a multiple component") {
  // R/(x^2 y) with I = (x, y): Π = {(x) with length 2, (y) with length 1}.
  const auto r = verify_additivity(system(2, {"x", "y"}, {{"x", "y"}}, {"x^2*y"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "0,0") == 3);
}

TEST_CASE("scaling examples") {
  auto r = verify_scaling(system(2, {"x", "y"}, {{"x", "y"}}), {3});
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "1,0") == 1);
  CHECK(value(r.lhs, "0,1") == 3);
  CHECK(value(r.lhs, "tilde_e") == 4);

  CHECK(verify_scaling(system(3, {"x", "y", "z"}, {{"x"}, {"y", "z"}}), {1, 1}).verdict == Verdict::verified);

  r = verify_scaling(system(2, {"x", "y"}, {{"x"}}), {5});
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "1,0") == 1);
  CHECK(value(r.lhs, "0,1") == 0);

  CHECK_THROWS_AS(verify_scaling(system(2, {"x", "y"}, {{"x"}}), {1, 2}), InputError);
  CHECK_THROWS_AS(verify_scaling(system(2, {"x", "y"}, {{"x"}}), {0}), InputError);
}

TEST_CASE("exact sequence examples") {
  const auto base = system(2, {"x", "y"}, {{"x", "y"}});
  auto r = verify_exact_sequence(base, ideal(2, {"x^2"}), ideal(2, {"x"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["branch"] == "equal");
  CHECK(value(r.lhs, "0,0") == 2);
  CHECK(value(r.rhs, "0,0") == 2);

  r = verify_exact_sequence(base, ideal(2, {"x*y"}), ideal(2, {"x*y"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["dims"]["sub"] == -1);

  r = verify_exact_sequence(system(2, {"x", "y"}, {{"x"}}), ideal(2, {"x*y"}), ideal(2, {"y"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["dims"]["middle"] == 1);

  r = verify_exact_sequence(base, MonomialIdeal::zero(2), ideal(2, {"x"}));
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["branch"] == "quotient-drop");

  CHECK_THROWS_AS(verify_exact_sequence(base, ideal(2, {"x"}), ideal(2, {"x^2"})), InputError);
}

TEST_CASE("recursion examples") {
  const auto mm = system(2, {"x", "y"}, {{"x", "y"}});
  auto r = verify_recursion(mm, {mono(2, "x"), 1}, 1);
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "quotient_tilde_e") == 1);
  CHECK(value(r.lhs, "dropped_tilde_e") == 1);
  CHECK(value(r.lhs, "splitting") == 2);
  CHECK(value(r.lhs, "shift:0,1") == 1);

  r = verify_recursion(system(2, {"x", "y"}, {{"x"}}), {mono(2, "x"), 1}, 2);
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["hypothesis_holds"] == false);
  CHECK(value(r.lhs, "quotient_tilde_e") == 0);

  // x is a zero divisor on R/(x^2): no certificate.
  r = verify_recursion(system(2, {"x", "y"}, {{"x", "y"}}, {"x^2"}), {mono(2, "x"), 1}, 2);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("recursion over two ideals") {
  const auto sys = system(3, {"x", "y", "z"}, {{"x", "y"}, {"z"}});
  const auto r = verify_recursion(sys, {mono(3, "x"), 1}, 2);
  CHECK(r.verdict == Verdict::verified);
}

TEST_CASE("chain examples") {
  auto r = verify_chain(system(2, {"x", "y"}, {{"x", "y"}}), {{mono(2, "x"), 1}});
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "tilde_e") == 2);
  CHECK(value(r.rhs, "tilde_e") == 2);
  CHECK(r.witnesses["p"] == 1);

  r = verify_chain(system(2, {"x", "y"}, {{"x"}}), {});
  CHECK(r.verdict == Verdict::verified);
  CHECK(value(r.lhs, "tilde_e") == 1);

  r = verify_chain(system(1, {"x"}, {{"x"}}), {});
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["p"] == 0);

  CHECK(verify_chain(system(2, {"x", "y"}, {{"x", "y"}}), {}).verdict == Verdict::inconclusive);
  CHECK_THROWS_AS(verify_chain(system(3, {"x", "y", "z"}, {{"x"}, {"y"}}), {}), InputError);
}

TEST_CASE("chain search") {
  const auto chain = find_chain(system(3, {"x", "y", "z"}, {{"x", "y", "z"}}));
  REQUIRE(chain.has_value());
  CHECK(chain->size() == 2);
  CHECK(verify_chain(system(3, {"x", "y", "z"}, {{"x", "y", "z"}}), *chain).verdict == Verdict::verified);
}

TEST_CASE("degree law and saturation invariance") {
  const auto sys = system(3, {"x", "y", "z^2"}, {{"x*y", "z"}}, {"x^2*z"});
  CHECK(verify_degree_law(sys).verdict == Verdict::verified);
  CHECK(verify_saturation_invariance(sys).verdict == Verdict::verified);
}

TEST_CASE("stabilization limits make reports inconclusive") {
  VerifyOptions opts;
  opts.fit.initial_offset = 2;
  opts.fit.offset_cap = 1;
  const auto r = verify_additivity(system(2, {"x", "y"}, {{"x", "y"}}), opts);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("report json") {
  const auto j = to_json(verify_scaling(system(2, {"x", "y"}, {{"x", "y"}}), {3}));
  CHECK(j["verdict"] == "verified");
  CHECK(j["lhs"]["0,1"] == 3);
  CHECK(j["theorem"] == "scaling");
  const auto fit = to_json(fit_bhattacharya(system(2, {"x", "y"}, {{"x", "y"}})));
  CHECK(fit["mixed"]["1,0"] == 1);
  CHECK(fit["polynomial"]["terms"]["0,0"] == "1/1");
  CHECK(integer_json(Integer(1) << 70).is_string());
}
