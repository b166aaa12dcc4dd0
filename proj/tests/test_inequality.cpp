#include <doctest.h>

#include "cglab/errors.hpp"
#include "cglab/inequality.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace cglab;

namespace {
Rep S(Weight m) { return Rep::irreducible(m); }
const Rep kExampleV{{0, 1}, {2, 1}, {6, 1}};
const Rep kExampleW{{1, 1}, {3, 1}};
}  // namespace

TEST_CASE("d_zero") {
  CHECK(d_zero(S(0), S(1)) == 1);
  CHECK(d_zero(S(2), S(1)) == 1);
  CHECK(d_zero(kExampleV, kExampleW) == 5);
  CHECK(d_zero(Rep{}, Rep{}) == 0);
}

TEST_CASE("d_zero_same") {
  CHECK(d_zero_same(S(2), S(2)) == 0);
  CHECK(d_zero_same(S(0), S(2)) == 2);
  CHECK(d_zero_same(Rep{{0, 2}}, S(0)) == 1);
}

TEST_CASE("d_two") {
  CHECK(d_two(S(0), S(1)) == -1);
  CHECK(d_two(S(2), S(1)) == -1);
  CHECK(d_two(S(0), Rep{}) == 0);
}

TEST_CASE("deficits agree with the weight-multiset oracle, any parity") {
  for (int trial = 0; trial < 300; ++trial) {
    const Rep v = gen::rep(7, 3);
    const Rep w = gen::rep(7, 3);
    const auto dv = gen::as_vector(v), dw = gen::as_vector(w);
    CHECK(d_zero(v, w) == oracle::d_zero(dv, dw));
    CHECK(d_two(v, w) == oracle::d_two(dv, dw));
    CHECK(d_zero_same(v, w) == oracle::d_zero_same(dv, dw));
    CHECK(d_two(v, w) == d_zero(v, w) - endomorphism_dim(v) - endomorphism_dim(w));

    const auto sv = central_split(v);
    const auto sw = central_split(w);
    CHECK(d_zero(v, w) == d_zero(sv.plus, sw.minus) + d_zero(sw.plus, sv.minus));
  }
}

TEST_CASE("a coefficients") {
  ACoefficients c = a_coeffs(Rep{{0, 1}, {4, 1}}, Rep{{1, 2}});
  REQUIRE(c.d() == 2);
  CHECK(c.a(2) == 1);
  CHECK(c.a(1) == -1);
  CHECK(c.n0() == 1);

  c = a_coeffs(S(2), S(1));
  CHECK(c.d() == 1);
  CHECK(c.a(1) == 0);

  c = a_coeffs(S(0), S(1));
  CHECK(c.a(1) == -1);
  CHECK(c.n0() == 1);

  // W = 0 and V a multiple of Sym^0: d = 0, no a_i at all.
  c = a_coeffs(Rep{{0, 3}}, Rep{});
  CHECK(c.d() == 0);
  CHECK(c.n0() == 3);
  CHECK(c.a1_or_zero() == 0);

  // n_d may be zero under the shared-d convention.
  c = a_coeffs(S(0), S(5));
  CHECK(c.d() == 3);
  CHECK(c.n(3) == 0);
  CHECK(c.a(3) == -1);

  CHECK_THROWS_AS(a_coeffs(S(1), S(1)), ParityError);
  CHECK_THROWS_AS(a_coeffs(Rep{{0, 1}, {1, 1}}, Rep{}), ParityError);
  CHECK_THROWS_AS(a_coeffs(S(0), S(2)), ParityError);
}

TEST_CASE("a coefficient recurrences") {
  for (int trial = 0; trial < 100; ++trial) {
    const Rep v = gen::rep(8, 3, Parity::even);
    const Rep w = gen::rep(8, 3, Parity::odd);
    const ACoefficients c = a_coeffs(v, w);
    if (c.d() == 0) continue;
    CHECK(c.a(c.d()) == c.n(c.d()) - c.m(c.d()));
    for (int i = 1; i < c.d(); ++i) CHECK(c.a(i) - c.a(i + 1) == c.n(i) - c.m(i));
  }
}

TEST_CASE("closed-form expansion") {
  CHECK(star_expansion(S(2), S(1), 6) == VirtualRep(S(4)));
  CHECK(star_expansion(S(0), S(1), 4) == VirtualRep{{6, -1}});
  CHECK(star_expansion(Rep{}, Rep{}, 2).is_zero());
  CHECK(star_expansion(Rep{}, Rep{}, 10).is_zero());

  const auto terms = star_terms(S(2), S(1), 6);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].label == "a1");
  CHECK(terms[0].weight == 8);
  CHECK(terms[0].coefficient == 0);
  CHECK(terms[1].label == "middle");
  CHECK(terms[1].weight == 6);
  CHECK(terms[1].coefficient == 0);
  CHECK(terms[2].label == "a1+m1");
  CHECK(terms[2].weight == 4);
  CHECK(terms[2].coefficient == 1);

  CHECK(star_threshold(S(2), S(1)) == 4);
  CHECK_THROWS_AS(star_expansion(S(2), S(1), 3), PreconditionError);
  CHECK_THROWS_AS(star_expansion(S(1), S(1), 8), ParityError);
}

TEST_CASE("closed-form expansion equals the Clebsch-Gordan difference") {
  for (int trial = 0; trial < 200; ++trial) {
    const Rep v = gen::rep(8, 3, Parity::even);
    const Rep w = gen::rep(8, 3, Parity::odd);
    const int base = star_threshold(v, w);
    for (int n = base; n <= base + 3; ++n) CHECK(star_expansion(v, w, n) == formal_difference(v, w, n, 1));
  }
}

TEST_CASE("L2 norm of the shifted difference") {
  CHECK(formal_difference(S(2), S(1), 6, 1) == VirtualRep(S(4)));
  CHECK(formal_difference(S(2), S(1), 6, -1) == VirtualRep(S(8)));
  CHECK(l2_difference(S(2), S(1), 6, L2Variant::n_plus_1) == 1);
  CHECK(l2_difference(S(2), S(1), 6, L2Variant::n_minus_1) == 1);
  CHECK(l2_difference(Rep{}, Rep{}, 5, L2Variant::n_plus_1) == 0);
  CHECK(l2_difference(Rep{}, Rep{}, 0, L2Variant::n_minus_1) == 0);
  // St_{-1} = 0
  CHECK(formal_difference(S(0), S(1), 0, -1) == VirtualRep(S(0)));
}

TEST_CASE("L2 norm stabilizes at d_zero above the threshold") {
  for (int trial = 0; trial < 200; ++trial) {
    const Rep v = gen::rep(8, 3, Parity::even);
    const Rep w = gen::rep(8, 3, Parity::odd);
    const Mult expected = d_zero(v, w);
    CHECK(section3_identity(v, w) == expected);
    const int n0 = stability_threshold(v, w);
    for (int n = n0; n <= n0 + 3; ++n) {
      CHECK(l2_difference(v, w, n, L2Variant::n_plus_1) == expected);
      CHECK(l2_difference(v, w, n, L2Variant::n_minus_1) == expected);
    }
  }
}

TEST_CASE("closed-form L2 identity") {
  CHECK(section3_identity(S(2), S(1)) == 1);
  CHECK(section3_identity(S(0), S(1)) == 1);
  CHECK(section3_identity(kExampleV, kExampleW) == 5);
  CHECK(section3_identity(Rep{{0, 3}}, Rep{}) == 9);
  CHECK_THROWS_AS(section3_identity(S(1), S(2)), ParityError);
}

TEST_CASE("lower bound, doubled") {
  CHECK(lemma2_lower_twice(S(2), S(1)) == 2);
  CHECK(2 * d_zero(S(2), S(1)) == 2);
  CHECK(lemma2_lower_twice(S(0), S(1)) == 1);
  CHECK(2 * d_zero(S(0), S(1)) == 2);
  CHECK(lemma2_lower_twice(Rep{{0, 2}, {2, 1}}, S(1)) == 6);
  CHECK_THROWS_AS(lemma2_lower_twice(Rep{{0, 2}}, Rep{}), PreconditionError);
  CHECK_THROWS_AS(lemma2_lower_twice(Rep{}, Rep{}), PreconditionError);
}

TEST_CASE("corollary slack") {
  CHECK(corollary_check(S(2), S(1)) == 1);
  CHECK(corollary_check(S(0), S(1)) == 1);
  CHECK(corollary_check(Rep{}, Rep{}) == 0);
  CHECK_THROWS_AS(corollary_check(Rep{{0, 1}, {1, 1}}, S(1)), ParityError);
}

TEST_CASE("upper bound under the Young hypotheses") {
  CHECK(prop1_upper(S(2), S(1)) == 1);
  CHECK(d_zero(S(2), S(1)) == 1);
  CHECK(prop1_upper(S(0), S(1)) == 1);
  CHECK(d_zero(S(0), S(1)) == 1);
  CHECK_THROWS_AS(prop1_upper(Rep{{1, 1}, {2, 1}}, S(1)), ParityError);
  CHECK_THROWS_AS(prop1_upper(Rep{{2, 1}, {4, 1}}, S(1)), ConditionsNotMetError);
  // ConditionsNotMetError and ParityError are distinct types under one base.
  CHECK_THROWS_AS(prop1_upper(Rep{{2, 1}, {4, 1}}, S(1)), PreconditionError);
}

TEST_CASE("profile") {
  InequalityProfile p = make_profile(S(2), S(1));
  CHECK(p.d0 == 1);
  CHECK(p.d2 == -1);
  CHECK(p.dim_diff == 1);
  CHECK(p.split_pair);
  CHECK(p.lemma2_lower_twice == 2);
  CHECK(p.corollary_slack == 1);
  CHECK(p.prop1_applicable);
  CHECK(p.prop1_upper == 1);

  p = make_profile(S(0), S(1));
  CHECK(p.d0 == 1);
  CHECK(p.d2 == -1);
  CHECK(p.dim_diff == -1);

  p = make_profile(Rep{}, Rep{});
  CHECK(p.d0 == 0);
  CHECK(p.d2 == 0);
  CHECK(p.dim_diff == 0);
  CHECK_FALSE(p.lemma2_lower_twice.has_value());

  p = make_profile(Rep{{0, 1}, {1, 1}}, S(2));
  CHECK_FALSE(p.split_pair);
  CHECK_FALSE(p.corollary_slack.has_value());
  CHECK_FALSE(p.prop1_applicable);

  for (int trial = 0; trial < 100; ++trial) {
    const Rep v = gen::rep(8, 3, Parity::even);
    const Rep w = gen::rep(8, 3, Parity::odd);
    p = make_profile(v, w);
    CHECK(p.d2 == p.d0 - endomorphism_dim(v) - endomorphism_dim(w));
    if (!v.is_zero() && !w.is_zero()) CHECK(p.d0 >= 1);
  }
}
