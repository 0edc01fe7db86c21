#include <doctest.h>

#include "dgq/builders.hpp"
#include "dgq/cocycles.hpp"
#include "dgq/verify.hpp"
#include "dgq/weak_hopf.hpp"
#include "examples.hpp"

using namespace dgq;

TEST_CASE("trivial cochains are cocycles") {
  for (const auto& ex : examples::axiom_suite()) {
    CHECK(check_cocycle(ex.dgpd, trivial_sigma(ex.dgpd)).ok());
    CHECK(check_cocycle(ex.dgpd, trivial_tau(ex.dgpd)).ok());
  }
  CHECK(check_cocycle(ThreeCocycle::trivial(group_fixture("S3"))).ok());
}

TEST_CASE("sign 3-cocycle on C2") {
  const ThreeCocycle omega = sign_cocycle_c2();
  CHECK(check_cocycle(omega).ok());
  // Brute force: (-1)^(agh) on exponents.
  for (Id a = 0; a < 2; ++a)
    for (Id g = 0; g < 2; ++g)
      for (Id h = 0; h < 2; ++h) CHECK(omega.at(a, g, h) == Rational(a * g * h ? -1 : 1));
  const SigmaCochain sigma = sigma_from_omega(omega);
  const DoubleGroupoid t = vec_g_double_groupoid(group_fixture("C2"));
  CHECK(check_cocycle(t, sigma).ok());
  CHECK(check_sigma_product_rule(t, sigma).ok());
  bool has_minus = false;
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b = 0; b < t.num_boxes(); ++b) {
      const Rational& v = sigma.at(a, b);
      if (t.bottom(a) != t.top(b)) {
        CHECK(v == Rational(0));
        continue;
      }
      CHECK((v == Rational(1) || v == Rational(-1)));
      has_minus = has_minus || v == Rational(-1);
    }
  CHECK(has_minus);
}

TEST_CASE("trivial omega gives trivial sigma") {
  for (const char* g : {"C2", "C3", "S3"}) {
    const Groupoid group = group_fixture(g);
    CHECK(sigma_from_omega(ThreeCocycle::trivial(group)) == trivial_sigma(vec_g_double_groupoid(group)));
  }
}

TEST_CASE("a corrupted omega is rejected") {
  ThreeCocycle omega = sign_cocycle_c2();
  omega.values[1 * 4 + 1 * 2 + 0] = Rational(-1);  // omega(1, 1, 0)
  const ValidationReport r = check_cocycle(omega);
  CHECK(!r.ok());
  CHECK_THROWS_AS(sigma_from_omega(omega), std::invalid_argument);
}

TEST_CASE("a flipped tau value is caught with a witness triple") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  TauCochain tau = trivial_tau(t);
  // Box 3 = (1, 1) composes horizontally with itself.
  REQUIRE(t.right(3) == t.left(3));
  tau.set(3, 3, Rational(-1));
  const ValidationReport r = check_cocycle(t, tau);
  REQUIRE(r.has("cocycle-tau"));
  for (const auto& v : r.failures) CHECK(v.witness.size() == 3);

  TauCochain missing = trivial_tau(t);
  missing.set(0, 0, Rational(0));
  CHECK(check_cocycle(t, missing).has("domain"));
}

TEST_CASE("coboundary twists still give weak Hopf algebras") {
  const Groupoid c2 = group_fixture("C2");
  // Normalized alpha with alpha(1, 1) = 3.
  const ThreeCocycle d = coboundary(c2, {Rational(1), Rational(1), Rational(1), Rational(3)});
  CHECK(check_cocycle(d).ok());
  const VecGOmega v = vec_g_omega(d);
  const WeakHopf w = build_sigma_tau(v.dgpd, v.sigma, trivial_tau(v.dgpd));
  CHECK(w.compatibility().ok());
  CHECK(verify_axioms(w).ok());

  const Groupoid c3 = group_fixture("C3");
  std::vector<Rational> alpha(9, Rational(1));
  alpha[1 * 3 + 2] = Rational(2);
  alpha[2 * 3 + 2] = Rational(1, 5);
  const ThreeCocycle d3 = coboundary(c3, alpha);
  CHECK(check_cocycle(d3).ok());
  const VecGOmega v3 = vec_g_omega(d3);
  CHECK(check_sigma_product_rule(v3.dgpd, v3.sigma).ok());
  CHECK(verify_axioms(build_sigma_tau(v3.dgpd, v3.sigma, trivial_tau(v3.dgpd))).ok());
}

TEST_CASE("compatibility of untwisted weights") {
  // Vacant: everything passes. Non-vacant: the multiplicativity condition fails.
  for (const auto& t : {examples::matched_pair_s3(), vec_g_double_groupoid(group_fixture("C2")),
                        vec_g_double_groupoid(group_fixture("C3"))})
    CHECK(check_compatibility(t, trivial_sigma(t), trivial_tau(t)).ok());
  for (const auto& t : {bimodule_dgpd(group_fixture("C2")), no_siempre(1, 1).dgpd,
                        comma(group_fixture("S3"), subgroup_fixture("S3", "S2"))})
    CHECK(check_compatibility(t, trivial_sigma(t), trivial_tau(t)).has("multiplicativa"));
}

TEST_CASE("compatibility of weights agrees with admissibility") {
  std::vector<DoubleGroupoid> all;
  for (const auto& ex : examples::axiom_suite()) all.push_back(ex.dgpd);
  for (const auto& t : all) {
    for (const ThetaWeights& w : {ThetaWeights::canonical(t), ThetaWeights::constant(t.num_points(), Rational(1)),
                                  ThetaWeights::constant(t.num_points(), Rational(1, 2))}) {
      const TauCochain tau = make_tau(t, [&](Id, Id c) { return w.daleth(t, c); });
      CHECK(check_compatibility(t, trivial_sigma(t), tau).ok() == check_theta_admissible(t, w).empty());
    }
  }
}

TEST_CASE("unit and counit configurations exist and are unique") {
  for (const auto& t : {bimodule_dgpd(group_fixture("C2")), no_siempre(1, 1).dgpd}) {
    Id units = 0, counits = 0;
    for (const auto& [a, b, c] : horizontal_triples(t)) {
      if (!t.is_vertical_identity(t.hcompose(t.hcompose(a, b), c))) continue;
      UnitConfiguration u;
      REQUIRE(unit_configuration(t, a, b, c, &u));
      CHECK(t.vcompose(u.u, u.v) == b);
      CHECK(t.vcompose(u.w, u.z) == b);
      CHECK(t.is_vertical_identity(t.hcompose(a, u.u)));
      CHECK(t.is_vertical_identity(t.hcompose(u.v, c)));
      ++units;
    }
    for (const auto& [a, b, c] : vertical_triples(t)) {
      if (!t.is_horizontal_identity(t.vcompose(t.vcompose(a, b), c))) continue;
      UnitConfiguration u;
      REQUIRE(counit_configuration(t, a, b, c, &u));
      CHECK(t.hcompose(u.u, u.v) == b);
      CHECK(t.hcompose(u.w, u.z) == b);
      ++counits;
    }
    CHECK(units > 0);
    CHECK(counits > 0);
  }
}

TEST_CASE("cocycle preconditions are enforced at construction") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  SigmaCochain bad = trivial_sigma(t);
  bad.set(0, 0, Rational(0));
  CHECK_THROWS_AS(build_sigma_tau(t, bad, trivial_tau(t)), std::invalid_argument);
}
