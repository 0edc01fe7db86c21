#include <doctest.h>

#include <algorithm>

#include "dgq/builders.hpp"
#include "dgq/core_groupoids.hpp"
#include "dgq/representations.hpp"
#include "dgq/wha_extras.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace dgq;

namespace {

DoubleGroupoid comma_s3_s2() { return comma(group_fixture("S3"), subgroup_fixture("S3", "S2")); }

std::vector<Id> class_sizes(const std::vector<ClassData>& cs) {
  std::vector<Id> out;
  for (const auto& c : cs) out.push_back(static_cast<Id>(c.members.size()));
  std::sort(out.begin(), out.end());
  return out;
}

Rational class_weight_sum(const DoubleGroupoid& t, const ThetaWeights& w, const ClassData& c) {
  Rational s(0);
  for (Id y : c.members) s += w.at(t.l(y)) / w.at(t.r(y));
  return s;
}

}  // namespace

TEST_CASE("vertical classes") {
  for (const char* g : {"C2", "C3", "S3"}) {
    const Groupoid group = group_fixture(g);
    const DoubleGroupoid t = bimodule_dgpd(group);
    const auto cs = vertical_classes(t);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].loops.size() == static_cast<std::size_t>(t.num_boxes()));
    const auto [gg, pairs] = direct_product(group, group);
    CHECK(oracle::isomorphic(cs[0].loop_group, gg));
  }
  const auto cs = vertical_classes(comma_s3_s2());
  CHECK(class_sizes(cs) == std::vector<Id>{2, 4});
  std::vector<Id> loops;
  for (const auto& c : cs) loops.push_back(static_cast<Id>(c.loops.size()));
  std::sort(loops.begin(), loops.end());
  CHECK(loops == std::vector<Id>{1, 2});

  const auto d = vertical_classes(discrete_double_groupoid(4));
  CHECK(d.size() == 4);
  for (const auto& c : d) CHECK(c.loops.size() == 1);
}

TEST_CASE("decomposition count matches the number of boxes") {
  std::vector<DoubleGroupoid> all;
  for (const auto& ex : examples::axiom_suite()) all.push_back(ex.dgpd);
  all.push_back(no_siempre(2, 3).dgpd);
  all.push_back(comma(group_fixture("S3"), subgroup_fixture("S3", "A3")));
  for (const auto& t : all) {
    Id total = 0;
    for (const auto& c : vertical_classes(t)) {
      Id loops = 0;
      for (Id d : irreducible_dims(c.loop_group)) loops += d * d;
      CHECK(loops == static_cast<Id>(c.loops.size()));
      const auto x = static_cast<Id>(c.members.size());
      total += x * x * loops;
    }
    CHECK(total == t.num_boxes());
  }
}

TEST_CASE("conjugacy classes and irreducible dimensions") {
  for (const char* g : {"C1", "C2", "C5", "S3", "S4", "A3"}) {
    const Groupoid group = group_fixture(g);
    auto classes = conjugacy_classes(group);
    auto brute = oracle::classes(group);
    std::sort(brute.begin(), brute.end());
    std::sort(classes.begin(), classes.end());
    CHECK(classes == brute);
    CHECK(irreducible_dims(group) == oracle::irrep_dims(group));
    CHECK(irreducible_dims(group, 17) == irreducible_dims(group, 0));
  }
  CHECK(irreducible_dims(group_fixture("C1")) == std::vector<Id>{1});
  CHECK(irreducible_dims(group_fixture("C4")) == std::vector<Id>(4, 1));
  CHECK(irreducible_dims(group_fixture("S3")) == std::vector<Id>{1, 1, 2});
}

TEST_CASE("fusion verdicts") {
  CHECK(is_fusion(build_canonical(comma_s3_s2())).fusion());
  const FusionVerdict t2 = is_fusion(build_canonical(bimodule_dgpd(group_fixture("C2"))));
  CHECK(!t2.fusion());
  CHECK(t2.vertical_connected);
  CHECK(!t2.unique_bottoms);
  CHECK(t2.witness.size() == 3);
  CHECK(t2.unit_commutant == 2);
  const VecGOmega v = vec_g_omega(sign_cocycle_c2());
  const FusionVerdict vg = is_fusion(build_sigma_tau(v.dgpd, v.sigma, trivial_tau(v.dgpd)));
  CHECK(vg.fusion());
  CHECK(vg.unit_commutant == 1);
}

TEST_CASE("the shared bottom gives a proper submodule of the unit object") {
  const WeakHopf w = build_canonical(bimodule_dgpd(group_fixture("C2")));
  const Bundle unit = unit_bundle(w);
  CHECK(check_bundle(w.dgpd(), unit).ok());
  const auto witness = unit_reducibility_witness(w, unit);
  REQUIRE(witness.has_value());
  const Id r = rank(*witness);
  CHECK(r > 0);
  CHECK(r < unit.total());
  CHECK(is_submodule(unit, w.dgpd(), *witness));
  CHECK(!unit_reducibility_witness(build_canonical(comma_s3_s2()), unit_bundle(build_canonical(comma_s3_s2()))));
}

TEST_CASE("dimension tables") {
  const DimensionTable c = dimensions(build_canonical(comma_s3_s2()));
  std::vector<Rational> fp;
  for (const auto& s : c.simples) fp.push_back(*s.fpdim);
  std::sort(fp.begin(), fp.end());
  CHECK(fp == std::vector<Rational>{Rational(1), Rational(1), Rational(2)});
  CHECK(*c.fp_global == Rational(6));
  CHECK(c.global_dim == Rational(6));
  CHECK(c.integral);

  const DimensionTable d = dimensions(build_canonical(discrete_double_groupoid(1)));
  REQUIRE(d.simples.size() == 1);
  CHECK(d.simples[0].qdim == Rational(1));
  CHECK(*d.simples[0].fpdim == Rational(1));

  const VecGOmega v = vec_g_omega(sign_cocycle_c2());
  const DimensionTable vg = dimensions(build_sigma_tau(v.dgpd, v.sigma, trivial_tau(v.dgpd)));
  CHECK(vg.simples.size() == 2);
  for (const auto& s : vg.simples) CHECK(*s.fpdim == Rational(1));
  CHECK(vg.global_dim == Rational(2));

  // Trivial subgroup: every class is a singleton, |G| invertible simples.
  const DimensionTable triv = dimensions(build_canonical(comma(group_fixture("S3"), subgroup_fixture("S3", "C1"))));
  CHECK(triv.simples.size() == 6);
  for (const auto& s : triv.simples) CHECK(*s.fpdim == Rational(1));

  CHECK_THROWS_AS(dimensions(build_canonical(bimodule_dgpd(group_fixture("C2")))), std::domain_error);
  CHECK(dimensions_csv(c).starts_with("class,size,loop_order,irrep_dim,qdim,fpdim\n"));
}

TEST_CASE("bundles validate") {
  for (const auto& t : {bimodule_dgpd(group_fixture("C2")), comma_s3_s2(), no_siempre(1, 1).dgpd}) {
    const WeakHopf w = build_canonical(t);
    CHECK(check_bundle(t, regular_bundle(w)).ok());
    CHECK(check_bundle(t, unit_bundle(w)).ok());
    CHECK(regular_bundle(w).total() == t.num_boxes());
    CHECK(unit_bundle(w).total() == static_cast<Id>(build_core(t, CoreSide::E).carrier.size()));
    for (const auto& c : vertical_classes(t)) {
      const Bundle b = trivial_class_bundle(t, c.members);
      CHECK(check_bundle(t, b).ok());
      CHECK(check_bundle(t, dual_bundle(t, b)).ok());
    }
  }
}

TEST_CASE("a bundle with a wrong action is rejected") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  Bundle b = regular_bundle(build_canonical(t));
  b.action[1] = b.action[0];
  CHECK(!check_bundle(t, b).ok());
}

TEST_CASE("tensor with the unit object and duals") {
  for (const auto& t : {bimodule_dgpd(group_fixture("C2")), comma_s3_s2()}) {
    const WeakHopf w = build_canonical(t);
    const Bundle unit = unit_bundle(w);
    const Bundle reg = regular_bundle(w);
    CHECK(tensor_bundles(w, reg, unit).dims == reg.dims);
    CHECK(tensor_bundles(w, unit, reg).dims == reg.dims);
    CHECK(tensor_bundles(w, unit, unit).dims == unit.dims);
    CHECK(dual_bundle(t, unit).dims == unit.dims);
    CHECK(check_bundle(t, tensor_bundles(w, reg, unit)).ok());
  }
}

TEST_CASE("double dual and the pivotal element") {
  for (const auto& t : {bimodule_dgpd(group_fixture("C2")), no_siempre(1, 1).dgpd}) {
    const WeakHopf w = build_canonical(t);
    const Bundle reg = regular_bundle(w);
    const Bundle dd = dual_bundle(t, dual_bundle(t, reg));
    const RatMatrix g = act(reg, t, pivotal_element(w));
    const RatMatrix gi = act(reg, t, pivotal_inverse(w));
    for (Id a = 0; a < t.num_boxes(); ++a) {
      CHECK(act(dd, t, Element(a)) == act(reg, t, Element(a)));
      CHECK(act(reg, t, w.antipode(w.antipode(a))) == gi * act(reg, t, Element(a)) * g);
    }
  }
}

TEST_CASE("traces of the pivotal element on class bundles") {
  std::vector<DoubleGroupoid> all{comma_s3_s2(), no_siempre(1, 1).dgpd, no_siempre(3, 1).dgpd,
                                  bimodule_dgpd(group_fixture("coarse2"))};
  for (const auto& t : all) {
    const WeakHopf w = build_canonical(t);
    const ThetaWeights weights = ThetaWeights::canonical(t);
    for (const auto& c : vertical_classes(t)) {
      const Bundle b = trivial_class_bundle(t, c.members);
      CHECK(trace(b, t, pivotal_element(w)) == class_weight_sum(t, weights, c));
    }
  }
}

TEST_CASE("dual simples have the same quantum dimension") {
  const WeakHopf w = build_canonical(comma_s3_s2());
  const DoubleGroupoid& t = w.dgpd();
  for (const auto& c : vertical_classes(t)) {
    const Bundle b = trivial_class_bundle(t, c.members);
    CHECK(bundle_qdim(w, dual_bundle(t, b)) == bundle_qdim(w, b));
  }
}

TEST_CASE("FP dimension is multiplicative on tensor products") {
  const WeakHopf w = build_canonical(comma_s3_s2());
  const DoubleGroupoid& t = w.dgpd();
  const DimensionTable table = dimensions(w);
  std::vector<Bundle> bs;
  for (const auto& c : vertical_classes(t)) bs.push_back(trivial_class_bundle(t, c.members));
  for (const auto& a : bs)
    for (const auto& b : bs) {
      const Bundle ab = tensor_bundles(w, a, b);
      CHECK(check_bundle(t, ab).ok());
      CHECK(bundle_fpdim(table, ab) == bundle_fpdim(table, a) * bundle_fpdim(table, b));
    }
  // The size-4 class squared: graded dimension 4.
  for (const auto& c : vertical_classes(t))
    if (c.members.size() == 4) {
      const Bundle b = trivial_class_bundle(t, c.members);
      CHECK(bundle_fpdim(table, b) == Rational(2));
      CHECK(bundle_fpdim(table, tensor_bundles(w, b, b)) == Rational(4));
    }
}

TEST_CASE("commutants") {
  CHECK(commutant_dimension(comma_s3_s2(), unit_bundle(build_canonical(comma_s3_s2()))) == 1);
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  CHECK(commutant_dimension(t, unit_bundle(build_canonical(t))) == 2);
}
