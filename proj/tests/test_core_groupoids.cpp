#include <doctest.h>

#include <set>

#include "dgq/builders.hpp"
#include "dgq/core_groupoids.hpp"
#include "dgq/weak_hopf.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace dgq;

namespace {

std::vector<DoubleGroupoid> samples() {
  std::vector<DoubleGroupoid> out;
  for (const auto& ex : examples::axiom_suite()) out.push_back(ex.dgpd);
  out.push_back(bimodule_dgpd(group_fixture("C3")));
  return out;
}

}  // namespace

TEST_CASE("core groupoids are groupoids over the points") {
  for (const auto& t : samples())
    for (CoreSide side : {CoreSide::D, CoreSide::E}) {
      const CoreGroupoid c = build_core(t, side);
      CHECK(validate_groupoid(c.as_groupoid).ok());
      CHECK(c.as_groupoid.num_objects() == t.num_points());
      for (Id p = 0; p < t.num_points(); ++p) CHECK(c.embed(c.as_groupoid.identity(p)) == t.theta_box(p));
      for (Id a = 0; a < t.num_boxes(); ++a) CHECK(c.contains(a) == (side == CoreSide::D ? in_d(t, a) : in_e(t, a)));
      // Composition in the groupoid is the displayed 2x2 product.
      for (Id f = 0; f < c.as_groupoid.num_arrows(); ++f)
        for (Id g = 0; g < c.as_groupoid.num_arrows(); ++g) {
          const Id fg = c.as_groupoid.compose(f, g);
          if (fg == kNone) continue;
          const Id want = side == CoreSide::D ? d_compose(t, c.embed(f), c.embed(g)) : e_compose(t, c.embed(f), c.embed(g));
          CHECK(c.embed(fg) == want);
        }
      for (Id f = 0; f < c.as_groupoid.num_arrows(); ++f) {
        const Id a = c.embed(f);
        CHECK(c.embed(c.as_groupoid.inverse(f)) == (side == CoreSide::D ? d_inverse(t, a) : e_inverse(t, a)));
      }
    }
}

TEST_CASE("vacant double groupoids have discrete cores") {
  for (const auto& t : {examples::matched_pair_s3(), vec_g_double_groupoid(group_fixture("C2")),
                        vec_g_double_groupoid(group_fixture("C3"))}) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    const CoreGroupoid e = build_core(t, CoreSide::E);
    CHECK(d.as_groupoid.num_arrows() == t.num_points());
    CHECK(e.as_groupoid.num_arrows() == t.num_points());
    const CoreDiagram cd = core_diagram(t, d);
    CHECK(cd.morphism.ok());
    std::set<Id> image(cd.image.begin(), cd.image.end());
    CHECK(image.size() == cd.image.size());
    for (Id p = 0; p < t.num_points(); ++p) CHECK(cd.kernel[p] == std::vector<Id>{t.theta_box(p)});
  }
}

TEST_CASE("core of T(G) and of the comma double groupoid") {
  for (const char* name : {"C2", "C3", "S3", "coarse2"}) {
    const Groupoid g = group_fixture(name);
    CHECK(oracle::isomorphic(build_core(bimodule_dgpd(g), CoreSide::D).as_groupoid, g));
  }
  const Groupoid s3 = group_fixture("S3");
  for (const char* f : {"S2", "A3"}) {
    auto [sub, ids] = wide_subgroupoid(s3, subgroup_fixture("S3", f));
    CHECK(oracle::isomorphic(build_core(comma(s3, subgroup_fixture("S3", f)), CoreSide::D).as_groupoid, sub));
  }
}

TEST_CASE("total inversion maps D onto E") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    const CoreGroupoid e = build_core(t, CoreSide::E);
    std::set<Id> image;
    for (Id a : d.carrier) {
      CHECK(e.contains(t.inv(a)));
      CHECK(core_source(t, CoreSide::E, t.inv(a)) == core_source(t, CoreSide::D, a));
      CHECK(core_target(t, CoreSide::E, t.inv(a)) == core_target(t, CoreSide::D, a));
      image.insert(t.inv(a));
    }
    CHECK(image.size() == e.carrier.size());
    for (Id a : d.carrier)
      for (Id l : d.carrier)
        if (core_target(t, CoreSide::D, a) == core_source(t, CoreSide::D, l))
          CHECK(t.inv(d_compose(t, a, l)) == e_compose(t, t.inv(a), t.inv(l)));
  }
}

TEST_CASE("dagger") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    for (Id p = 0; p < t.num_points(); ++p) CHECK(dagger(t, t.theta_box(p)) == t.theta_box(p));
    for (Id a : d.carrier) {
      const Id ad = dagger(t, a);
      CHECK(in_e(t, ad));
      CHECK(dagger(t, ad) == a);
      CHECK(ad == t.hcompose(t.hinv(a), t.vid(t.top(a))));
      CHECK(ad == t.inv(d_inverse(t, a)));
    }
    for (Id a : d.carrier)
      for (Id l : d.carrier)
        if (core_target(t, CoreSide::D, a) == core_source(t, CoreSide::D, l))
          CHECK(dagger(t, d_compose(t, a, l)) == e_compose(t, dagger(t, l), dagger(t, a)));
  }
  CHECK_THROWS_AS(dagger(bimodule_dgpd(group_fixture("C2")), 3), std::domain_error);
}

TEST_CASE("a horizontal identity-shaped product D E determines E") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  for (Id a = 0; a < t.num_boxes(); ++a) {
    if (!in_d(t, a)) continue;
    for (Id e = 0; e < t.num_boxes(); ++e) {
      if (!in_e(t, e) || t.right(a) != t.left(e)) continue;
      const Id de = t.hcompose(a, e);
      if (!t.is_vertical_identity(de)) continue;
      CHECK(t.top(de) == t.top(a));
      CHECK(e == dagger(t, a));
    }
  }
}

TEST_CASE("canonical maps are onto the cores") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    const CoreGroupoid e = build_core(t, CoreSide::E);
    for (CanonicalMap m : {CanonicalMap::phi, CanonicalMap::alpha, CanonicalMap::psi, CanonicalMap::beta}) {
      const bool to_d = m == CanonicalMap::phi || m == CanonicalMap::alpha;
      std::set<Id> image;
      for (Id a = 0; a < t.num_boxes(); ++a) {
        const bool dom = m == CanonicalMap::phi   ? t.h_point(t.top(a))
                         : m == CanonicalMap::alpha ? t.v_point(t.left(a))
                         : m == CanonicalMap::psi   ? t.h_point(t.bottom(a))
                                                    : t.v_point(t.right(a));
        CHECK(canonical_domain(t, m, a) == dom);
        if (!dom) {
          CHECK_THROWS_AS(canonical_map(t, m, a), std::domain_error);
          continue;
        }
        image.insert(canonical_map(t, m, a));
      }
      const auto& carrier = to_d ? d.carrier : e.carrier;
      CHECK(std::vector<Id>(image.begin(), image.end()) == carrier);
    }
    for (Id a : d.carrier) {
      CHECK(canonical_map(t, CanonicalMap::phi, t.inv(a)) == a);
      CHECK(canonical_map(t, CanonicalMap::alpha, a) == a);
    }
    CHECK(canonical_map(t, CanonicalMap::phi, t.theta_box(0)) == t.theta_box(0));
  }
}

TEST_CASE("boxes with identity left side split as bottom times D") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  const CoreGroupoid d = build_core(t, CoreSide::D);
  std::set<std::pair<Id, Id>> pairs;
  Id domain = 0;
  for (Id a = 0; a < t.num_boxes(); ++a) {
    if (!t.v_point(t.left(a))) continue;
    ++domain;
    const Id al = canonical_map(t, CanonicalMap::alpha, a);
    CHECK(t.r(t.bottom(a)) == core_target(t, CoreSide::D, al));
    CHECK(t.hcompose(t.vid(t.bottom(a)), al) == a);
    pairs.insert({t.bottom(a), al});
  }
  Id expected = 0;
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id a : d.carrier)
      if (t.r(x) == core_target(t, CoreSide::D, a)) ++expected;
  CHECK(static_cast<Id>(pairs.size()) == domain);
  CHECK(domain == expected);

  // The mirror statement with beta and the top side.
  std::set<std::pair<Id, Id>> right_pairs;
  Id right_domain = 0;
  for (Id b = 0; b < t.num_boxes(); ++b) {
    if (!t.v_point(t.right(b))) continue;
    ++right_domain;
    const Id be = canonical_map(t, CanonicalMap::beta, b);
    CHECK(t.hcompose(be, t.vid(t.top(b))) == b);
    right_pairs.insert({be, t.top(b)});
  }
  CHECK(static_cast<Id>(right_pairs.size()) == right_domain);
}

TEST_CASE("core actions") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    const CoreGroupoid e = build_core(t, CoreSide::E);
    for (Id a = 0; a < t.num_boxes(); ++a) {
      CHECK(core_action(t, CoreAction::d_left, t.theta_box(t.tr(a)), a) == a);
      CHECK(core_action(t, CoreAction::d_right, t.theta_box(t.br(a)), a) == a);
      CHECK(core_action(t, CoreAction::e_right, t.theta_box(t.tl(a)), a) == a);
      CHECK(core_action(t, CoreAction::e_left, t.theta_box(t.bl(a)), a) == a);
    }
    for (Id dd : d.carrier)
      for (Id l : d.carrier) {
        if (core_target(t, CoreSide::D, dd) != core_source(t, CoreSide::D, l)) continue;
        const Id dl = d_compose(t, dd, l);
        for (Id a = 0; a < t.num_boxes(); ++a) {
          if (!action_defined(t, CoreAction::d_left, l, a)) continue;
          const Id la = core_action(t, CoreAction::d_left, l, a);
          REQUIRE(action_defined(t, CoreAction::d_left, dd, la));
          CHECK(core_action(t, CoreAction::d_left, dl, a) == core_action(t, CoreAction::d_left, dd, la));
        }
      }
    for (Id m : e.carrier)
      for (Id ee : e.carrier) {
        if (core_target(t, CoreSide::E, m) != core_source(t, CoreSide::E, ee)) continue;
        const Id me = e_compose(t, m, ee);
        for (Id a = 0; a < t.num_boxes(); ++a) {
          if (!action_defined(t, CoreAction::e_right, m, a)) continue;
          const Id am = core_action(t, CoreAction::e_right, m, a);
          REQUIRE(action_defined(t, CoreAction::e_right, ee, am));
          CHECK(core_action(t, CoreAction::e_right, me, a) == core_action(t, CoreAction::e_right, ee, am));
        }
      }
  }
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  CHECK_THROWS_AS(core_action(t, CoreAction::d_left, 3, 0), std::domain_error);
}

TEST_CASE("left multiplication by core elements is the core action") {
  for (const auto& t : samples()) {
    const WeakHopf w = build_canonical(t);
    for (Id dd : build_core(t, CoreSide::D).carrier) {
      const Element one = d_one(t, dd);
      for (Id a = 0; a < t.num_boxes(); ++a) {
        const Element got = w.mult(one, Element(a));
        if (action_defined(t, CoreAction::d_left, dd, a))
          CHECK(got == Element(core_action(t, CoreAction::d_left, dd, a)));
        else
          CHECK(got.empty());
      }
    }
  }
}

TEST_CASE("curve action and vertical connectedness") {
  const DoubleGroupoid t = comma(group_fixture("S3"), subgroup_fixture("S3", "S2"));
  const CoreGroupoid e = build_core(t, CoreSide::E);
  const Groupoid& v = t.vertical();
  for (Id ee : e.carrier)
    for (Id a = 0; a < t.num_boxes(); ++a) {
      if (t.bottom(a) != t.horizontal().inverse(t.bottom(ee))) continue;
      const Id c = curve_action(t, a, ee);
      CHECK(in_e(t, c));
      CHECK(c == t.vc(t.vc(t.hid(t.left(a)), ee), t.inv(a)));
      CHECK(c == canonical_map(t, CanonicalMap::psi, core_action(t, CoreAction::e_left, ee, a)));
    }
  for (Id ee : e.carrier)
    for (Id m : e.carrier) {
      bool related = false;
      for (Id g = 0; g < v.num_arrows(); ++g)
        related = related || (t.t(g) == core_target(t, CoreSide::E, ee) && t.b(g) == core_target(t, CoreSide::E, m));
      bool reached = false;
      for (Id a = 0; a < t.num_boxes(); ++a) {
        if (!t.h_point(t.hmul(t.bottom(ee), t.bottom(a)))) continue;
        reached = reached || curve_action(t, a, ee) == m;
      }
      CHECK(related == reached);
    }
}

TEST_CASE("every pair of E boxes is vertically connected iff V is connected") {
  std::vector<DoubleGroupoid> all = samples();
  all.push_back(no_siempre(2, 2).dgpd);
  all.push_back(discrete_double_groupoid(2));
  for (const auto& t : all) {
    const CoreGroupoid e = build_core(t, CoreSide::E);
    const auto comp = component_index(t.vertical());
    bool all_related = true;
    for (Id a : e.carrier)
      for (Id b : e.carrier)
        all_related = all_related && comp[core_target(t, CoreSide::E, a)] == comp[core_target(t, CoreSide::E, b)];
    CHECK(all_related == (connected_components(t.vertical()).size() == 1));
  }
}

TEST_CASE("core diagram") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    const CoreDiagram cd = core_diagram(t, d);
    CHECK(cd.morphism.ok());
    for (Id f = 0; f < d.as_groupoid.num_arrows(); ++f) {
      const Id a = d.embed(f);
      CHECK(cd.target_arrows[cd.image[f]] == std::pair<Id, Id>{t.top(a), t.right(a)});
    }
    for (Id p = 0; p < t.num_points(); ++p) {
      std::vector<Id> brute;
      for (Id a = 0; a < t.num_boxes(); ++a)
        if (t.top(a) == t.horizontal().identity(p) && t.bottom(a) == t.horizontal().identity(p) &&
            t.left(a) == t.vertical().identity(p) && t.right(a) == t.vertical().identity(p))
          brute.push_back(a);
      CHECK(cd.kernel[p] == brute);
    }
  }
}

TEST_CASE("solutions completing A to identities are given by phi and psi") {
  for (const auto& t : samples()) {
    for (Id a = 0; a < t.num_boxes(); ++a) {
      // A over Y a horizontal identity, X | Y a vertical identity.
      std::set<std::pair<Id, Id>> found;
      for (Id y : t.with_top(t.bottom(a))) {
        if (!t.is_horizontal_identity(t.vcompose(a, y))) continue;
        for (Id x : t.with_right(t.left(y)))
          if (t.is_vertical_identity(t.hcompose(x, y))) found.insert({x, y});
      }
      CHECK(found.empty() == !t.h_point(t.top(a)));
      if (t.h_point(t.top(a))) {
        const Id ph = canonical_map(t, CanonicalMap::phi, a);
        std::set<std::pair<Id, Id>> formula;
        for (Id x = 0; x < t.num_h(); ++x)
          if (t.r(x) == t.br(a)) formula.insert({t.hcompose(t.vid(x), ph), t.hinv(ph)});
        CHECK(found == formula);
      }
      // X over A a horizontal identity, X | Y a vertical identity.
      std::set<std::pair<Id, Id>> found2;
      for (Id x : t.with_bottom(t.top(a))) {
        if (!t.is_horizontal_identity(t.vcompose(x, a))) continue;
        for (Id y : t.with_left(t.right(x)))
          if (t.is_vertical_identity(t.hcompose(x, y))) found2.insert({x, y});
      }
      CHECK(found2.empty() == !t.h_point(t.bottom(a)));
      if (t.h_point(t.bottom(a))) {
        const Id ps = canonical_map(t, CanonicalMap::psi, a);
        std::set<std::pair<Id, Id>> formula;
        for (Id y = 0; y < t.num_h(); ++y)
          if (t.l(y) == t.tl(a)) formula.insert({t.hinv(ps), t.hcompose(ps, t.vid(y))});
        CHECK(found2 == formula);
      }
    }
  }
}

TEST_CASE("theta is constant along D") {
  for (const auto& t : samples()) {
    const CoreGroupoid d = build_core(t, CoreSide::D);
    for (Id a : d.carrier) CHECK(t.theta(core_source(t, CoreSide::D, a)) == t.theta(core_target(t, CoreSide::D, a)));
  }
}
