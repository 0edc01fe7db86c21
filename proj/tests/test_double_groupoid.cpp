#include <doctest.h>

#include <algorithm>

#include "dgq/builders.hpp"
#include "dgq/cocycles.hpp"
#include "dgq/double_groupoid.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace dgq;

namespace {

struct Tables {
  std::vector<Id> top, bottom, left, right, hc, vc;
};

Tables tables_of(const DoubleGroupoid& t) {
  Tables x;
  const Id n = t.num_boxes();
  for (Id a = 0; a < n; ++a) {
    x.top.push_back(t.top(a));
    x.bottom.push_back(t.bottom(a));
    x.left.push_back(t.left(a));
    x.right.push_back(t.right(a));
  }
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      x.hc.push_back(t.hcompose(a, b));
      x.vc.push_back(t.vcompose(a, b));
    }
  return x;
}

DoubleGroupoid reassemble(const DoubleGroupoid& t, const Tables& x) {
  return DoubleGroupoid::assemble(t.horizontal(), t.vertical(), x.top, x.bottom, x.left, x.right, x.hc, x.vc);
}

std::vector<DoubleGroupoid> builder_outputs() {
  std::vector<DoubleGroupoid> out;
  for (const auto& ex : examples::axiom_suite()) out.push_back(ex.dgpd);
  out.push_back(no_siempre(2, 3).dgpd);
  out.push_back(bimodule_dgpd(group_fixture("C3")));
  out.push_back(comma(group_fixture("S3"), subgroup_fixture("S3", "A3")));
  return out;
}

}  // namespace

TEST_CASE("builder outputs validate and fill") {
  for (const auto& t : builder_outputs()) {
    const ValidationReport r = validate(t);
    CHECK(r.ok());
    CHECK(filling_condition(t));
    const auto by_corner = filling_by_corner(t);
    for (bool b : by_corner) CHECK(b);
  }
}

TEST_CASE("discrete double groupoid") {
  const DoubleGroupoid t = discrete_double_groupoid(3);
  CHECK(validate(t).ok());
  CHECK(t.num_boxes() == 3);
  for (Id p = 0; p < 3; ++p) {
    CHECK(t.theta(p) == 1);
    CHECK(t.inverse(t.theta_box(p), InverseKind::horizontal) == t.theta_box(p));
  }
  CHECK(t.transpose() == t);
  CHECK(filling_condition(t));
  CHECK(is_vacant(t));
  const TransitivityFlags f = transitivity_flags(discrete_double_groupoid(1));
  CHECK(f.locally_trivial);
}

TEST_CASE("a swapped horizontal composite breaks the interchange law") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  REQUIRE(validate(t).ok());
  Tables x = tables_of(t);
  // Two defined composites with different values.
  const auto defined = [&](std::size_t k) { return x.hc[k] != kNone; };
  std::size_t i = 0;
  while (!defined(i)) ++i;
  std::size_t j = i + 1;
  while (j < x.hc.size() && (!defined(j) || x.hc[j] == x.hc[i])) ++j;
  REQUIRE(j < x.hc.size());
  std::swap(x.hc[i], x.hc[j]);
  const ValidationReport r = validate(reassemble(t, x));
  CHECK(r.has("interchange"));
  for (const auto& v : r.failures)
    if (v.axiom == "interchange") CHECK(v.witness.size() == 4);
}

TEST_CASE("inverses") {
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  for (Id a = 0; a < t.num_boxes(); ++a) {
    CHECK(t.vinv(t.hinv(a)) == t.hinv(t.vinv(a)));
    CHECK(t.inverse(a, InverseKind::total) == t.inv(a));
    CHECK(t.hcompose(a, t.hinv(a)) == t.hid(t.left(a)));
    CHECK(t.vcompose(a, t.vinv(a)) == t.vid(t.top(a)));
  }
  // (g, h)^h = (h, g) in T(G).
  for (const char* name : {"C2", "C3", "coarse2"}) {
    const Groupoid g = group_fixture(name);
    const DoubleGroupoid b = bimodule_dgpd(g);
    const Id n = g.num_arrows();
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y)
        if (g.source(x) == g.source(y) && g.target(x) == g.target(y)) CHECK(b.hinv(x * n + y) == y * n + x);
  }
}

TEST_CASE("transpose") {
  const DoubleGroupoid c = comma(group_fixture("S3"), subgroup_fixture("S3", "S2"));
  CHECK(validate(c.transpose()).ok());
  CHECK(c.transpose().transpose() == c);

  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  const DoubleGroupoid tt = t.transpose();
  CHECK(tt.horizontal() == t.vertical());
  CHECK(tt.vertical() == t.horizontal());
  // A corner of T at (g, x) is the transposed corner of T^t at (x, g): UL stays, UR and LL swap.
  for (Id g = 0; g < t.num_v(); ++g)
    for (Id x = 0; x < t.num_h(); ++x) {
      if (t.corner_domain(CornerKind::UL, g, x)) CHECK(t.corner(CornerKind::UL, g, x) == tt.corner(CornerKind::UL, x, g));
      if (t.corner_domain(CornerKind::LR, g, x)) CHECK(t.corner(CornerKind::LR, g, x) == tt.corner(CornerKind::LR, x, g));
      if (t.corner_domain(CornerKind::UR, g, x)) CHECK(t.corner(CornerKind::UR, g, x) == tt.corner(CornerKind::LL, x, g));
    }
}

TEST_CASE("corner values") {
  // Vacant: constantly 1.
  const DoubleGroupoid mp = examples::matched_pair_s3();
  CHECK(mp.num_boxes() == 6);
  CHECK(is_vacant(mp));
  for (CornerKind k : kAllCorners)
    for (Id g = 0; g < mp.num_v(); ++g)
      for (Id x = 0; x < mp.num_h(); ++x)
        if (mp.corner_domain(k, g, x)) CHECK(mp.corner(k, g, x) == 1);

  // T(G): the order of G.
  for (const char* name : {"C2", "C3", "S3"}) {
    const Groupoid g = group_fixture(name);
    const DoubleGroupoid t = bimodule_dgpd(g);
    for (CornerKind k : kAllCorners)
      for (Id v = 0; v < t.num_v(); ++v)
        for (Id x = 0; x < t.num_h(); ++x)
          if (t.corner_domain(k, v, x)) CHECK(t.corner(k, v, x) == g.num_arrows());
  }

  const NoSiempre ns = no_siempre(3, 1);
  CHECK(ns.dgpd.corner(CornerKind::LR, ns.box_a) == 1);
  CHECK(ns.dgpd.corner(CornerKind::LR, ns.box_a) == ns.dgpd.theta(ns.point("P")));
  CHECK_THROWS_AS(ns.dgpd.corner(CornerKind::UL, ns.dgpd.vertical().identity(ns.point("Q")),
                                 ns.dgpd.horizontal().identity(ns.point("P"))),
                  std::domain_error);
}

TEST_CASE("theta values") {
  for (auto [m, n] : std::vector<std::pair<Id, Id>>{{1, 1}, {2, 3}, {3, 2}}) {
    const NoSiempre ns = no_siempre(m, n);
    CHECK(ns.dgpd.theta(ns.point("P")) == 1);
    CHECK(ns.dgpd.theta(ns.point("R")) == 1);
    CHECK(ns.dgpd.theta(ns.point("Q")) == n + 1);
    for (Id i = 1; i <= n; ++i) CHECK(ns.dgpd.theta(ns.point("T" + std::to_string(i))) == n + 1);
    for (Id j = 1; j <= m; ++j) CHECK(ns.dgpd.theta(ns.point("S" + std::to_string(j))) == m);
  }
  const DoubleGroupoid c = comma(group_fixture("S3"), subgroup_fixture("S3", "S2"));
  CHECK(c.theta(0) == 2);
  // The count of boxes with identity left and bottom.
  Id n = 0;
  for (Id a = 0; a < c.num_boxes(); ++a)
    if (c.v_point(c.left(a)) && c.h_point(c.bottom(a))) ++n;
  CHECK(n == 2);
  for (const auto& t : builder_outputs())
    for (Id p = 0; p < t.num_points(); ++p) {
      CHECK(t.theta(p) == oracle::theta(t, p));
      for (CornerKind k : kAllCorners) CHECK(t.corner(k, t.theta_box(p)) == t.theta(p));
    }
}

TEST_CASE("double factorizations") {
  auto for_each_square = [](const DoubleGroupoid& t, auto&& fn) {
    for (Id x = 0; x < t.num_boxes(); ++x)
      for (Id y : t.with_left(t.right(x))) {
        const Id xy = t.hcompose(x, y);
        for (auto [a, b] : t.vfactorizations(xy)) fn(x, y, a, b);
      }
  };
  // Vacant: exactly one.
  const DoubleGroupoid mp = examples::matched_pair_s3();
  for_each_square(mp, [&](Id x, Id y, Id a, Id b) { CHECK(double_factorizations(mp, x, y, a, b).size() == 1); });

  // Count equals the corner values, and the brute count.
  const DoubleGroupoid t = bimodule_dgpd(group_fixture("C2"));
  for_each_square(t, [&](Id x, Id y, Id a, Id b) {
    const auto f = double_factorizations(t, x, y, a, b);
    const Id n = static_cast<Id>(f.size());
    CHECK(n == t.corner(CornerKind::UL, t.left(a), t.top(x)));
    CHECK(n == t.corner(CornerKind::LL, t.left(b), t.bottom(x)));
    CHECK(n == oracle::double_factorization_count(t, x, y, a, b));
    for (const auto& q : f) {
      CHECK(t.hcompose(q.u, q.v) == a);
      CHECK(t.hcompose(q.r, q.s) == b);
      CHECK(t.vcompose(q.u, q.r) == x);
      CHECK(t.vcompose(q.v, q.s) == y);
    }
  });

  // X = A, Y and B identities.
  for (Id a = 0; a < t.num_boxes(); ++a) {
    const auto f = double_factorizations(t, a, t.hid(t.right(a)), a, t.vid(t.bottom(a)));
    const DoubleFactorization want{a, t.hid(t.right(a)), t.vid(t.bottom(a)), t.theta_box(t.br(a))};
    CHECK(std::find(f.begin(), f.end(), want) != f.end());
  }
  CHECK_THROWS_AS(double_factorizations(t, 0, 0, 1, 0), std::domain_error);
}

TEST_CASE("filling fails on the union of identity boxes") {
  const Groupoid c = coarse_groupoid(2);
  const DoubleGroupoid u = identity_union(c, c);
  std::pair<Id, Id> w;
  CHECK(!filling_condition(u, &w));
  CHECK(u.t(w.first) == u.r(w.second));
  for (bool b : filling_by_corner(u)) CHECK(!b);
  const TransitivityFlags f = transitivity_flags(u);
  CHECK(!f.horizontally_transitive);
  CHECK(!f.vertically_transitive);
  CHECK(!f.locally_trivial);
}

TEST_CASE("vacancy and transitivity flags") {
  CHECK(is_vacant(examples::matched_pair_s3()));
  CHECK(!is_vacant(bimodule_dgpd(group_fixture("C2"))));
  CHECK(is_vacant(discrete_double_groupoid(2)));
  const TransitivityFlags f = transitivity_flags(bimodule_dgpd(group_fixture("coarse2")));
  CHECK(f.locally_trivial);
  CHECK(f.horizontally_transitive == f.horizontally_transitive_alt);
  CHECK(f.vertically_transitive == f.vertically_transitive_alt);
  for (const auto& t : builder_outputs()) {
    const TransitivityFlags g = transitivity_flags(t);
    CHECK(g.horizontally_transitive == g.horizontally_transitive_alt);
    CHECK(g.vertically_transitive == g.vertically_transitive_alt);
    CHECK(g.locally_trivial == (g.horizontally_transitive && g.vertically_transitive));
    // Vertically transitive: theta constant along horizontal components.
    if (g.vertically_transitive) {
      const auto comp = component_index(t.horizontal());
      for (Id p = 0; p < t.num_points(); ++p)
        for (Id q = 0; q < t.num_points(); ++q)
          if (comp[p] == comp[q]) CHECK(t.theta(p) == t.theta(q));
    }
  }
}

TEST_CASE("unit and counit configurations exist and are unique") {
  for (const auto& t : builder_outputs()) {
    for (Id a = 0; a < t.num_boxes(); ++a)
      for (Id b : t.with_left(t.right(a)))
        for (Id c : t.with_left(t.right(b))) {
          const Id abc = t.hcompose(t.hcompose(a, b), c);
          if (t.is_vertical_identity(abc)) {
            UnitConfiguration u;
            CHECK(unit_configuration(t, a, b, c, &u));
          }
        }
    for (Id a = 0; a < t.num_boxes(); ++a)
      for (Id b : t.with_top(t.bottom(a)))
        for (Id c : t.with_top(t.bottom(b))) {
          const Id abc = t.vcompose(t.vcompose(a, b), c);
          if (t.is_horizontal_identity(abc)) {
            UnitConfiguration u;
            CHECK(counit_configuration(t, a, b, c, &u));
          }
        }
  }
}

TEST_CASE("the triple (A, A^h, A) closes up") {
  for (const auto& t : builder_outputs())
    for (Id a = 0; a < t.num_boxes(); ++a) {
      const Id ah = t.hinv(a);
      CHECK(t.hcompose(t.hcompose(a, ah), a) == a);
      const Id ai = t.inv(a);
      CHECK(t.vcompose(t.vcompose(ai, ah), ai) == ai);
    }
}
