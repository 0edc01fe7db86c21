#include <doctest.h>

#include <map>
#include <set>

#include "dgq/builders.hpp"
#include "dgq/wha_extras.hpp"
#include "examples.hpp"

using namespace dgq;

namespace {

std::vector<bool> block_mask(const Groupoid& coarse, const std::vector<Id>& block_of) {
  const Id n = coarse.num_objects();
  std::vector<bool> mask(static_cast<std::size_t>(n * n));
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) mask[i * n + j] = block_of[i] == block_of[j];
  return mask;
}

// Boxes of a commuting-squares double groupoid, counted over all 4-tuples of arrows.
Id brute_square_count(const Groupoid& g, const std::vector<bool>& h, const std::vector<bool>& v) {
  Id count = 0;
  for (Id t = 0; t < g.num_arrows(); ++t)
    for (Id b = 0; b < g.num_arrows(); ++b)
      for (Id l = 0; l < g.num_arrows(); ++l)
        for (Id r = 0; r < g.num_arrows(); ++r) {
          if (!h[t] || !h[b] || !v[l] || !v[r]) continue;
          if (g.target(t) != g.source(r) || g.target(l) != g.source(b) || g.source(t) != g.source(l)) continue;
          if (g.compose(t, r) == g.compose(l, b)) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("every builder output validates and fills") {
  std::vector<DoubleGroupoid> all;
  for (const auto& ex : examples::axiom_suite()) all.push_back(ex.dgpd);
  all.push_back(no_siempre(2, 3).dgpd);
  all.push_back(bimodule_dgpd(group_fixture("S3")));
  all.push_back(comma(group_fixture("S3"), subgroup_fixture("S3", "A3")));
  all.push_back(vec_g_double_groupoid(group_fixture("S3")));
  for (const auto& t : all) {
    CHECK(validate(t).ok());
    CHECK(filling_condition(t, nullptr));
  }
}

TEST_CASE("no_siempre is commuting squares on the two partitions") {
  for (auto [m, n] : {std::pair<Id, Id>{1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
    const NoSiempre ns = no_siempre(m, n);
    const Id k = m + n + 3;
    std::vector<Id> h_block(k), v_block(k);
    for (Id p = 0; p < k; ++p) {
      const std::string& name = ns.names[p];
      const bool is_s = name[0] == 'S', is_t = name[0] == 'T';
      h_block[p] = (name == "P" || name == "Q" || is_t) ? 0 : 1;
      v_block[p] = (name == "P" || name == "R") ? 0 : 1;
      CHECK((is_s || is_t || name.size() == 1));
    }
    const Groupoid coarse = coarse_groupoid(k);
    const auto hm = block_mask(coarse, h_block);
    const auto vm = block_mask(coarse, v_block);
    CHECK(commuting_squares(coarse, hm, vm) == ns.dgpd);
    CHECK(ns.dgpd.num_boxes() == brute_square_count(coarse, hm, vm));
    const Id a = ns.box_a;
    CHECK(ns.dgpd.tl(a) == ns.point("P"));
    CHECK(ns.dgpd.tr(a) == ns.point("Q"));
    CHECK(ns.dgpd.bl(a) == ns.point("R"));
    CHECK(ns.dgpd.br(a) == ns.point("S1"));
  }
  CHECK_THROWS(no_siempre(1, 1).point("Z"));
}

TEST_CASE("commuting squares in the extreme cases") {
  const Groupoid c = coarse_groupoid(2);
  const std::vector<bool> all(4, true);
  const DoubleGroupoid full = commuting_squares(c, all, all);
  CHECK(full.num_boxes() == 16);
  CHECK(full.num_boxes() == brute_square_count(c, all, all));
  CHECK(filling_condition(full, nullptr));
  const std::vector<bool> ids{true, false, false, true};
  const DoubleGroupoid disc = commuting_squares(c, ids, ids);
  CHECK(disc.num_boxes() == 2);
  for (Id a = 0; a < 2; ++a) CHECK(disc.is_vertical_identity(a));
  CHECK_THROWS_AS(commuting_squares(c, {false, true, true, true}, all), std::invalid_argument);
}

TEST_CASE("matched pairs") {
  const DoubleGroupoid t = examples::matched_pair_s3();
  CHECK(t.num_boxes() == 6);
  CHECK(is_vacant(t));
  CHECK(validate(t).ok());

  // Trivial vertical subgroup: the boxes are the horizontal arrows.
  const Groupoid c3 = group_fixture("C3");
  const DoubleGroupoid h_only =
      matched_pair(matched_pair_from_factorization(c3, subgroup_fixture("C3", "C3"), subgroup_fixture("C3", "C1")));
  CHECK(h_only.num_boxes() == 3);
  CHECK(validate(h_only).ok());
  std::set<Id> tops;
  for (Id a = 0; a < 3; ++a) {
    CHECK(h_only.v_point(h_only.left(a)));
    CHECK(h_only.v_point(h_only.right(a)));
    CHECK(h_only.is_vertical_identity(a));
    tops.insert(h_only.top(a));
  }
  CHECK(tops.size() == 3);

  // Not an exact factorization.
  const Groupoid s3 = group_fixture("S3");
  CHECK_THROWS_AS(matched_pair_from_factorization(s3, subgroup_fixture("S3", "S2"), subgroup_fixture("S3", "S2")),
                  std::invalid_argument);

  // A corrupted action table no longer gives a double groupoid.
  MatchedPairData d = matched_pair_from_factorization(s3, subgroup_fixture("S3", "A3"), subgroup_fixture("S3", "S2"));
  for (std::size_t i = 0; i < d.right_of.size(); ++i)
    if (d.right_of[i] != kNone && !d.horizontal.is_identity(d.right_of[i])) {
      d.right_of[i] = d.horizontal.identity(0);
      break;
    }
  CHECK(!validate(matched_pair(d)).ok());
}

TEST_CASE("bimodule double groupoids") {
  const DoubleGroupoid c2 = bimodule_dgpd(group_fixture("C2"));
  CHECK(c2.num_boxes() == 4);
  for (Id a = 0; a < 4; ++a)
    for (CornerKind k : {CornerKind::UL, CornerKind::UR, CornerKind::LL, CornerKind::LR}) CHECK(c2.corner(k, a) == 2);
  CHECK(antipode_analysis(build_canonical(c2)).is_involutive);

  const DoubleGroupoid co = bimodule_dgpd(group_fixture("coarse2"));
  CHECK(co.num_boxes() == 16);
  for (Id p = 0; p < co.num_points(); ++p) CHECK(co.theta(p) == 2);

  const DoubleGroupoid one = bimodule_dgpd(group_fixture("C1"));
  CHECK(one == discrete_double_groupoid(1));
}

TEST_CASE("vec_g double groupoids") {
  for (const char* g : {"C2", "C3", "S3"}) {
    const Groupoid group = group_fixture(g);
    const Id n = group.num_arrows();
    const DoubleGroupoid t = vec_g_double_groupoid(group);
    CHECK(t.num_boxes() == n * n * n);
    CHECK(is_vacant(t));
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b)
        for (Id h = 0; h < n; ++h) {
          const Id box = vec_g_box(n, a, b, h);
          CHECK(t.top(box) == a * n + b);
          CHECK(t.bottom(box) == group.compose(a, h) * n + group.compose(b, h));
        }
  }
  const VecGOmega v = vec_g_omega(ThreeCocycle::trivial(group_fixture("C2")));
  CHECK(v.dgpd.num_boxes() == 8);
  CHECK(v.sigma == trivial_sigma(v.dgpd));
}

TEST_CASE("comma double groupoids") {
  const Groupoid s3 = group_fixture("S3");
  const DoubleGroupoid t = comma(s3, subgroup_fixture("S3", "S2"));
  CHECK(t.num_boxes() == 24);
  CHECK(!is_vacant(t));

  const DoubleGroupoid triv = comma(s3, subgroup_fixture("S3", "C1"));
  CHECK(triv.num_boxes() == 6);
  CHECK(is_vacant(triv));

  const DoubleGroupoid full = comma(s3, subgroup_fixture("S3", "S3"));
  CHECK(full.num_boxes() == 216);
  CHECK(validate(full).ok());

  std::vector<bool> not_sub(6, false);
  not_sub[1] = true;
  CHECK_THROWS_AS(comma(s3, not_sub), std::invalid_argument);
}

TEST_CASE("vacancy among the builders") {
  std::map<std::string, bool> expected{{"discrete(3)", true},
                                       {"no_siempre(1,1)", false},
                                       {"no_siempre(3,1)", false},
                                       {"matched_pair(S3=A3.S2)", true},
                                       {"bimodule(C2)", false},
                                       {"bimodule(coarse2)", false},
                                       {"comma(S2<=S3)", false},
                                       {"vec_g(C2,trivial)", true},
                                       {"vec_g(C2,sign)", true}};
  for (const auto& ex : examples::axiom_suite()) CHECK(is_vacant(ex.dgpd) == expected.at(ex.name));
}

TEST_CASE("group fixtures") {
  for (const char* g : {"C1", "C2", "C5", "C9", "S1", "S2", "S3", "S4", "A3", "coarse2"})
    CHECK(validate_groupoid(group_fixture(g)).ok());
  CHECK(group_fixture("S4").num_arrows() == 24);
  CHECK(group_fixture("A3").num_arrows() == 3);
  CHECK_THROWS(group_fixture("Q8"));
  CHECK_THROWS(subgroup_fixture("S3", "C5"));
}

TEST_CASE("thin double groupoids from boundaries") {
  const Groupoid c = coarse_groupoid(2);
  // Every square of coarse(2) with sides in the full groupoid.
  std::vector<std::array<Id, 4>> sq;
  for (Id t = 0; t < 4; ++t)
    for (Id l = 0; l < 4; ++l)
      for (Id r = 0; r < 4; ++r)
        for (Id b = 0; b < 4; ++b)
          if (c.source(t) == c.source(l) && c.target(t) == c.source(r) && c.target(l) == c.source(b) &&
              c.target(r) == c.target(b))
            sq.push_back({t, l, r, b});
  const DoubleGroupoid t = thin_double_groupoid(c, c, sq);
  CHECK(validate(t).ok());
  CHECK(t.num_boxes() == 16);
  // Dropping a non-identity square leaves some composite undefined.
  std::vector<std::array<Id, 4>> fewer;
  for (const auto& s : sq)
    if (s != std::array<Id, 4>{1, 1, 3, 3}) fewer.push_back(s);
  REQUIRE(fewer.size() + 1 == sq.size());
  CHECK(!validate(thin_double_groupoid(c, c, fewer)).ok());
}
