#pragma once

#include <array>
#include <string>
#include <vector>

#include "dgq/cocycles.hpp"
#include "dgq/double_groupoid.hpp"
#include "dgq/groupoid.hpp"

namespace dgq {

// Double groupoid whose boxes are determined by their four sides (t, l, r, b). Composites are
// looked up by boundary; a missing composite leaves the table entry undefined, which validate reports.
DoubleGroupoid thin_double_groupoid(Groupoid horizontal, Groupoid vertical,
                                    const std::vector<std::array<Id, 4>>& boundaries);

// Points with a single box each.
DoubleGroupoid discrete_double_groupoid(Id points);

// Boxes are squares (t, l, r, b) of g with t.r = l.b, t, b in the horizontal subgroupoid and
// l, r in the vertical one. Throws std::invalid_argument if a mask is not a wide subgroupoid.
DoubleGroupoid commuting_squares(const Groupoid& g, const std::vector<bool>& horizontal,
                                 const std::vector<bool>& vertical);

struct NoSiempre {
  DoubleGroupoid dgpd;
  Id box_a = kNone;                  // tl = P, tr = Q, bl = R, br = S1
  std::vector<std::string> names;    // P, Q, R, S1..Sm, T1..Tn
  Id point(const std::string& name) const;
};
// Commuting squares in the coarse groupoid on m + n + 3 points for the partitions
// {P,Q,T*} | {R,S*} (horizontal) and {P,R} | {Q,S*,T*} (vertical).
NoSiempre no_siempre(Id m, Id n);

struct MatchedPairData {
  Groupoid horizontal;      // H
  Groupoid vertical;        // V, same base as H
  // Indexed by x * |V| + g for r(x) = t(g); kNone elsewhere.
  std::vector<Id> left_of;  // x |> g, a vertical arrow
  std::vector<Id> right_of; // x <| g, a horizontal arrow
};
// Boxes are pairs (x, g) with r(x) = t(g): top x, right g, left x |> g, bottom x <| g.
// Vertical composition follows <|, horizontal composition follows |>.
// The result is not validated here; validity of the pair means validate(result) is clean.
DoubleGroupoid matched_pair(const MatchedPairData& d);
// Matched pair of two subgroups of a group with g = V.H uniquely; x.g = (x |> g)(x <| g).
// Throws std::invalid_argument if the factorization is not exact.
MatchedPairData matched_pair_from_factorization(const Groupoid& group, const std::vector<bool>& h_subgroup,
                                                const std::vector<bool>& v_subgroup);

// T(G): boxes (g, h) in G x G with left g, right h, top (s g, s h), bottom (e g, e h);
// H is the coarse groupoid on the objects of G. Box (g, h) has id g * |G| + h.
DoubleGroupoid bimodule_dgpd(const Groupoid& g);

// T0(G): points G, H coarse on G (arrow (a, b) = a * n + b), V the transformation groupoid of
// the right regular action (arrow (a, g) = a * n + g from a to ag).
// Box (a, b, g) has id (a * n + b) * n + g: top (a, b), bottom (ag, bg), left (a, g), right (b, g).
DoubleGroupoid vec_g_double_groupoid(const Groupoid& group);
inline Id vec_g_box(Id n, Id a, Id b, Id g) { return (a * n + b) * n + g; }

struct VecGOmega {
  DoubleGroupoid dgpd;
  SigmaCochain sigma;
};
// T0(G) with sigma = sigma_from_omega(omega).
VecGOmega vec_g_omega(const ThreeCocycle& omega);

// Comma double groupoid of a subgroup F <= G over one point: box (g, x, y) has top g in G,
// left x, right y in F and bottom x^-1 g y. Id (g * |F| + i) * |F| + j for x = F[i], y = F[j].
// `subgroup` marks the elements of F. Throws std::invalid_argument if F is not a subgroup.
DoubleGroupoid comma(const Groupoid& group, const std::vector<bool>& subgroup);

// Only the identity boxes vid(x), hid(g) over the given H and V.
DoubleGroupoid identity_union(const Groupoid& horizontal, const Groupoid& vertical);

// Named group fixtures: C1..C9, S1..S4 (symmetric), coarse2 (coarse groupoid on 2 points), A3.
Groupoid group_fixture(const std::string& name);
// Subgroup of a fixture, by name: "S2" and "A3"/"C3" in S3, "C1" in anything, equal names.
std::vector<bool> subgroup_fixture(const std::string& group, const std::string& subgroup);

}  // namespace dgq
