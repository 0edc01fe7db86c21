#pragma once

#include <vector>

#include "dgq/double_groupoid.hpp"

namespace dgq {

// D: boxes with l, b identities, s(D) = rt(D), e(D) = lt(D).
// E: boxes with r, t identities, s(E) = bl(E), e(E) = br(E).
enum class CoreSide { D, E };

struct CoreGroupoid {
  CoreSide side = CoreSide::D;
  std::vector<Id> carrier;    // box ids, ascending; arrow i of as_groupoid is carrier[i]
  std::vector<Id> arrow_of;   // box id -> arrow id, kNone outside the carrier
  Groupoid as_groupoid;       // composition compose(a, b) is defined when e(a) = s(b)

  bool contains(Id box) const { return box >= 0 && box < static_cast<Id>(arrow_of.size()) && arrow_of[box] != kNone; }
  Id embed(Id arrow) const { return carrier[arrow]; }
};

bool in_d(const DoubleGroupoid& t, Id a);
bool in_e(const DoubleGroupoid& t, Id a);
Id core_source(const DoubleGroupoid& t, CoreSide side, Id a);
Id core_target(const DoubleGroupoid& t, CoreSide side, Id a);

// The 2x2 array [[tl, tr], [bl, br]]; kNone if some composite is undefined.
Id square(const DoubleGroupoid& t, Id tl, Id tr, Id bl, Id br);

// D <> L, defined when e(D) = s(L). Throws std::domain_error otherwise.
Id d_compose(const DoubleGroupoid& t, Id d, Id l);
// M o E, defined when e(M) = s(E).
Id e_compose(const DoubleGroupoid& t, Id m, Id e);
// Closed-form inverses in D and E.
Id d_inverse(const DoubleGroupoid& t, Id d);
Id e_inverse(const DoubleGroupoid& t, Id e);

CoreGroupoid build_core(const DoubleGroupoid& t, CoreSide side);

// D -> D^h | vid t(D) for D in D; on E the inverse anti-isomorphism E -> (E^-1) inverted in D.
// Throws std::domain_error outside D and E.
Id dagger(const DoubleGroupoid& t, Id a);

enum class CanonicalMap { phi, alpha, psi, beta };
// phi(A) = A^-1 over hid r(A)      (t(A) a point) -> D
// alpha(A) = vid(b(A)^-1) | A      (l(A) a point) -> D
// psi(A) = hid l(A) over A^-1      (b(A) a point) -> E
// beta(A) = A | vid(t(A)^-1)       (r(A) a point) -> E
bool canonical_domain(const DoubleGroupoid& t, CanonicalMap which, Id a);
Id canonical_map(const DoubleGroupoid& t, CanonicalMap which, Id a);

enum class CoreAction {
  d_left,   // D -> A, needs rt(A) = e(D)
  d_right,  // A <- D, needs rb(A) = s(D)
  e_right,  // A -> E, needs lt(A) = s(E)
  e_left,   // E -> A, needs lb(A) = e(E)
};
bool action_defined(const DoubleGroupoid& t, CoreAction which, Id actor, Id a);
Id core_action(const DoubleGroupoid& t, CoreAction which, Id actor, Id a);

// A ~> E = hid l(A) over E over A^-1, for b(A) = b(E)^-1.
Id curve_action(const DoubleGroupoid& t, Id a, Id e);

struct CoreDiagram {
  // restricted product of H^op and V, arrows (x, g) with l(x) = b(g), r(x) = t(g)
  Groupoid target;
  std::vector<std::pair<Id, Id>> target_arrows;
  std::vector<Id> image;                 // per arrow of D, arrow of `target`
  std::vector<std::vector<Id>> kernel;   // per point, boxes of D with all sides identities there
  ValidationReport morphism;             // empty when d is a groupoid morphism
};
CoreDiagram core_diagram(const DoubleGroupoid& t, const CoreGroupoid& d);

}  // namespace dgq
