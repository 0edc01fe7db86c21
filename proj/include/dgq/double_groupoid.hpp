#pragma once

#include <array>
#include <span>
#include <vector>

#include "dgq/groupoid.hpp"
#include "dgq/report.hpp"

namespace dgq {

enum class InverseKind { horizontal, vertical, total };

// UL counts boxes with given left and top, UR right and top, LL left and bottom, LR right and bottom.
enum class CornerKind { UL, UR, LL, LR };
inline constexpr std::array<CornerKind, 4> kAllCorners{CornerKind::UL, CornerKind::UR, CornerKind::LL,
                                                       CornerKind::LR};
const char* corner_name(CornerKind k);

// Finite double groupoid.
//   H => P: horizontal arrows x from l(x) to r(x).
//   V => P: vertical arrows g from t(g) to b(g).
//   B => V: horizontal composition of boxes; a box goes from its left side to its right side.
//   B => H: vertical composition of boxes; a box goes from its top side to its bottom side.
// The two box groupoids carry hcompose/hid/A^h and vcompose/vid/A^v respectively.
class DoubleGroupoid {
 public:
  DoubleGroupoid() = default;
  DoubleGroupoid(Groupoid horizontal, Groupoid vertical, Groupoid boxes_h, Groupoid boxes_v);

  // Builds from side maps and composition tables (|B| x |B|, kNone when undefined);
  // identity boxes and inverses are derived from the tables.
  static DoubleGroupoid assemble(Groupoid horizontal, Groupoid vertical, std::vector<Id> top,
                                 std::vector<Id> bottom, std::vector<Id> left, std::vector<Id> right,
                                 std::vector<Id> hcompose, std::vector<Id> vcompose);

  const Groupoid& horizontal() const { return h_; }
  const Groupoid& vertical() const { return v_; }
  const Groupoid& boxes_h() const { return bh_; }
  const Groupoid& boxes_v() const { return bv_; }

  Id num_points() const { return h_.num_objects(); }
  Id num_h() const { return h_.num_arrows(); }
  Id num_v() const { return v_.num_arrows(); }
  Id num_boxes() const { return bh_.num_arrows(); }

  // Ends of horizontal and vertical arrows.
  Id l(Id x) const { return h_.source(x); }
  Id r(Id x) const { return h_.target(x); }
  Id t(Id g) const { return v_.source(g); }
  Id b(Id g) const { return v_.target(g); }

  Id top(Id a) const { return bv_.source(a); }
  Id bottom(Id a) const { return bv_.target(a); }
  Id left(Id a) const { return bh_.source(a); }
  Id right(Id a) const { return bh_.target(a); }

  Id tl(Id a) const { return l(top(a)); }
  Id tr(Id a) const { return r(top(a)); }
  Id bl(Id a) const { return l(bottom(a)); }
  Id br(Id a) const { return r(bottom(a)); }

  Id hcompose(Id a, Id c) const { return bh_.compose(a, c); }
  Id vcompose(Id a, Id c) const { return bv_.compose(a, c); }
  // hcompose/vcompose returning kNone whenever an argument is kNone.
  Id hc(Id a, Id c) const { return a == kNone || c == kNone ? kNone : bh_.compose(a, c); }
  Id vc(Id a, Id c) const { return a == kNone || c == kNone ? kNone : bv_.compose(a, c); }
  Id hmul(Id x, Id y) const { return x == kNone || y == kNone ? kNone : h_.compose(x, y); }
  Id vmul(Id g, Id k) const { return g == kNone || k == kNone ? kNone : v_.compose(g, k); }

  Id vid(Id x) const { return bv_.identity(x); }    // box with top = bottom = x
  Id hid(Id g) const { return bh_.identity(g); }    // box with left = right = g
  Id theta_box(Id p) const { return vid(h_.identity(p)); }
  Id hinv(Id a) const { return bh_.inverse(a); }
  Id vinv(Id a) const { return bv_.inverse(a); }
  Id inv(Id a) const { return vinv(hinv(a)); }
  Id inverse(Id a, InverseKind k) const;

  bool h_point(Id x) const { return h_.is_identity(x); }
  bool v_point(Id g) const { return v_.is_identity(g); }
  bool is_vertical_identity(Id a) const { return vid(top(a)) == a; }
  bool is_horizontal_identity(Id a) const { return hid(left(a)) == a; }

  std::span<const Id> with_left(Id g) const { return bh_.arrows_from(g); }
  std::span<const Id> with_right(Id g) const { return bh_.arrows_to(g); }
  std::span<const Id> with_top(Id x) const { return bv_.arrows_from(x); }
  std::span<const Id> with_bottom(Id x) const { return bv_.arrows_to(x); }

  // Corner counts; require the matching fibered product (UL: t(g) = l(x), UR: t(g) = r(x),
  // LL: b(g) = l(x), LR: b(g) = r(x)), otherwise std::domain_error.
  Id corner(CornerKind k, Id g, Id x) const;
  // Corner of a box: UL(A) = UL(l A, t A), UR(A) = UR(r A, t A), LL(A) = LL(l A, b A), LR(A) = LR(r A, b A).
  Id corner(CornerKind k, Id a) const;
  Id theta(Id p) const { return corner(CornerKind::UL, v_.identity(p), h_.identity(p)); }
  bool corner_domain(CornerKind k, Id g, Id x) const;

  // Horizontal factorizations A = XY, listed by X (all X with l(X) = l(A)).
  std::vector<std::pair<Id, Id>> hfactorizations(Id a) const;
  // Vertical factorizations A = X over Y, listed by X (all X with t(X) = t(A)).
  std::vector<std::pair<Id, Id>> vfactorizations(Id a) const;

  DoubleGroupoid transpose() const;

  friend bool operator==(const DoubleGroupoid& a, const DoubleGroupoid& b) {
    return a.h_ == b.h_ && a.v_ == b.v_ && a.bh_ == b.bh_ && a.bv_ == b.bv_;
  }

 private:
  void tabulate();

  Groupoid h_, v_, bh_, bv_;
  std::array<std::vector<Id>, 4> corner_;
};

// Exhaustive check of the double groupoid axioms; empty report means valid.
ValidationReport validate(const DoubleGroupoid& t);

// Convenience for builders: throws std::logic_error with the first failure.
void require_valid(const DoubleGroupoid& t, const char* what);

struct DoubleFactorization {
  Id u, v, r, s;
  friend bool operator==(const DoubleFactorization&, const DoubleFactorization&) = default;
  friend auto operator<=>(const DoubleFactorization&, const DoubleFactorization&) = default;
};

// All (U,V,R,S) in a 2x2 array with UV = A, RS = B, U over R = X, V over S = Y.
// Requires XY = A over B; otherwise std::domain_error.
std::vector<DoubleFactorization> double_factorizations(const DoubleGroupoid& t, Id x, Id y, Id a, Id b);

// Every composable (g, x) with t(g) = r(x) bounds a box. Returns a witness (g, x) on failure.
bool filling_condition(const DoubleGroupoid& t, std::pair<Id, Id>* witness = nullptr);
// Filling condition tested through each of the four corner maps.
std::array<bool, 4> filling_by_corner(const DoubleGroupoid& t);

bool is_vacant(const DoubleGroupoid& t);

struct TransitivityFlags {
  bool horizontally_transitive = false;  // left, right, bottom always complete
  bool vertically_transitive = false;    // top, left, bottom always complete
  bool locally_trivial = false;
  // The equivalent formulations (left, right, top) and (top, right, bottom).
  bool horizontally_transitive_alt = false;
  bool vertically_transitive_alt = false;
};
TransitivityFlags transitivity_flags(const DoubleGroupoid& t);

}  // namespace dgq
