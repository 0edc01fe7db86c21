#include "dgq/double_groupoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dgq/parallel.hpp"

namespace dgq {

const char* corner_name(CornerKind k) {
  switch (k) {
    case CornerKind::UL: return "UL";
    case CornerKind::UR: return "UR";
    case CornerKind::LL: return "LL";
    case CornerKind::LR: return "LR";
  }
  return "?";
}

DoubleGroupoid::DoubleGroupoid(Groupoid horizontal, Groupoid vertical, Groupoid boxes_h, Groupoid boxes_v)
    : h_(std::move(horizontal)), v_(std::move(vertical)), bh_(std::move(boxes_h)), bv_(std::move(boxes_v)) {
  tabulate();
}

DoubleGroupoid DoubleGroupoid::assemble(Groupoid horizontal, Groupoid vertical, std::vector<Id> top,
                                        std::vector<Id> bottom, std::vector<Id> left, std::vector<Id> right,
                                        std::vector<Id> hcompose, std::vector<Id> vcompose) {
  Id nv = vertical.num_arrows();
  Id nh = horizontal.num_arrows();
  auto bh = Groupoid::from_composition(nv, std::move(left), std::move(right), std::move(hcompose));
  auto bv = Groupoid::from_composition(nh, std::move(top), std::move(bottom), std::move(vcompose));
  return DoubleGroupoid(std::move(horizontal), std::move(vertical), std::move(bh), std::move(bv));
}

void DoubleGroupoid::tabulate() {
  const std::size_t cells = static_cast<std::size_t>(num_v()) * static_cast<std::size_t>(num_h());
  for (auto& c : corner_) c.assign(cells, 0);
  const Id nb = num_boxes();
  if (static_cast<Id>(bv_.sources().size()) != nb) return;
  for (Id a = 0; a < nb; ++a) {
    Id tp = top(a), bt = bottom(a), lf = left(a), rt = right(a);
    if (tp < 0 || tp >= num_h() || bt < 0 || bt >= num_h() || lf < 0 || lf >= num_v() || rt < 0 || rt >= num_v())
      continue;
    ++corner_[0][static_cast<std::size_t>(lf) * num_h() + tp];
    ++corner_[1][static_cast<std::size_t>(rt) * num_h() + tp];
    ++corner_[2][static_cast<std::size_t>(lf) * num_h() + bt];
    ++corner_[3][static_cast<std::size_t>(rt) * num_h() + bt];
  }
}

Id DoubleGroupoid::inverse(Id a, InverseKind k) const {
  switch (k) {
    case InverseKind::horizontal: return hinv(a);
    case InverseKind::vertical: return vinv(a);
    case InverseKind::total: return inv(a);
  }
  return kNone;
}

bool DoubleGroupoid::corner_domain(CornerKind k, Id g, Id x) const {
  switch (k) {
    case CornerKind::UL: return t(g) == l(x);
    case CornerKind::UR: return t(g) == r(x);
    case CornerKind::LL: return b(g) == l(x);
    case CornerKind::LR: return b(g) == r(x);
  }
  return false;
}

Id DoubleGroupoid::corner(CornerKind k, Id g, Id x) const {
  if (!corner_domain(k, g, x))
    throw std::domain_error(std::string("corner ") + corner_name(k) + ": sides do not meet (" + std::to_string(g) +
                            "," + std::to_string(x) + ")");
  return corner_[static_cast<int>(k)][static_cast<std::size_t>(g) * num_h() + x];
}

Id DoubleGroupoid::corner(CornerKind k, Id a) const {
  switch (k) {
    case CornerKind::UL: return corner(k, left(a), top(a));
    case CornerKind::UR: return corner(k, right(a), top(a));
    case CornerKind::LL: return corner(k, left(a), bottom(a));
    case CornerKind::LR: return corner(k, right(a), bottom(a));
  }
  return 0;
}

std::vector<std::pair<Id, Id>> DoubleGroupoid::hfactorizations(Id a) const {
  std::vector<std::pair<Id, Id>> out;
  for (Id x : with_left(left(a))) out.emplace_back(x, hcompose(hinv(x), a));
  return out;
}

std::vector<std::pair<Id, Id>> DoubleGroupoid::vfactorizations(Id a) const {
  std::vector<std::pair<Id, Id>> out;
  for (Id x : with_top(top(a))) out.emplace_back(x, vcompose(vinv(x), a));
  return out;
}

DoubleGroupoid DoubleGroupoid::transpose() const { return DoubleGroupoid(v_, h_, bv_, bh_); }

namespace {

void check_structure(const DoubleGroupoid& t, ValidationReport& rep) {
  const Id nb = t.num_boxes();
  const auto& bh = t.boxes_h();
  const auto& bv = t.boxes_v();
  if (bh.num_arrows() != bv.num_arrows()) {
    rep.broken("box-count-mismatch", {bh.num_arrows(), bv.num_arrows()});
    return;
  }
  if (bh.num_objects() != t.num_v()) rep.broken("horizontal-box-base", {bh.num_objects(), t.num_v()});
  if (bv.num_objects() != t.num_h()) rep.broken("vertical-box-base", {bv.num_objects(), t.num_h()});
  if (t.horizontal().num_objects() != t.vertical().num_objects())
    rep.broken("point-count-mismatch", {t.horizontal().num_objects(), t.vertical().num_objects()});
  (void)nb;
}

// Interchange law and, with `inverses`, the inverses of 2x2 arrays; partitioned by the top-left box.
std::vector<Violation> square_failures(const DoubleGroupoid& t, bool inverses) {
  const Id nb = t.num_boxes();
  return parallel_collect<Violation>(static_cast<std::size_t>(nb), [&](std::size_t i, auto& out) {
    const Id a = static_cast<Id>(i);
    for (Id bb : t.with_left(t.right(a)))
      for (Id c : t.with_top(t.bottom(a)))
        for (Id d : t.with_left(t.right(c))) {
          if (t.top(d) != t.bottom(bb)) continue;
          Id rows = t.vc(t.hcompose(a, bb), t.hcompose(c, d));
          Id cols = t.hc(t.vcompose(a, c), t.vcompose(bb, d));
          if (rows == kNone || rows != cols) {
            out.push_back({"interchange", {a, bb, c, d}, {}});
            continue;
          }
          if (!inverses) continue;
          Id hrow = t.vc(t.hc(t.hinv(bb), t.hinv(a)), t.hc(t.hinv(d), t.hinv(c)));
          if (t.hinv(rows) != hrow) out.push_back({"square-horizontal-inverse", {a, bb, c, d}, {}});
          Id vrow = t.vc(t.hc(t.vinv(c), t.vinv(d)), t.hc(t.vinv(a), t.vinv(bb)));
          if (t.vinv(rows) != vrow) out.push_back({"square-vertical-inverse", {a, bb, c, d}, {}});
          Id trow = t.vc(t.hc(t.inv(d), t.inv(c)), t.hc(t.inv(bb), t.inv(a)));
          if (t.inv(rows) != trow) out.push_back({"square-total-inverse", {a, bb, c, d}, {}});
        }
  });
}

}  // namespace

ValidationReport validate(const DoubleGroupoid& t) {
  ValidationReport rep;
  check_structure(t, rep);
  if (!rep.structural.empty()) return rep;
  rep.absorb(validate_groupoid(t.horizontal()), "H:");
  rep.absorb(validate_groupoid(t.vertical()), "V:");
  rep.absorb(validate_groupoid(t.boxes_h()), "B=>V:");
  rep.absorb(validate_groupoid(t.boxes_v()), "B=>H:");
  // Later checks dereference identities and inverses, so stop at the groupoid level if broken;
  // the interchange law only reads the composition tables and is still reported.
  if (!rep.ok()) {
    for (auto& v : square_failures(t, false)) rep.failures.push_back(std::move(v));
    rep.sort();
    return rep;
  }

  const Id nb = t.num_boxes();
  for (Id a = 0; a < nb; ++a) {
    const Id x = t.top(a), y = t.bottom(a), g = t.left(a), k = t.right(a);
    if (t.l(x) != t.t(g) || t.r(x) != t.t(k) || t.l(y) != t.b(g) || t.r(y) != t.b(k))
      rep.fail("box-corners", {a});
  }
  if (!rep.ok()) {
    rep.sort();
    return rep;
  }

  // Side maps of composites.
  for (Id a = 0; a < nb; ++a) {
    for (Id c : t.with_left(t.right(a))) {
      Id ac = t.hcompose(a, c);
      if (t.top(ac) != t.hmul(t.top(a), t.top(c)) || t.bottom(ac) != t.hmul(t.bottom(a), t.bottom(c)))
        rep.fail("horizontal-composite-sides", {a, c, ac});
    }
    for (Id c : t.with_top(t.bottom(a))) {
      Id ac = t.vcompose(a, c);
      if (t.left(ac) != t.vmul(t.left(a), t.left(c)) || t.right(ac) != t.vmul(t.right(a), t.right(c)))
        rep.fail("vertical-composite-sides", {a, c, ac});
    }
  }

  // Identity boxes.
  for (Id x = 0; x < t.num_h(); ++x) {
    Id e = t.vid(x);
    if (t.left(e) != t.vertical().identity(t.l(x)) || t.right(e) != t.vertical().identity(t.r(x)))
      rep.fail("vertical-identity-sides", {x, e});
  }
  for (Id g = 0; g < t.num_v(); ++g) {
    Id e = t.hid(g);
    if (t.top(e) != t.horizontal().identity(t.t(g)) || t.bottom(e) != t.horizontal().identity(t.b(g)))
      rep.fail("horizontal-identity-sides", {g, e});
  }
  for (Id p = 0; p < t.num_points(); ++p)
    if (t.vid(t.horizontal().identity(p)) != t.hid(t.vertical().identity(p)))
      rep.fail("theta-box", {p});
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id y : t.horizontal().arrows_from(t.r(x)))
      if (t.hcompose(t.vid(x), t.vid(y)) != t.vid(t.hmul(x, y))) rep.fail("vertical-identities-compose", {x, y});
  for (Id g = 0; g < t.num_v(); ++g)
    for (Id k : t.vertical().arrows_from(t.b(g)))
      if (t.vcompose(t.hid(g), t.hid(k)) != t.hid(t.vmul(g, k))) rep.fail("horizontal-identities-compose", {g, k});

  // Inverses.
  for (Id a = 0; a < nb; ++a) {
    Id ah = t.hinv(a), av = t.vinv(a);
    if (t.top(ah) != t.horizontal().inverse(t.top(a)) || t.bottom(ah) != t.horizontal().inverse(t.bottom(a)))
      rep.fail("horizontal-inverse-sides", {a, ah});
    if (t.left(av) != t.vertical().inverse(t.left(a)) || t.right(av) != t.vertical().inverse(t.right(a)))
      rep.fail("vertical-inverse-sides", {a, av});
    if (t.vinv(ah) != t.hinv(av)) rep.fail("total-inverse", {a});
  }

  for (auto& v : square_failures(t, true)) rep.failures.push_back(std::move(v));
  rep.sort();
  return rep;
}

void require_valid(const DoubleGroupoid& t, const char* what) {
  auto rep = validate(t);
  if (rep.ok()) return;
  const auto& v = rep.structural.empty() ? rep.failures.front() : rep.structural.front();
  std::string w;
  for (Id i : v.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
  throw std::logic_error(std::string(what) + ": invalid double groupoid (" + v.axiom + " at " + w + ")");
}

std::vector<DoubleFactorization> double_factorizations(const DoubleGroupoid& t, Id x, Id y, Id a, Id b) {
  Id xy = t.hc(x, y);
  if (xy == kNone || xy != t.vc(a, b))
    throw std::domain_error("double_factorizations: XY is not the vertical composite of A and B");
  std::vector<DoubleFactorization> out;
  for (Id u : t.with_left(t.left(a))) {
    if (t.top(u) != t.top(x)) continue;
    Id v = t.hc(t.hinv(u), a);
    Id r = t.vc(t.vinv(u), x);
    if (v == kNone || r == kNone) continue;
    Id s = t.hc(t.hinv(r), b);
    if (s == kNone || t.vc(v, s) != y) continue;
    out.push_back({u, v, r, s});
  }
  return out;
}

bool filling_condition(const DoubleGroupoid& t, std::pair<Id, Id>* witness) {
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id g : t.vertical().arrows_from(t.r(x)))
      if (t.corner(CornerKind::UR, g, x) == 0) {
        if (witness) *witness = {g, x};
        return false;
      }
  return true;
}

std::array<bool, 4> filling_by_corner(const DoubleGroupoid& t) {
  std::array<bool, 4> ok{true, true, true, true};
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id g = 0; g < t.num_v(); ++g)
      for (CornerKind k : kAllCorners)
        if (t.corner_domain(k, g, x) && t.corner(k, g, x) == 0) ok[static_cast<int>(k)] = false;
  return ok;
}

bool is_vacant(const DoubleGroupoid& t) {
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id g = 0; g < t.num_v(); ++g)
      for (CornerKind k : kAllCorners)
        if (t.corner_domain(k, g, x) && t.corner(k, g, x) != 1) return false;
  return true;
}

TransitivityFlags transitivity_flags(const DoubleGroupoid& t) {
  // Configurations indexed by a pair of adjacent sides; the third side is looked up in the
  // corresponding box lists.
  auto completes = [&](std::span<const Id> boxes, auto pred) {
    return std::any_of(boxes.begin(), boxes.end(), pred);
  };
  TransitivityFlags f{true, true, false, true, true};
  const auto& H = t.horizontal();
  const auto& V = t.vertical();
  for (Id y = 0; y < t.num_h() && f.horizontally_transitive; ++y)
    for (Id gl : V.arrows_to(t.l(y)))
      for (Id gr : V.arrows_to(t.r(y)))
        if (!completes(t.with_bottom(y), [&](Id a) { return t.left(a) == gl && t.right(a) == gr; }))
          f.horizontally_transitive = false;
  for (Id x = 0; x < t.num_h() && f.horizontally_transitive_alt; ++x)
    for (Id gl : V.arrows_from(t.l(x)))
      for (Id gr : V.arrows_from(t.r(x)))
        if (!completes(t.with_top(x), [&](Id a) { return t.left(a) == gl && t.right(a) == gr; }))
          f.horizontally_transitive_alt = false;
  for (Id g = 0; g < t.num_v() && f.vertically_transitive; ++g)
    for (Id x : H.arrows_from(t.t(g)))
      for (Id y : H.arrows_from(t.b(g)))
        if (!completes(t.with_left(g), [&](Id a) { return t.top(a) == x && t.bottom(a) == y; }))
          f.vertically_transitive = false;
  for (Id g = 0; g < t.num_v() && f.vertically_transitive_alt; ++g)
    for (Id x : H.arrows_to(t.t(g)))
      for (Id y : H.arrows_to(t.b(g)))
        if (!completes(t.with_right(g), [&](Id a) { return t.top(a) == x && t.bottom(a) == y; }))
          f.vertically_transitive_alt = false;
  f.locally_trivial = f.horizontally_transitive && f.vertically_transitive;
  return f;
}

}  // namespace dgq
