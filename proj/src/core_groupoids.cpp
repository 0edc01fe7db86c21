#include "dgq/core_groupoids.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace dgq {

namespace {

Id must(Id a, const char* what) {
  if (a == kNone) throw std::logic_error(std::string(what) + ": composite undefined in a valid double groupoid");
  return a;
}

}  // namespace

bool in_d(const DoubleGroupoid& t, Id a) { return t.v_point(t.left(a)) && t.h_point(t.bottom(a)); }
bool in_e(const DoubleGroupoid& t, Id a) { return t.v_point(t.right(a)) && t.h_point(t.top(a)); }

Id core_source(const DoubleGroupoid& t, CoreSide side, Id a) { return side == CoreSide::D ? t.tr(a) : t.bl(a); }
Id core_target(const DoubleGroupoid& t, CoreSide side, Id a) { return side == CoreSide::D ? t.tl(a) : t.br(a); }

Id square(const DoubleGroupoid& t, Id tl, Id tr, Id bl, Id br) {
  return t.hc(t.vc(tl, bl), t.vc(tr, br));
}

Id d_compose(const DoubleGroupoid& t, Id d, Id l) {
  if (!in_d(t, d) || !in_d(t, l) || t.tl(d) != t.tr(l)) throw std::domain_error("d_compose: not composable in D");
  return must(square(t, t.vid(t.top(l)), d, l, t.hid(t.right(l))), "d_compose");
}

Id e_compose(const DoubleGroupoid& t, Id m, Id e) {
  if (!in_e(t, m) || !in_e(t, e) || t.br(m) != t.bl(e)) throw std::domain_error("e_compose: not composable in E");
  return must(square(t, t.hid(t.left(e)), e, m, t.vid(t.bottom(e))), "e_compose");
}

Id d_inverse(const DoubleGroupoid& t, Id d) {
  if (!in_d(t, d)) throw std::domain_error("d_inverse: not in D");
  const auto& h = t.horizontal();
  return t.vinv(must(t.hcompose(t.vid(h.inverse(t.top(d))), d), "d_inverse"));
}

Id e_inverse(const DoubleGroupoid& t, Id e) {
  if (!in_e(t, e)) throw std::domain_error("e_inverse: not in E");
  const auto& h = t.horizontal();
  return t.vinv(must(t.hcompose(e, t.vid(h.inverse(t.bottom(e)))), "e_inverse"));
}

CoreGroupoid build_core(const DoubleGroupoid& t, CoreSide side) {
  CoreGroupoid c;
  c.side = side;
  c.arrow_of.assign(t.num_boxes(), kNone);
  for (Id a = 0; a < t.num_boxes(); ++a)
    if (side == CoreSide::D ? in_d(t, a) : in_e(t, a)) {
      c.arrow_of[a] = static_cast<Id>(c.carrier.size());
      c.carrier.push_back(a);
    }
  const Id n = static_cast<Id>(c.carrier.size());
  std::vector<Id> src(n), tgt(n), comp(static_cast<std::size_t>(n) * n, kNone);
  for (Id i = 0; i < n; ++i) {
    src[i] = core_source(t, side, c.carrier[i]);
    tgt[i] = core_target(t, side, c.carrier[i]);
  }
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j) {
      if (tgt[i] != src[j]) continue;
      Id box = side == CoreSide::D ? d_compose(t, c.carrier[i], c.carrier[j]) : e_compose(t, c.carrier[i], c.carrier[j]);
      comp[static_cast<std::size_t>(i) * n + j] = c.arrow_of[box];
    }
  c.as_groupoid = Groupoid::from_composition(t.num_points(), std::move(src), std::move(tgt), std::move(comp));
  return c;
}

Id dagger(const DoubleGroupoid& t, Id a) {
  if (in_d(t, a)) return must(t.hcompose(t.hinv(a), t.vid(t.top(a))), "dagger");
  if (in_e(t, a)) return d_inverse(t, t.inv(a));
  throw std::domain_error("dagger: box is in neither D nor E");
}

bool canonical_domain(const DoubleGroupoid& t, CanonicalMap which, Id a) {
  switch (which) {
    case CanonicalMap::phi: return t.h_point(t.top(a));
    case CanonicalMap::alpha: return t.v_point(t.left(a));
    case CanonicalMap::psi: return t.h_point(t.bottom(a));
    case CanonicalMap::beta: return t.v_point(t.right(a));
  }
  return false;
}

Id canonical_map(const DoubleGroupoid& t, CanonicalMap which, Id a) {
  if (!canonical_domain(t, which, a)) throw std::domain_error("canonical_map: box outside the domain");
  const auto& h = t.horizontal();
  switch (which) {
    case CanonicalMap::phi: return must(t.vcompose(t.inv(a), t.hid(t.right(a))), "phi");
    case CanonicalMap::alpha: return must(t.hcompose(t.vid(h.inverse(t.bottom(a))), a), "alpha");
    case CanonicalMap::psi: return must(t.vcompose(t.hid(t.left(a)), t.inv(a)), "psi");
    case CanonicalMap::beta: return must(t.hcompose(a, t.vid(h.inverse(t.top(a)))), "beta");
  }
  return kNone;
}

bool action_defined(const DoubleGroupoid& t, CoreAction which, Id actor, Id a) {
  switch (which) {
    case CoreAction::d_left: return in_d(t, actor) && t.tr(a) == core_target(t, CoreSide::D, actor);
    case CoreAction::d_right: return in_d(t, actor) && t.br(a) == core_source(t, CoreSide::D, actor);
    case CoreAction::e_right: return in_e(t, actor) && t.tl(a) == core_source(t, CoreSide::E, actor);
    case CoreAction::e_left: return in_e(t, actor) && t.bl(a) == core_target(t, CoreSide::E, actor);
  }
  return false;
}

Id core_action(const DoubleGroupoid& t, CoreAction which, Id actor, Id a) {
  if (!action_defined(t, which, actor, a)) throw std::domain_error("core_action: anchor mismatch");
  const auto& h = t.horizontal();
  switch (which) {
    case CoreAction::d_left:
      return must(square(t, t.vid(t.top(a)), actor, a, t.hid(t.right(a))), "d_left");
    case CoreAction::d_right: {
      Id corner = must(t.hcompose(t.vid(h.inverse(t.top(actor))), actor), "d_right");
      return must(square(t, a, t.hid(t.right(a)), t.vid(t.bottom(a)), corner), "d_right");
    }
    case CoreAction::e_right: {
      Id corner = must(t.hcompose(actor, t.vid(h.inverse(t.bottom(actor)))), "e_right");
      return must(square(t, corner, t.vid(t.top(a)), t.hid(t.left(a)), a), "e_right");
    }
    case CoreAction::e_left:
      return must(square(t, t.hid(t.left(a)), a, actor, t.vid(t.bottom(a))), "e_left");
  }
  return kNone;
}

Id curve_action(const DoubleGroupoid& t, Id a, Id e) {
  if (!in_e(t, e) || t.bottom(a) != t.horizontal().inverse(t.bottom(e)))
    throw std::domain_error("curve_action: need E in E and b(A) = b(E)^-1");
  return must(t.vc(t.vc(t.hid(t.left(a)), e), t.inv(a)), "curve_action");
}

CoreDiagram core_diagram(const DoubleGroupoid& t, const CoreGroupoid& d) {
  CoreDiagram out;
  auto [g, arrows] = restricted_product(opposite(t.horizontal()), t.vertical());
  out.target = std::move(g);
  out.target_arrows = std::move(arrows);
  std::map<std::pair<Id, Id>, Id> index;
  for (std::size_t i = 0; i < out.target_arrows.size(); ++i) index[out.target_arrows[i]] = static_cast<Id>(i);
  const Groupoid& dg = d.as_groupoid;
  out.image.resize(dg.num_arrows());
  out.kernel.assign(t.num_points(), {});
  for (Id i = 0; i < dg.num_arrows(); ++i) {
    Id box = d.embed(i);
    auto it = index.find({t.top(box), t.right(box)});
    out.image[i] = it == index.end() ? kNone : it->second;
    if (out.image[i] == kNone) out.morphism.fail("core-diagram-image", {box});
    if (t.h_point(t.top(box)) && t.v_point(t.right(box))) out.kernel[t.tl(box)].push_back(box);
  }
  if (!out.morphism.ok()) return out;
  for (Id i = 0; i < dg.num_arrows(); ++i)
    for (Id j : dg.arrows_from(dg.target(i))) {
      Id ij = dg.compose(i, j);
      if (ij == kNone || out.image[ij] != out.target.compose(out.image[i], out.image[j]))
        out.morphism.fail("core-diagram-morphism", {d.embed(i), d.embed(j)});
    }
  for (Id p = 0; p < t.num_points(); ++p)
    if (out.image[d.arrow_of[t.theta_box(p)]] != out.target.identity(p))
      out.morphism.fail("core-diagram-identity", {t.theta_box(p)});
  out.morphism.sort();
  return out;
}

}  // namespace dgq
