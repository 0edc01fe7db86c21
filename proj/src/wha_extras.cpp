#include "dgq/wha_extras.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "dgq/core_groupoids.hpp"

namespace dgq {

namespace {

std::string dump(const Element& e) { return to_string(e); }
std::string dump(const Tensor2& e) { return to_string(e); }

template <class L, class R>
void expect_equal(ValidationReport& rep, const char* axiom, std::vector<Id> witness, const L& lhs, const R& rhs) {
  if (!(lhs == rhs)) rep.fail(axiom, std::move(witness), "lhs = " + dump(lhs) + "; rhs = " + dump(rhs));
}

ThetaWeights require_theta(const WeakHopf& w, const char* what) {
  auto th = effective_theta(w);
  if (!th) throw std::logic_error(std::string(what) + ": no theta weights for this deformation");
  return *th;
}

Element scaled(Id a, const Rational& c) { return Element(a, c); }

}  // namespace

std::optional<ThetaWeights> effective_theta(const WeakHopf& w) {
  if (w.theta_type()) return *w.theta();
  const DoubleGroupoid& t = w.dgpd();
  std::vector<std::optional<Rational>> vals(t.num_points());
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id c : t.with_left(t.right(a))) {
      Rational v = w.tau(a, c);
      auto& slot = vals[t.bl(c)];
      if (!slot) slot = v;
      else if (*slot != v) return std::nullopt;
    }
  std::vector<Rational> out;
  for (auto& v : vals) {
    if (!v || v->is_zero()) return std::nullopt;
    out.push_back(*v);
  }
  return ThetaWeights(std::move(out));
}

Id span_rank(const std::vector<Element>& elements, Id dim) {
  RatMatrix m(static_cast<Id>(elements.size()), dim);
  for (Id i = 0; i < m.rows(); ++i)
    for (const auto& [a, c] : elements[i]) m.at(i, a) = c;
  return rank(std::move(m));
}

Id source_dimension(const WeakHopf& w) {
  std::vector<Element> img;
  for (Id a = 0; a < w.dim(); ++a)
    if (auto e = w.source_map(a); !e.empty()) img.push_back(std::move(e));
  return span_rank(img, w.dim());
}

Id target_dimension(const WeakHopf& w) {
  std::vector<Element> img;
  for (Id a = 0; a < w.dim(); ++a)
    if (auto e = w.target_map(a); !e.empty()) img.push_back(std::move(e));
  return span_rank(img, w.dim());
}

Tensor2 delta_one_by_d(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "delta_one_by_d");
  Tensor2 out;
  for (Id d : build_core(t, CoreSide::D).carrier) {
    const Id dd = dagger(t, d);
    out.add(tensor(d_one(t, d), one_e(t, dd)), th.daleth(t, dd));
  }
  return out;
}

Tensor2 delta_one_by_e(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "delta_one_by_e");
  Tensor2 out;
  for (Id e : build_core(t, CoreSide::E).carrier) {
    const Id ed = d_inverse(t, t.inv(e));
    out.add(tensor(d_one(t, ed), one_e(t, e)), th.daleth(t, e));
  }
  return out;
}

Element pivotal_element(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "pivotal_element");
  Element g;
  for (Id x = 0; x < t.num_h(); ++x) g.add(t.vid(x), th.at(t.l(x)) / th.at(t.r(x)));
  return g;
}

Element pivotal_inverse(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "pivotal_inverse");
  Element g;
  for (Id x = 0; x < t.num_h(); ++x) g.add(t.vid(x), th.at(t.r(x)) / th.at(t.l(x)));
  return g;
}

Element pivotal_seed(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "pivotal_seed");
  Element u;
  for (Id p = 0; p < t.num_points(); ++p) u.add(one_e(t, t.theta_box(p)), th.at(p).inverse());
  return u;
}

Element pivotal_seed_inverse(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = require_theta(w, "pivotal_seed_inverse");
  Element u;
  for (Id p = 0; p < t.num_points(); ++p) u.add(one_e(t, t.theta_box(p)), th.at(p));
  return u;
}

ValidationReport check_core_products(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  ValidationReport rep;
  const CoreGroupoid dcore = build_core(t, CoreSide::D);
  const CoreGroupoid ecore = build_core(t, CoreSide::E);
  const Id nd = static_cast<Id>(dcore.carrier.size());
  const Id ne = static_cast<Id>(ecore.carrier.size());

  std::vector<Element> ones_d, ones_e;
  for (Id d : dcore.carrier) ones_d.push_back(d_one(t, d));
  for (Id e : ecore.carrier) ones_e.push_back(one_e(t, e));
  if (span_rank(ones_d, w.dim()) != nd) rep.fail("injective-d", {}, "rank below |D| = " + std::to_string(nd));
  if (span_rank(ones_e, w.dim()) != ne) rep.fail("injective-e", {}, "rank below |E| = " + std::to_string(ne));
  if (Id s = source_dimension(w); s != nd)
    rep.fail("source-dim", {s, nd}, "dim = " + std::to_string(s) + ", |D| = " + std::to_string(nd));
  if (Id s = target_dimension(w); s != ne)
    rep.fail("target-dim", {s, ne}, "dim = " + std::to_string(s) + ", |E| = " + std::to_string(ne));

  if (!w.theta_type()) {
    rep.sort();
    return rep;
  }

  for (Id i = 0; i < nd; ++i)
    for (Id j = 0; j < nd; ++j) {
      const Id d = dcore.carrier[i], l = dcore.carrier[j];
      Element want;
      if (core_target(t, CoreSide::D, d) == core_source(t, CoreSide::D, l)) want = ones_d[dcore.arrow_of[d_compose(t, d, l)]];
      expect_equal(rep, "gpd-st-d", {d, l}, w.mult(ones_d[i], ones_d[j]), want);
    }
  for (Id i = 0; i < ne; ++i)
    for (Id j = 0; j < ne; ++j) {
      const Id e = ecore.carrier[i], m = ecore.carrier[j];
      Element want;
      if (core_target(t, CoreSide::E, m) == core_source(t, CoreSide::E, e)) want = ones_e[ecore.arrow_of[e_compose(t, m, e)]];
      expect_equal(rep, "gpd-st-e", {e, m}, w.mult(ones_e[i], ones_e[j]), want);
    }

  auto acted = [&](CoreAction act, Id actor, Id a) {
    return action_defined(t, act, actor, a) ? Element(core_action(t, act, actor, a)) : Element();
  };
  for (Id a = 0; a < t.num_boxes(); ++a) {
    const Element ea(a);
    for (Id i = 0; i < nd; ++i) {
      const Id d = dcore.carrier[i];
      expect_equal(rep, "d1-a", {d, a}, w.mult(ones_d[i], ea), acted(CoreAction::d_left, d, a));
      expect_equal(rep, "a-d1", {a, d}, w.mult(ea, ones_d[i]), acted(CoreAction::d_right, d, a));
    }
    for (Id i = 0; i < ne; ++i) {
      const Id e = ecore.carrier[i];
      expect_equal(rep, "1e-a", {e, a}, w.mult(ones_e[i], ea), acted(CoreAction::e_right, e, a));
      expect_equal(rep, "a-1e", {a, e}, w.mult(ea, ones_e[i]), acted(CoreAction::e_left, e, a));
    }
  }

  // Commutation with vertical identities: _D 1 vid(z) = vid(z t(D)) _D 1 when r(z) = e(D), and
  // 1_E vid(y) = vid(b(E)^-1 y) 1_E when l(y) = s(E); zero otherwise.
  const Groupoid& h = t.horizontal();
  for (Id z = 0; z < t.num_h(); ++z) {
    const Element vz(t.vid(z));
    for (Id i = 0; i < nd; ++i) {
      const Id d = dcore.carrier[i];
      Element want;
      if (t.r(z) == core_target(t, CoreSide::D, d)) want = w.mult(Element(t.vid(h.compose(z, t.top(d)))), ones_d[i]);
      expect_equal(rep, "d1-x", {d, z}, w.mult(ones_d[i], vz), want);
    }
    for (Id i = 0; i < ne; ++i) {
      const Id e = ecore.carrier[i];
      Element want;
      if (t.l(z) == core_source(t, CoreSide::E, e))
        want = w.mult(Element(t.vid(h.compose(h.inverse(t.bottom(e)), z))), ones_e[i]);
      expect_equal(rep, "1e-x", {e, z}, w.mult(ones_e[i], vz), want);
    }
  }
  rep.sort();
  return rep;
}

ValidationReport check_delta_one(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  ValidationReport rep;
  const Tensor2 d1 = w.coproduct(w.unit());
  expect_equal(rep, "delta-1", {}, d1, delta_one_by_d(w));
  expect_equal(rep, "delta-1-by-e", {}, d1, delta_one_by_e(w));
  const Groupoid& h = t.horizontal();
  for (Id x = 0; x < t.num_h(); ++x) {
    Tensor2 split;
    for (Id z : h.arrows_from(t.l(x))) split.add({t.vid(z), t.vid(h.compose(h.inverse(z), x))}, Rational(1));
    expect_equal(rep, "delta-x", {x}, w.coproduct(t.vid(x)), w.mult(d1, split));
  }
  rep.sort();
  return rep;
}

ValidationReport check_pivotal(const WeakHopf& w) {
  ValidationReport rep;
  if (!w.has_antipode()) {
    rep.fail("antipode-missing", {});
    return rep;
  }
  const Element one = w.unit();
  const Element g = pivotal_element(w), gi = pivotal_inverse(w);
  const Element u = pivotal_seed(w), ui = pivotal_seed_inverse(w);
  expect_equal(rep, "pivotal-inverse", {}, w.mult(g, gi), one);
  expect_equal(rep, "pivotal-inverse", {}, w.mult(gi, g), one);
  expect_equal(rep, "seed-inverse", {}, w.mult(u, ui), one);
  expect_equal(rep, "seed-inverse", {}, w.mult(ui, u), one);
  expect_equal(rep, "pivotal-seed", {}, w.mult(w.antipode(u), ui), g);
  for (Id a = 0; a < w.dim(); ++a)
    expect_equal(rep, "pivotal-conjugation", {a}, w.antipode(w.antipode(a)), w.mult(w.mult(gi, Element(a)), g));
  expect_equal(rep, "pivotal-grouplike", {}, w.coproduct(g), w.mult(w.coproduct(one), tensor(g, g)));
  rep.sort();
  return rep;
}

std::vector<Rational> AntipodeAnalysis::spectrum() const {
  std::set<Rational> s(square.begin(), square.end());
  return {s.begin(), s.end()};
}

AntipodeAnalysis antipode_analysis(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  if (!w.has_antipode()) throw std::logic_error("antipode_analysis: no antipode");
  AntipodeAnalysis out;
  out.square.resize(w.dim());
  out.is_involutive = true;
  for (Id a = 0; a < w.dim(); ++a) {
    out.square[a] = w.antipode_coeff(a) * w.antipode_coeff(t.inv(a));
    if (!out.square[a].is_one()) out.is_involutive = false;
  }

  out.is_regular = true;
  for (Id a = 0; a < w.dim() && out.is_regular; ++a)
    for (const Element& e : {w.source_map(a), w.target_map(a)})
      if (w.antipode(w.antipode(e)) != e) out.is_regular = false;

  const auto th = effective_theta(w);
  if (!th) return out;
  for (Id a = 0; a < w.dim(); ++a)
    out.closed_form.push_back(th->at(t.bl(a)) * th->at(t.tr(a)) / (th->at(t.br(a)) * th->at(t.tl(a))));
  out.matches_closed_form = out.closed_form == out.square;

  const CoreGroupoid dcore = build_core(t, CoreSide::D);
  out.constant_on_d_components = true;
  for (Id d : dcore.carrier)
    if (th->at(core_source(t, CoreSide::D, d)) != th->at(core_target(t, CoreSide::D, d)))
      out.constant_on_d_components = false;

  if (w.theta_type()) {
    bool ok = true;
    for (Id e : build_core(t, CoreSide::E).carrier)
      ok = ok && w.antipode(one_e(t, e)) == d_one(t, t.inv(e));
    for (Id d : dcore.carrier) {
      const Rational c = th->at(core_target(t, CoreSide::D, d)) / th->at(core_source(t, CoreSide::D, d));
      ok = ok && w.antipode(d_one(t, d)) == c * one_e(t, t.inv(d));
    }
    out.unit_antipodes = ok;
  }
  return out;
}

Element StarStructure::star(const DoubleGroupoid& t, const Element& x) const {
  Element out;
  for (const auto& [a, c] : x) out.add(t.vinv(a), c * lambda[a]);
  return out;
}

StarStructure star_structure(const WeakHopf& w) {
  if (!w.theta_type() || !w.theta()->all_positive())
    throw std::invalid_argument("star_structure: needs positive theta weights");
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights& th = *w.theta();
  StarStructure s;
  auto& rep = s.report;
  for (Id a = 0; a < t.num_boxes(); ++a) s.lambda.push_back(th.at(t.tr(a)) / th.at(t.br(a)));

  for (Id a = 0; a < t.num_boxes(); ++a) {
    for (Id b : t.with_top(t.bottom(a))) {
      const Id ab = t.vcompose(a, b);
      if (s.lambda[ab] != s.lambda[a] * s.lambda[b]) rep.fail("char-vertical", {a, b});
    }
    for (Id b : t.with_left(t.right(a))) {
      const Id ab = t.hcompose(a, b);
      if (s.lambda[ab] != s.lambda[b]) rep.fail("char-horizontal", {a, b});
    }
  }

  for (Id a = 0; a < t.num_boxes(); ++a) {
    const Element ea(a);
    const Element sa = s.star(t, ea);
    expect_equal(rep, "involution", {a}, s.star(t, sa), ea);
    Tensor2 starred;
    for (const auto& [xy, c] : w.coproduct(a)) starred.add(tensor(s.star(t, Element(xy[0])), s.star(t, Element(xy[1]))), c);
    expect_equal(rep, "coproduct", {a}, w.coproduct(sa), starred);
    for (Id b = 0; b < t.num_boxes(); ++b) {
      const Element eb(b);
      const Element sb = s.star(t, eb);
      expect_equal(rep, "anti-multiplicative", {a, b}, s.star(t, w.product(a, b)), w.mult(sb, sa));
      // (A | B) = phi(A* B), phi the indicator of vertical identity boxes.
      Rational gram(0);
      for (const auto& [c, k] : w.mult(sa, eb))
        if (t.is_vertical_identity(c)) gram += k;
      if (a != b && !gram.is_zero()) rep.fail("gram", {a, b}, "off-diagonal entry " + gram.str());
      if (a == b && gram.sign() <= 0) rep.fail("gram", {a, b}, "diagonal entry " + gram.str());
    }
  }
  rep.sort();
  return s;
}

Rational DualityPairing::pair(const Element& x, const Element& f) const {
  Rational s(0);
  for (const auto& [a, c] : x) s += c * f.coeff(a) * diagonal[a];
  return s;
}

Rational DualityPairing::pair(const Tensor2& x, const Tensor2& f) const {
  Rational s(0);
  for (const auto& [ab, c] : x) s += c * f.coeff(ab) * diagonal[ab[0]] * diagonal[ab[1]];
  return s;
}

DualityPairing duality_pairing(const WeakHopf& w, const WeakHopf& wt) {
  if (!w.theta_type() || !wt.theta_type() || !(*w.theta() == *wt.theta()))
    throw std::invalid_argument("duality_pairing: both algebras need the same theta weights");
  const DoubleGroupoid& t = w.dgpd();
  if (!(wt.dgpd() == t.transpose())) throw std::invalid_argument("duality_pairing: second carrier is not the transpose");
  const ThetaWeights& th = *w.theta();
  const Id n = t.num_boxes();
  DualityPairing p;
  auto& rep = p.report;

  std::vector<Rational> mu(n), dal(n);
  for (Id a = 0; a < n; ++a) {
    mu[a] = th.at(t.tl(a)) / th.at(t.tr(a));
    dal[a] = th.daleth(t, a);
    // <A, A^t> = mu(A) / daleth(A) since the underlined basis is daleth(A) A.
    p.diagonal.push_back(mu[a] / dal[a]);
  }
  for (Id a = 0; a < n; ++a) {
    for (Id b : t.with_left(t.right(a)))
      if (mu[t.hcompose(a, b)] != mu[a] * mu[b]) rep.fail("mu-horizontal", {a, b});
    for (Id b : t.with_top(t.bottom(a)))
      if (mu[t.vcompose(a, b)] != mu[a]) rep.fail("mu-vertical", {a, b});
  }

  // Underlined basis: products scale by theta(bl A), coproducts have unit weights.
  for (Id a = 0; a < n; ++a) {
    for (Id b : t.with_top(t.bottom(a))) {
      const Id c = t.vcompose(a, b);
      const Element lhs = (dal[a] * dal[b] / dal[c]) * w.product(a, b);
      Rational want = th.at(t.bl(a));
      if (w.kind() == DeformationKind::canonical) {
        const Rational ur(t.corner(CornerKind::UR, a));
        if (want != ur.inverse()) rep.fail("underline-product", {a, b}, "corner weight " + ur.str());
      }
      expect_equal(rep, "underline-product", {a, b}, lhs, scaled(c, want));
    }
    Tensor2 lhs, rhs;
    for (const auto& [xy, c] : w.coproduct(a)) lhs.add(xy, c * dal[a] / (dal[xy[0]] * dal[xy[1]]));
    for (auto [x, y] : t.hfactorizations(a)) rhs.add({x, y}, Rational(1));
    expect_equal(rep, "underline-coproduct", {a}, lhs, rhs);
  }

  // <xy, f> = <x (x) y, Delta f> and <x, fg> = <Delta x, f (x) g> over all basis pairs, compared
  // as functionals of the remaining argument.
  auto compare = [&](const char* axiom, const WeakHopf& alg, const WeakHopf& coalg) {
    std::map<std::array<Id, 2>, Element> via_delta;
    for (Id f = 0; f < n; ++f)
      for (const auto& [xy, c] : coalg.coproduct(f)) via_delta[xy].add(f, c * p.diagonal[xy[0]] * p.diagonal[xy[1]]);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        Element via_prod;
        for (const auto& [c, k] : alg.product(a, b)) via_prod.add(c, k * p.diagonal[c]);
        auto it = via_delta.find({a, b});
        expect_equal(rep, axiom, {a, b}, via_prod, it == via_delta.end() ? Element() : it->second);
      }
  };
  compare("product-coproduct", w, wt);
  compare("coproduct-product", wt, w);

  const Element one = w.unit(), one_t = wt.unit();
  for (Id a = 0; a < n; ++a) {
    if (p.pair(one, Element(a)) != wt.counit(a)) rep.fail("unit-counit", {a});
    if (p.pair(Element(a), one_t) != w.counit(a)) rep.fail("counit-unit", {a});
    // S(A) is a multiple of A^-1 on both sides, so f = A^-1 is the only basis element that can pair
    // nontrivially with either side.
    const Id f = t.inv(a);
    const Rational lhs = p.pair(w.antipode(a), Element(f));
    const Rational rhs = p.pair(Element(a), wt.antipode(f));
    if (lhs != rhs) rep.fail("antipode", {a, f}, "lhs = " + lhs.str() + "; rhs = " + rhs.str());
  }

  RatMatrix gram(n, n);
  for (Id a = 0; a < n; ++a) gram.at(a, a) = p.diagonal[a];
  p.gram_rank = rank(std::move(gram));
  if (p.gram_rank != n) rep.fail("nondegenerate", {p.gram_rank, n});
  rep.sort();
  return p;
}

}  // namespace dgq
