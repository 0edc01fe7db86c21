#include "dgq/cocycles.hpp"

#include <stdexcept>

#include "dgq/builders.hpp"
#include "dgq/parallel.hpp"

namespace dgq {

namespace {

std::string eq_detail(const Rational& lhs, const Rational& rhs) { return lhs.str() + " != " + rhs.str(); }

void merge(ValidationReport& r, std::vector<Violation> found) {
  for (auto& v : found) r.failures.push_back(std::move(v));
}

}  // namespace

SigmaCochain make_sigma(const DoubleGroupoid& t, const std::function<Rational(Id, Id)>& f) {
  SigmaCochain s(t.num_boxes());
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_top(t.bottom(a))) s.set(a, b, f(a, b));
  return s;
}

TauCochain make_tau(const DoubleGroupoid& t, const std::function<Rational(Id, Id)>& f) {
  TauCochain s(t.num_boxes());
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_left(t.right(a))) s.set(a, b, f(a, b));
  return s;
}

SigmaCochain trivial_sigma(const DoubleGroupoid& t) {
  return make_sigma(t, [](Id, Id) { return Rational(1); });
}
TauCochain trivial_tau(const DoubleGroupoid& t) {
  return make_tau(t, [](Id, Id) { return Rational(1); });
}

ThreeCocycle ThreeCocycle::trivial(const Groupoid& group) {
  return from_function(group, [](Id, Id, Id) { return Rational(1); });
}

ThreeCocycle ThreeCocycle::from_function(const Groupoid& group, const std::function<Rational(Id, Id, Id)>& f) {
  ThreeCocycle w{group, {}};
  const Id n = group.num_arrows();
  w.values.reserve(static_cast<std::size_t>(n) * n * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) w.values.push_back(f(a, b, c));
  return w;
}

ThreeCocycle sign_cocycle_c2() {
  return ThreeCocycle::from_function(cyclic_group(2),
                                     [](Id a, Id g, Id h) { return Rational(a * g * h == 1 ? -1 : 1); });
}

ThreeCocycle coboundary(const Groupoid& group, const std::vector<Rational>& alpha) {
  const Id n = group.num_arrows();
  auto al = [&](Id a, Id b) { return alpha[static_cast<std::size_t>(a) * n + b]; };
  return ThreeCocycle::from_function(group, [&](Id a, Id b, Id c) {
    return al(b, c) * al(a, group.compose(b, c)) / (al(group.compose(a, b), c) * al(a, b));
  });
}

std::vector<std::array<Id, 3>> vertical_triples(const DoubleGroupoid& t) {
  std::vector<std::array<Id, 3>> out;
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_top(t.bottom(a)))
      for (Id c : t.with_top(t.bottom(b))) out.push_back({a, b, c});
  return out;
}

std::vector<std::array<Id, 3>> horizontal_triples(const DoubleGroupoid& t) {
  std::vector<std::array<Id, 3>> out;
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_left(t.right(a)))
      for (Id c : t.with_left(t.right(b))) out.push_back({a, b, c});
  return out;
}

ValidationReport check_cocycle(const DoubleGroupoid& t, const SigmaCochain& sigma) {
  ValidationReport r;
  if (sigma.num_boxes() != t.num_boxes()) {
    r.broken("size", {sigma.num_boxes(), t.num_boxes()});
    return r;
  }
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_top(t.bottom(a)))
      if (sigma.at(a, b).is_zero()) r.fail("domain", {a, b});
  if (!r.ok()) return r;
  for (const auto& [a, b, c] : vertical_triples(t)) {
    Rational lhs = sigma.at(a, b) * sigma.at(t.vcompose(a, b), c);
    Rational rhs = sigma.at(b, c) * sigma.at(a, t.vcompose(b, c));
    if (lhs != rhs) r.fail("cocycle-sigma", {a, b, c}, eq_detail(lhs, rhs));
  }
  for (Id a = 0; a < t.num_boxes(); ++a) {
    if (!sigma.at(a, t.vid(t.bottom(a))).is_one()) r.fail("norm-sigma", {a, t.vid(t.bottom(a))});
    if (!sigma.at(t.vid(t.top(a)), a).is_one()) r.fail("norm-sigma", {t.vid(t.top(a)), a});
  }
  r.sort();
  return r;
}

ValidationReport check_cocycle(const DoubleGroupoid& t, const TauCochain& tau) {
  ValidationReport r;
  if (tau.num_boxes() != t.num_boxes()) {
    r.broken("size", {tau.num_boxes(), t.num_boxes()});
    return r;
  }
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_left(t.right(a)))
      if (tau.at(a, b).is_zero()) r.fail("domain", {a, b});
  if (!r.ok()) return r;
  for (const auto& [a, b, c] : horizontal_triples(t)) {
    Rational lhs = tau.at(a, b) * tau.at(t.hcompose(a, b), c);
    Rational rhs = tau.at(b, c) * tau.at(a, t.hcompose(b, c));
    if (lhs != rhs) r.fail("cocycle-tau", {a, b, c}, eq_detail(lhs, rhs));
  }
  r.sort();
  return r;
}

ValidationReport check_cocycle(const ThreeCocycle& omega) {
  ValidationReport r;
  const Groupoid& g = omega.group;
  if (!is_group(g)) {
    r.broken("not-a-group", {});
    return r;
  }
  const Id n = g.num_arrows();
  if (omega.values.size() != static_cast<std::size_t>(n) * n * n) {
    r.broken("size", {static_cast<Id>(omega.values.size())});
    return r;
  }
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c)
        if (omega.at(a, b, c).is_zero()) r.fail("domain", {a, b, c});
  if (!r.ok()) return r;
  const Id e = g.identity(0);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (!omega.at(e, a, b).is_one() || !omega.at(a, e, b).is_one() || !omega.at(a, b, e).is_one())
        r.fail("norm-omega", {a, b});
      for (Id c = 0; c < n; ++c)
        for (Id d = 0; d < n; ++d) {
          Rational lhs = omega.at(b, c, d) * omega.at(a, g.compose(b, c), d) * omega.at(a, b, c);
          Rational rhs = omega.at(g.compose(a, b), c, d) * omega.at(a, b, g.compose(c, d));
          if (lhs != rhs) r.fail("cocycle-omega", {a, b, c, d}, eq_detail(lhs, rhs));
        }
    }
  r.sort();
  return r;
}

bool unit_configuration(const DoubleGroupoid& t, Id a, Id b, Id c, UnitConfiguration* out) {
  UnitConfiguration cfg;
  int found_uv = 0, found_wz = 0;
  for (Id u : t.with_left(t.right(a))) {
    if (t.top(u) != t.top(b)) continue;
    Id au = t.hcompose(a, u);
    if (!t.is_vertical_identity(au)) continue;
    Id v = t.vc(t.vinv(u), b);
    if (v == kNone || t.vcompose(u, v) != b) continue;
    Id vc = t.hc(v, c);
    if (vc == kNone || !t.is_vertical_identity(vc)) continue;
    cfg.u = u;
    cfg.v = v;
    ++found_uv;
  }
  for (Id z : t.with_left(t.right(a))) {
    if (t.bottom(z) != t.bottom(b)) continue;
    if (!t.is_vertical_identity(t.hcompose(a, z))) continue;
    Id w = t.vc(b, t.vinv(z));
    if (w == kNone || t.vcompose(w, z) != b) continue;
    Id wc = t.hc(w, c);
    if (wc == kNone || !t.is_vertical_identity(wc)) continue;
    cfg.w = w;
    cfg.z = z;
    ++found_wz;
  }
  if (out) *out = cfg;
  return found_uv == 1 && found_wz == 1;
}

bool counit_configuration(const DoubleGroupoid& t, Id a, Id b, Id c, UnitConfiguration* out) {
  UnitConfiguration cfg;
  int found_uv = 0, found_wz = 0;
  for (Id u : t.with_top(t.bottom(a))) {
    if (t.left(u) != t.left(b)) continue;
    if (!t.is_horizontal_identity(t.vcompose(a, u))) continue;
    Id v = t.hc(t.hinv(u), b);
    if (v == kNone || t.hcompose(u, v) != b) continue;
    Id vc = t.vc(v, c);
    if (vc == kNone || !t.is_horizontal_identity(vc)) continue;
    cfg.u = u;
    cfg.v = v;
    ++found_uv;
  }
  for (Id z : t.with_top(t.bottom(a))) {
    if (t.right(z) != t.right(b)) continue;
    if (!t.is_horizontal_identity(t.vcompose(a, z))) continue;
    Id w = t.hc(b, t.hinv(z));
    if (w == kNone || t.hcompose(w, z) != b) continue;
    Id wc = t.vc(w, c);
    if (wc == kNone || !t.is_horizontal_identity(wc)) continue;
    cfg.w = w;
    cfg.z = z;
    ++found_wz;
  }
  if (out) *out = cfg;
  return found_uv == 1 && found_wz == 1;
}

ValidationReport check_compatibility(const DoubleGroupoid& t, const SigmaCochain& sigma, const TauCochain& tau) {
  ValidationReport r;
  const Id n = t.num_boxes();
  // Products X | Y, then every vertical factorization of XY.
  merge(r, parallel_collect<Violation>(static_cast<std::size_t>(n), [&](std::size_t i, std::vector<Violation>& out) {
    const Id x = static_cast<Id>(i);
    for (Id y : t.with_left(t.right(x))) {
      const Id xy = t.hcompose(x, y);
      for (auto [a, b] : t.vfactorizations(xy)) {
        Rational lhs = sigma.at(a, b) * tau.at(x, y);
        Rational rhs(0);
        for (const auto& q : double_factorizations(t, x, y, a, b))
          rhs += sigma.at(q.u, q.r) * sigma.at(q.v, q.s) * tau.at(q.u, q.v) * tau.at(q.r, q.s);
        if (lhs != rhs) out.push_back({"multiplicativa", {x, y, a, b}, eq_detail(lhs, rhs)});
      }
    }
  }));
  // A | B | C with ABC a vertical identity: factor each vertical identity box twice.
  merge(r, parallel_collect<Violation>(static_cast<std::size_t>(t.num_h()), [&](std::size_t i, std::vector<Violation>& out) {
    const Id whole = t.vid(static_cast<Id>(i));
    for (auto [a, rest] : t.hfactorizations(whole))
      for (auto [b, c] : t.hfactorizations(rest)) {
        UnitConfiguration cfg;
        if (!unit_configuration(t, a, b, c, &cfg)) {
          out.push_back({"configuration", {a, b, c}, "unit"});
          continue;
        }
        Rational lhs = tau.at(a, b) * tau.at(t.hcompose(a, b), c);
        Rational rhs1 = tau.at(a, cfg.u) * tau.at(cfg.v, c) * sigma.at(cfg.u, cfg.v);
        Rational rhs2 = tau.at(a, cfg.z) * tau.at(cfg.w, c) * sigma.at(cfg.w, cfg.z);
        if (lhs != rhs1) out.push_back({"unit-I", {a, b, c}, eq_detail(lhs, rhs1)});
        if (lhs != rhs2) out.push_back({"unit-II", {a, b, c}, eq_detail(lhs, rhs2)});
      }
  }));
  // A over B over C a horizontal identity.
  merge(r, parallel_collect<Violation>(static_cast<std::size_t>(t.num_v()), [&](std::size_t i, std::vector<Violation>& out) {
    const Id whole = t.hid(static_cast<Id>(i));
    for (auto [a, rest] : t.vfactorizations(whole))
      for (auto [b, c] : t.vfactorizations(rest)) {
        UnitConfiguration cfg;
        if (!counit_configuration(t, a, b, c, &cfg)) {
          out.push_back({"configuration", {a, b, c}, "counit"});
          continue;
        }
        const Id ab = t.vcompose(a, b);
        const Rational head = sigma.at(a, b) * sigma.at(ab, c);
        const Rational tail = tau.at(whole, whole);
        {
          Id au = t.vcompose(a, cfg.u), vc = t.vcompose(cfg.v, c);
          Rational lhs = head * tau.at(au, au) * tau.at(vc, vc);
          Rational rhs = tau.at(cfg.u, cfg.v) * sigma.at(a, cfg.u) * sigma.at(cfg.v, c) * tail;
          if (lhs != rhs) out.push_back({"counit-I", {a, b, c}, eq_detail(lhs, rhs)});
        }
        {
          Id az = t.vcompose(a, cfg.z), wc = t.vcompose(cfg.w, c);
          Rational lhs = head * tau.at(az, az) * tau.at(wc, wc);
          Rational rhs = tau.at(cfg.w, cfg.z) * sigma.at(a, cfg.z) * sigma.at(cfg.w, c) * tail;
          if (lhs != rhs) out.push_back({"counit-II", {a, b, c}, eq_detail(lhs, rhs)});
        }
      }
  }));
  r.sort();
  return r;
}

SigmaCochain sigma_from_omega(const ThreeCocycle& omega) {
  auto report = check_cocycle(omega);
  if (!report.ok()) throw std::invalid_argument("sigma_from_omega: omega is not a normalized 3-cocycle");
  const Groupoid& g = omega.group;
  const Id n = g.num_arrows();
  DoubleGroupoid t = vec_g_double_groupoid(g);
  // Box (a, b, g) over box (ag, bg, h).
  auto decode = [n](Id box) { return std::array<Id, 3>{box / (n * n), (box / n) % n, box % n}; };
  return make_sigma(t, [&](Id x, Id y) {
    auto [a, b, gg] = decode(x);
    Id h = decode(y)[2];
    return omega.at(a, gg, h) / omega.at(b, gg, h);
  });
}

ValidationReport check_sigma_product_rule(const DoubleGroupoid& t, const SigmaCochain& sigma) {
  ValidationReport r;
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b : t.with_left(t.right(a)))
      for (Id c : t.with_top(t.bottom(a)))
        for (Id d : t.with_top(t.bottom(b))) {
          if (t.right(c) != t.left(d)) continue;
          Rational lhs = sigma.at(t.hcompose(a, b), t.hcompose(c, d));
          Rational rhs = sigma.at(a, c) * sigma.at(b, d);
          if (lhs != rhs) r.fail("sigma-product", {a, b, c, d}, eq_detail(lhs, rhs));
        }
  r.sort();
  return r;
}

}  // namespace dgq
