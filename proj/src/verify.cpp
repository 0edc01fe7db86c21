#include "dgq/verify.hpp"

#include <mutex>
#include <set>

#include "dgq/parallel.hpp"

namespace dgq {

namespace {

template <class T>
std::string lhs_rhs(const T& lhs, const T& rhs) {
  return "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs);
}
std::string lhs_rhs(const Rational& lhs, const Rational& rhs) { return "lhs = " + lhs.str() + "; rhs = " + rhs.str(); }

// (Delta (x) id) applied to a 2-tensor.
Tensor3 delta_left(const WeakHopf& w, const Tensor2& x) {
  Tensor3 out;
  for (const auto& [k, c] : x)
    for (const auto& [ab, d] : w.coproduct(k[0])) out.add({ab[0], ab[1], k[1]}, c * d);
  return out;
}

Tensor3 delta_right(const WeakHopf& w, const Tensor2& x) {
  Tensor3 out;
  for (const auto& [k, c] : x)
    for (const auto& [ab, d] : w.coproduct(k[1])) out.add({k[0], ab[0], ab[1]}, c * d);
  return out;
}

class Collector {
 public:
  void add(std::vector<Violation> found, const std::string& axiom, std::size_t checked) {
    for (auto& v : found) report_.failures.push_back(std::move(v));
    checked_[axiom] += checked;
  }
  AxiomReport finish() {
    report_.sort();
    return {std::move(report_), std::move(checked_)};
  }

 private:
  ValidationReport report_;
  std::map<std::string, std::size_t> checked_;
};

void check_algebra(const WeakHopf& w, Collector& col) {
  const DoubleGroupoid& t = w.dgpd();
  const Id n = t.num_boxes();
  const Element one = w.unit();
  std::vector<Violation> bad;
  for (Id a = 0; a < n; ++a) {
    Element x(a);
    if (w.mult(one, x) != x || w.mult(x, one) != x) bad.push_back({"unit", {a}, lhs_rhs(w.mult(one, x), x)});
  }
  col.add(std::move(bad), "unit", n);
  auto assoc = parallel_collect<Violation>(static_cast<std::size_t>(n), [&](std::size_t i, std::vector<Violation>& out) {
    const Id a = static_cast<Id>(i);
    for (Id b : t.with_top(t.bottom(a)))
      for (Id c : t.with_top(t.bottom(b))) {
        Element l = w.mult(w.product(a, b), Element(c));
        Element r = w.mult(Element(a), w.product(b, c));
        if (l != r) out.push_back({"associativity", {a, b, c}, lhs_rhs(l, r)});
      }
  });
  col.add(std::move(assoc), "associativity", vertical_triples(t).size());
}

void check_coalgebra(const WeakHopf& w, Collector& col) {
  const Id n = w.dim();
  std::vector<Violation> coassoc, counit;
  for (Id a = 0; a < n; ++a) {
    const Tensor2& d = w.coproduct(a);
    Tensor3 l = delta_left(w, d), r = delta_right(w, d);
    if (l != r) coassoc.push_back({"coassociativity", {a}, lhs_rhs(l, r)});
    Element el, er;
    for (const auto& [xy, c] : d) {
      el.add(xy[1], c * w.counit(xy[0]));
      er.add(xy[0], c * w.counit(xy[1]));
    }
    if (el != Element(a) || er != Element(a)) counit.push_back({"counit", {a}, lhs_rhs(el, er)});
  }
  col.add(std::move(coassoc), "coassociativity", n);
  col.add(std::move(counit), "counit", n);
}

void check_multiplicativity(const WeakHopf& w, Collector& col) {
  const Id n = w.dim();
  auto bad = parallel_collect<Violation>(static_cast<std::size_t>(n), [&](std::size_t i, std::vector<Violation>& out) {
    const Id a = static_cast<Id>(i);
    for (Id b = 0; b < n; ++b) {
      Tensor2 lhs = w.coproduct(w.product(a, b));
      Tensor2 rhs = w.mult(w.coproduct(a), w.coproduct(b));
      if (lhs != rhs) out.push_back({"d-mult", {a, b}, lhs_rhs(lhs, rhs)});
    }
  });
  col.add(std::move(bad), "d-mult", static_cast<std::size_t>(n) * n);
}

void check_unit_axiom(const WeakHopf& w, Collector& col) {
  const Element one = w.unit();
  const Tensor2 d1 = w.coproduct(one);
  const Tensor3 lhs = delta_left(w, d1);
  const Tensor3 a = tensor(d1, one);  // Delta(1) (x) 1
  const Tensor3 b = tensor(one, d1);  // 1 (x) Delta(1)
  std::vector<Violation> bad;
  Tensor3 r1 = w.mult(a, b), r2 = w.mult(b, a);
  if (lhs != r1) bad.push_back({"ax-unit", {0}, lhs_rhs(lhs, r1)});
  if (lhs != r2) bad.push_back({"ax-unit", {1}, lhs_rhs(lhs, r2)});
  col.add(std::move(bad), "ax-unit", 2);
}

void check_counit_axiom(const WeakHopf& w, Collector& col) {
  const DoubleGroupoid& t = w.dgpd();
  const Id n = t.num_boxes();
  // eps(x . y) for basis x, y.
  auto eps2 = [&](Id x, Id y) {
    Id xy = t.vcompose(x, y);
    return xy == kNone ? Rational(0) : w.sigma(x, y) * w.counit(xy);
  };
  std::mutex m;
  std::size_t checked = 0;
  auto bad = parallel_collect<Violation>(static_cast<std::size_t>(n), [&](std::size_t i, std::vector<Violation>& out) {
    const Id b = static_cast<Id>(i);
    std::set<std::pair<Id, Id>> ac;  // candidate (a, c)
    for (Id a : t.with_bottom(t.top(b)))
      for (Id c : t.with_top(t.bottom(b))) ac.insert({a, c});
    for (const auto& [xy, coef] : w.coproduct(b)) {
      for (int order = 0; order < 2; ++order) {
        const Id first = xy[order], second = xy[1 - order];
        std::vector<Id> as, cs;
        for (Id a : t.with_bottom(t.top(first)))
          if (!eps2(a, first).is_zero()) as.push_back(a);
        for (Id c : t.with_top(t.bottom(second)))
          if (!eps2(second, c).is_zero()) cs.push_back(c);
        for (Id a : as)
          for (Id c : cs) ac.insert({a, c});
      }
    }
    for (auto [a, c] : ac) {
      Rational lhs = w.counit(w.mult(w.product(a, b), Element(c)));
      Rational r1(0), r2(0);
      for (const auto& [xy, coef] : w.coproduct(b)) {
        r1 += coef * eps2(a, xy[0]) * eps2(xy[1], c);
        r2 += coef * eps2(a, xy[1]) * eps2(xy[0], c);
      }
      if (lhs != r1) out.push_back({"ax-counit", {a, b, c, 0}, lhs_rhs(lhs, r1)});
      if (lhs != r2) out.push_back({"ax-counit", {a, b, c, 1}, lhs_rhs(lhs, r2)});
    }
    std::lock_guard lock(m);
    checked += ac.size();
  });
  col.add(std::move(bad), "ax-counit", checked);
}

void check_counital_maps(const WeakHopf& w, Collector& col) {
  const Id n = w.dim();
  std::vector<Violation> s, t;
  for (Id a = 0; a < n; ++a) {
    Element def_s = w.source_map_defining(Element(a)), closed_s = w.source_map(a);
    if (def_s != closed_s) s.push_back({"source-map", {a}, lhs_rhs(closed_s, def_s)});
    Element def_t = w.target_map_defining(Element(a)), closed_t = w.target_map(a);
    if (def_t != closed_t) t.push_back({"target-map", {a}, lhs_rhs(closed_t, def_t)});
  }
  col.add(std::move(s), "source-map", n);
  col.add(std::move(t), "target-map", n);
}

void check_antipode(const WeakHopf& w, Collector& col) {
  const Id n = w.dim();
  if (!w.has_antipode()) {
    col.add({{"antipode-missing", {}, antipode_status_name(w.antipode_status())}}, "antipode-missing", 1);
    return;
  }
  auto bad = parallel_collect<Violation>(static_cast<std::size_t>(n), [&](std::size_t i, std::vector<Violation>& out) {
    const Id a = static_cast<Id>(i);
    const Tensor2& d = w.coproduct(a);
    Element l1, l2, l3;
    for (const auto& [xy, c] : d) {
      l1.add(w.mult(Element(xy[0]), w.antipode(xy[1])), c);
      l2.add(w.mult(w.antipode(xy[0]), Element(xy[1])), c);
      for (const auto& [yz, e] : w.coproduct(xy[1]))
        l3.add(w.mult(w.mult(w.antipode(xy[0]), Element(yz[0])), w.antipode(yz[1])), c * e);
    }
    Element r1 = w.target_map_defining(Element(a));
    Element r2 = w.source_map_defining(Element(a));
    Element r3 = w.antipode(a);
    if (l1 != r1) out.push_back({"atp-1", {a}, lhs_rhs(l1, r1)});
    if (l2 != r2) out.push_back({"atp-2", {a}, lhs_rhs(l2, r2)});
    if (l3 != r3) out.push_back({"atp-3", {a}, lhs_rhs(l3, r3)});
  });
  std::vector<Violation> v1, v2, v3;
  for (auto& v : bad) (v.axiom == "atp-1" ? v1 : v.axiom == "atp-2" ? v2 : v3).push_back(std::move(v));
  col.add(std::move(v1), "atp-1", n);
  col.add(std::move(v2), "atp-2", n);
  col.add(std::move(v3), "atp-3", n);
}

}  // namespace

AxiomReport verify_axioms(const WeakHopf& w) {
  Collector col;
  check_algebra(w, col);
  check_coalgebra(w, col);
  check_multiplicativity(w, col);
  check_unit_axiom(w, col);
  check_counit_axiom(w, col);
  check_counital_maps(w, col);
  check_antipode(w, col);
  return col.finish();
}

bool is_hopf(const WeakHopf& w) {
  const Element one = w.unit();
  return w.coproduct(one) == tensor(one, one);
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json j = to_json(r.report);
  j["checked"] = r.checked;
  j["ok"] = r.ok();
  return j;
}

}  // namespace dgq
