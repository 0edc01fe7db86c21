#include "dgq/weak_hopf.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dgq/core_groupoids.hpp"
#include "dgq/linalg.hpp"

namespace dgq {

ThetaWeights::ThetaWeights(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v.is_zero()) throw std::invalid_argument("ThetaWeights: zero weight");
}

ThetaWeights ThetaWeights::constant(Id points, const Rational& c) {
  return ThetaWeights(std::vector<Rational>(points, c));
}

ThetaWeights ThetaWeights::canonical(const DoubleGroupoid& t) {
  std::vector<Rational> v;
  for (Id p = 0; p < t.num_points(); ++p) v.push_back(Rational(1, t.theta(p)));
  return ThetaWeights(std::move(v));
}

bool ThetaWeights::all_positive() const {
  for (const auto& v : values_)
    if (v.sign() <= 0) return false;
  return true;
}

namespace {

// c(g, x) over all (g, x) with t(g) = r(x), keyed by (g, x).
std::map<std::pair<Id, Id>, Rational> fiber_sums(const DoubleGroupoid& t, const ThetaWeights& theta) {
  std::map<std::pair<Id, Id>, Rational> c;
  for (Id x = 0; x < t.num_h(); ++x)
    for (Id g : t.vertical().arrows_from(t.r(x))) c[{g, x}] = Rational(0);
  for (Id v = 0; v < t.num_boxes(); ++v) c[{t.right(v), t.top(v)}] += theta.daleth(t, v);
  return c;
}

void require_filling(const DoubleGroupoid& t) {
  std::pair<Id, Id> w;
  if (!filling_condition(t, &w))
    throw std::domain_error("filling condition fails at (g, x) = (" + std::to_string(w.first) + ", " +
                            std::to_string(w.second) + ")");
}

}  // namespace

std::vector<AdmissibilityFailure> check_theta_admissible(const DoubleGroupoid& t, const ThetaWeights& theta) {
  if (theta.size() != t.num_points()) throw std::invalid_argument("check_theta_admissible: weight count");
  std::vector<AdmissibilityFailure> out;
  for (const auto& [gx, sum] : fiber_sums(t, theta))
    if (!sum.is_one()) out.push_back({gx.first, gx.second, sum});
  return out;
}

std::variant<ThetaWeights, NormalizationFailure> normalize_theta(const DoubleGroupoid& t, const ThetaWeights& theta) {
  if (theta.size() != t.num_points()) throw std::invalid_argument("normalize_theta: weight count");
  require_filling(t);
  auto c = fiber_sums(t, theta);
  std::vector<Rational> base(t.num_points());
  for (Id p = 0; p < t.num_points(); ++p) {
    base[p] = c.at({t.vertical().identity(p), t.horizontal().identity(p)});
    if (base[p].is_zero())
      return NormalizationFailure{p, t.vertical().identity(p), t.horizontal().identity(p), base[p]};
  }
  for (Id v = 0; v < t.num_boxes(); ++v) {
    const Id p = t.bl(v);
    const Rational& val = c.at({t.right(v), t.top(v)});
    if (val != base[p]) return NormalizationFailure{p, t.right(v), t.top(v), val};
  }
  std::vector<Rational> out(t.num_points());
  for (Id p = 0; p < t.num_points(); ++p) out[p] = theta.at(p) / base[p];
  ThetaWeights result(std::move(out));
  if (!check_theta_admissible(t, result).empty())
    throw std::logic_error("normalize_theta: normalized weights are not admissible");
  return result;
}

const char* deformation_name(DeformationKind k) {
  switch (k) {
    case DeformationKind::canonical: return "canonical";
    case DeformationKind::theta: return "theta";
    case DeformationKind::sigma_tau: return "sigma_tau";
  }
  return "?";
}

const char* antipode_status_name(AntipodeStatus s) {
  switch (s) {
    case AntipodeStatus::found: return "found";
    case AntipodeStatus::no_diagonal_solution: return "no_diagonal_solution";
    case AntipodeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

Rational WeakHopf::sigma(Id a, Id b) const { return sigma_ ? sigma_->at(a, b) : Rational(1); }

Rational WeakHopf::tau(Id a, Id b) const { return tau_ ? tau_->at(a, b) : theta_->daleth(*t_, b); }

Element WeakHopf::unit() const {
  Element u;
  for (Id x = 0; x < t_->num_h(); ++x) u.add(t_->vid(x), Rational(1));
  return u;
}

Element WeakHopf::product(Id a, Id b) const {
  Id ab = t_->vcompose(a, b);
  if (ab == kNone) return {};
  return Element(ab, sigma(a, b));
}

Element WeakHopf::mult(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [a, p] : x)
    for (const auto& [b, q] : y) {
      Id ab = t_->vcompose(a, b);
      if (ab != kNone) out.add(ab, p * q * sigma(a, b));
    }
  return out;
}

namespace {

// Terms of y grouped by the top side of their first factor, so a term of x only meets the
// terms it can compose with.
template <class Key>
std::unordered_map<Id, std::vector<const std::pair<const Key, Rational>*>> by_first_top(
    const DoubleGroupoid& t, const Combination<Key>& y) {
  std::unordered_map<Id, std::vector<const std::pair<const Key, Rational>*>> out;
  for (const auto& term : y) out[t.top(term.first[0])].push_back(&term);
  return out;
}

template <std::size_t N>
Combination<std::array<Id, N>> tensor_mult(const WeakHopf& w, const Combination<std::array<Id, N>>& x,
                                           const Combination<std::array<Id, N>>& y) {
  const DoubleGroupoid& t = w.dgpd();
  const auto index = by_first_top(t, y);
  Combination<std::array<Id, N>> out;
  for (const auto& [a, p] : x) {
    auto it = index.find(t.bottom(a[0]));
    if (it == index.end()) continue;
    for (const auto* term : it->second) {
      const auto& b = term->first;
      std::array<Id, N> c{};
      bool ok = true;
      for (std::size_t i = 0; i < N && ok; ++i) {
        c[i] = t.vcompose(a[i], b[i]);
        ok = c[i] != kNone;
      }
      if (!ok) continue;
      Rational s = p * term->second;
      for (std::size_t i = 0; i < N; ++i) s *= w.sigma(a[i], b[i]);
      out.add(c, s);
    }
  }
  return out;
}

}  // namespace

Tensor2 WeakHopf::mult(const Tensor2& x, const Tensor2& y) const { return tensor_mult(*this, x, y); }

Tensor3 WeakHopf::mult(const Tensor3& x, const Tensor3& y) const { return tensor_mult(*this, x, y); }

Tensor2 WeakHopf::coproduct(const Element& x) const {
  Tensor2 out;
  for (const auto& [a, p] : x) out.add(delta_[a], p);
  return out;
}

Rational WeakHopf::counit(const Element& x) const {
  Rational s(0);
  for (const auto& [a, p] : x) s += p * counit_[a];
  return s;
}

Element d_one(const DoubleGroupoid& t, Id d) {
  if (!in_d(t, d)) throw std::domain_error("d_one: not in D");
  Element out;
  for (Id z : t.horizontal().arrows_to(t.tl(d))) out.add(t.hcompose(t.vid(z), d), Rational(1));
  return out;
}

Element one_e(const DoubleGroupoid& t, Id e) {
  if (!in_e(t, e)) throw std::domain_error("one_e: not in E");
  Element out;
  for (Id x : t.horizontal().arrows_from(t.br(e))) out.add(t.hcompose(e, t.vid(x)), Rational(1));
  return out;
}

Element WeakHopf::source_map(Id a) const {
  const DoubleGroupoid& t = *t_;
  if (!t.h_point(t.top(a))) return {};
  const Id phi = canonical_map(t, CanonicalMap::phi, a);
  if (theta_type()) return d_one(t, phi);
  const Id phih = t.hinv(phi);
  const Id hr = t.hid(t.right(a));
  Element out;
  for (Id x : t.horizontal().arrows_to(t.br(a))) {
    const Id xp = t.hcompose(t.vid(x), phi);
    out.add(xp, tau(xp, phih) * sigma(a, phih) / tau(hr, hr));
  }
  return out;
}

Element WeakHopf::target_map(Id a) const {
  const DoubleGroupoid& t = *t_;
  if (!t.h_point(t.bottom(a))) return {};
  const Id psi = canonical_map(t, CanonicalMap::psi, a);
  if (theta_type()) return (theta_->at(t.tr(a)) / theta_->at(t.br(a))) * one_e(t, psi);
  const Id psih = t.hinv(psi);
  const Id hl = t.hid(t.left(a));
  Element out;
  for (Id y : t.horizontal().arrows_from(t.br(psi))) {
    const Id py = t.hcompose(psi, t.vid(y));
    out.add(py, tau(psih, py) * sigma(psih, a) / tau(hl, hl));
  }
  return out;
}

Element WeakHopf::source_map(const Element& x) const {
  Element out;
  for (const auto& [a, p] : x) out.add(source_map(a), p);
  return out;
}

Element WeakHopf::target_map(const Element& x) const {
  Element out;
  for (const auto& [a, p] : x) out.add(target_map(a), p);
  return out;
}

Element WeakHopf::source_map_defining(const Element& h) const {
  Element out;
  for (const auto& [xy, c] : coproduct(unit())) {
    Rational e = counit(mult(h, Element(xy[1])));
    if (!e.is_zero()) out.add(xy[0], c * e);
  }
  return out;
}

Element WeakHopf::target_map_defining(const Element& h) const {
  Element out;
  for (const auto& [xy, c] : coproduct(unit())) {
    Rational e = counit(mult(Element(xy[0]), h));
    if (!e.is_zero()) out.add(xy[1], c * e);
  }
  return out;
}

const Rational& WeakHopf::antipode_coeff(Id a) const {
  if (antipode_.empty()) throw std::logic_error("no antipode available");
  return antipode_[a];
}

Element WeakHopf::antipode(Id a) const { return Element(t_->inv(a), antipode_coeff(a)); }

Element WeakHopf::antipode(const Element& x) const {
  Element out;
  for (const auto& [a, p] : x) out.add(t_->inv(a), p * antipode_coeff(a));
  return out;
}

void WeakHopf::init_coalgebra() {
  const DoubleGroupoid& t = *t_;
  delta_.assign(t.num_boxes(), {});
  counit_.assign(t.num_boxes(), Rational(0));
  for (Id a = 0; a < t.num_boxes(); ++a) {
    for (auto [x, y] : t.hfactorizations(a)) delta_[a].add({x, y}, tau(x, y));
    if (t.is_horizontal_identity(a)) counit_[a] = tau(a, a).inverse();
  }
}

WeakHopf build_theta(const DoubleGroupoid& t, const ThetaWeights& theta) {
  auto bad = check_theta_admissible(t, theta);
  if (!bad.empty())
    throw std::domain_error("theta is not admissible at (g, x) = (" + std::to_string(bad[0].g) + ", " +
                            std::to_string(bad[0].x) + "), sum " + bad[0].sum.str());
  WeakHopf w;
  w.t_ = std::make_shared<const DoubleGroupoid>(t);
  w.kind_ = DeformationKind::theta;
  w.theta_ = theta;
  w.init_coalgebra();
  w.antipode_.resize(t.num_boxes());
  for (Id a = 0; a < t.num_boxes(); ++a) w.antipode_[a] = theta.at(t.tr(a)) / theta.at(t.br(a));
  w.antipode_status_ = AntipodeStatus::found;
  return w;
}

WeakHopf build_canonical(const DoubleGroupoid& t) {
  require_filling(t);
  WeakHopf w;
  w.t_ = std::make_shared<const DoubleGroupoid>(t);
  w.kind_ = DeformationKind::canonical;
  w.theta_ = ThetaWeights::canonical(t);
  // Corner-count form of the structure maps.
  w.delta_.assign(t.num_boxes(), {});
  w.counit_.assign(t.num_boxes(), Rational(0));
  w.antipode_.resize(t.num_boxes());
  for (Id a = 0; a < t.num_boxes(); ++a) {
    for (auto [x, y] : t.hfactorizations(a)) {
      const Id ur = t.corner(CornerKind::UR, y);
      if (ur != t.corner(CornerKind::UL, x))
        throw std::logic_error("build_canonical: corner weights of a factorization disagree");
      w.delta_[a].add({x, y}, Rational(1, ur));
    }
    if (t.is_horizontal_identity(a)) w.counit_[a] = Rational(t.corner(CornerKind::UL, a));
    w.antipode_[a] = Rational(t.corner(CornerKind::UL, a), t.corner(CornerKind::LL, a));
  }
  w.antipode_status_ = AntipodeStatus::found;
  return w;
}

namespace {

// Rows of the linear system for S(A) = c_A A^-1 coming from the two antipode axioms on one basis element.
void antipode_rows(const WeakHopf& w, Id a, std::vector<std::map<Id, Rational>>& rows, std::vector<Rational>& rhs) {
  const DoubleGroupoid& t = w.dgpd();
  std::map<Id, std::map<Id, Rational>> left, right;  // output box -> (unknown -> coefficient)
  for (const auto& [xy, c] : w.coproduct(a)) {
    const Id x = xy[0], y = xy[1];
    Id k = t.vcompose(x, t.inv(y));
    if (k != kNone) left[k][y] += c * w.sigma(x, t.inv(y));
    k = t.vcompose(t.inv(x), y);
    if (k != kNone) right[k][x] += c * w.sigma(t.inv(x), y);
  }
  auto emit = [&](std::map<Id, std::map<Id, Rational>>& lhs, const Element& target) {
    for (const auto& [k, v] : target) lhs[k];
    for (auto& [k, coeffs] : lhs) {
      rows.push_back(std::move(coeffs));
      rhs.push_back(target.coeff(k));
    }
  };
  emit(left, w.target_map_defining(Element(a)));
  emit(right, w.source_map_defining(Element(a)));
}

bool antipode_axiom3(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  for (Id a = 0; a < t.num_boxes(); ++a) {
    Element sum;
    for (const auto& [xy, c] : w.coproduct(a))
      for (const auto& [yz, d] : w.coproduct(xy[1]))
        sum.add(w.mult(w.mult(w.antipode(xy[0]), Element(yz[0])), w.antipode(yz[1])), c * d);
    if (sum != w.antipode(a)) return false;
  }
  return true;
}

}  // namespace

WeakHopf build_sigma_tau(const DoubleGroupoid& t, const SigmaCochain& sigma, const TauCochain& tau) {
  auto rs = check_cocycle(t, sigma);
  if (!rs.ok()) {
    const auto& v = rs.structural.empty() ? rs.failures.front() : rs.structural.front();
    throw std::invalid_argument("sigma: " + v.axiom + " fails");
  }
  auto rt = check_cocycle(t, tau);
  if (!rt.ok()) {
    const auto& v = rt.structural.empty() ? rt.failures.front() : rt.structural.front();
    throw std::invalid_argument("tau: " + v.axiom + " fails");
  }
  WeakHopf w;
  w.t_ = std::make_shared<const DoubleGroupoid>(t);
  w.kind_ = DeformationKind::sigma_tau;
  w.sigma_ = sigma;
  w.tau_ = tau;
  w.init_coalgebra();
  w.compatibility_ = check_compatibility(t, sigma, tau);
  if (!w.compatibility_.ok()) {
    w.antipode_status_ = AntipodeStatus::inconclusive;
    return w;
  }
  std::vector<std::map<Id, Rational>> rows;
  std::vector<Rational> rhs;
  for (Id a = 0; a < t.num_boxes(); ++a) antipode_rows(w, a, rows, rhs);
  RatMatrix m(static_cast<Id>(rows.size()), t.num_boxes());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) m.at(static_cast<Id>(i), j) = c;
  auto sol = solve(m, rhs, Rational(1));
  if (!sol) {
    w.antipode_status_ = AntipodeStatus::no_diagonal_solution;
    return w;
  }
  bool nonzero = true;
  for (const auto& c : sol->particular) nonzero = nonzero && !c.is_zero();
  if (!nonzero) {
    w.antipode_status_ = sol->nullity == 0 ? AntipodeStatus::no_diagonal_solution : AntipodeStatus::inconclusive;
    return w;
  }
  w.antipode_ = sol->particular;
  if (antipode_axiom3(w)) {
    w.antipode_status_ = AntipodeStatus::found;
  } else {
    w.antipode_status_ = sol->nullity == 0 ? AntipodeStatus::no_diagonal_solution : AntipodeStatus::inconclusive;
    w.antipode_.clear();
  }
  return w;
}

}  // namespace dgq
