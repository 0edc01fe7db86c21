#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dgq/cocycles.hpp"
#include "dgq/double_groupoid.hpp"
#include "dgq/element.hpp"

namespace dgq {

// Nonzero weights on points; daleth(B) = theta(bl(B)).
class ThetaWeights {
 public:
  ThetaWeights() = default;
  explicit ThetaWeights(std::vector<Rational> values);
  static ThetaWeights constant(Id points, const Rational& c);
  // 1 / theta(P), the canonical weights of a filling double groupoid.
  static ThetaWeights canonical(const DoubleGroupoid& t);

  Id size() const { return static_cast<Id>(values_.size()); }
  const Rational& at(Id p) const { return values_[p]; }
  const std::vector<Rational>& values() const { return values_; }
  Rational daleth(const DoubleGroupoid& t, Id box) const { return values_[t.bl(box)]; }
  bool all_positive() const;

  friend bool operator==(const ThetaWeights&, const ThetaWeights&) = default;

 private:
  std::vector<Rational> values_;
};

struct AdmissibilityFailure {
  Id g = kNone;  // vertical arrow
  Id x = kNone;  // horizontal arrow, t(g) = r(x)
  Rational sum;
};

// Sum of daleth(V) over boxes V with t(V) = x, r(V) = g, for every (g, x) with t(g) = r(x).
// Returns the failing pairs; empty means admissible.
std::vector<AdmissibilityFailure> check_theta_admissible(const DoubleGroupoid& t, const ThetaWeights& theta);

struct NormalizationFailure {
  Id point = kNone;
  Id g = kNone, x = kNone;
  Rational value;  // c(g, x), or c(id P, id P) when g, x are the identities
};
// c(g, x) is the admissibility sum above. P is affiliated to (g, x) when some box V with t(V) = x,
// r(V) = g has bl(V) = P. Returns theta~(P) = theta(P) / c(id P, id P) when c(g, x) = c(id P, id P) != 0
// for every (g, x) that P is affiliated to, otherwise the first violation.
std::variant<ThetaWeights, NormalizationFailure> normalize_theta(const DoubleGroupoid& t, const ThetaWeights& theta);

enum class DeformationKind { canonical, theta, sigma_tau };
const char* deformation_name(DeformationKind k);

enum class AntipodeStatus { found, no_diagonal_solution, inconclusive };
const char* antipode_status_name(AntipodeStatus s);

// The algebra k_sigma^tau T with basis the boxes. Canonical and theta deformations are the special
// case sigma = 1, tau(B, C) = daleth(C).
class WeakHopf {
 public:
  const DoubleGroupoid& dgpd() const { return *t_; }
  DeformationKind kind() const { return kind_; }
  // Weights for canonical/theta deformations; nullptr otherwise.
  const ThetaWeights* theta() const { return theta_ ? &*theta_ : nullptr; }
  bool theta_type() const { return theta_.has_value(); }
  Id dim() const { return t_->num_boxes(); }

  Rational sigma(Id a, Id b) const;
  Rational tau(Id a, Id b) const;

  Element unit() const;
  Element basis(Id a) const { return Element(a); }
  Element product(Id a, Id b) const;
  Element mult(const Element& x, const Element& y) const;
  Tensor2 mult(const Tensor2& x, const Tensor2& y) const;
  Tensor3 mult(const Tensor3& x, const Tensor3& y) const;

  const Tensor2& coproduct(Id a) const { return delta_[a]; }
  Tensor2 coproduct(const Element& x) const;
  Rational counit(Id a) const { return counit_[a]; }
  Rational counit(const Element& x) const;

  // Closed forms for the source and target maps.
  Element source_map(Id a) const;
  Element target_map(Id a) const;
  Element source_map(const Element& x) const;
  Element target_map(const Element& x) const;
  // The defining expressions: sum X eps(h Y) and sum eps(X h) Y over the terms X (x) Y of Delta(1).
  Element source_map_defining(const Element& h) const;
  Element target_map_defining(const Element& h) const;

  AntipodeStatus antipode_status() const { return antipode_status_; }
  bool has_antipode() const { return antipode_status_ == AntipodeStatus::found; }
  // S(A) = c_A A^-1. Throws std::logic_error without an antipode.
  const Rational& antipode_coeff(Id a) const;
  Element antipode(Id a) const;
  Element antipode(const Element& x) const;
  // Test hook for mutation checks.
  void set_antipode_coeff(Id a, Rational c) { antipode_[a] = std::move(c); }

  // Results of the five weak bialgebra conditions (sigma_tau only; empty for theta types, where
  // admissibility is checked before construction).
  const ValidationReport& compatibility() const { return compatibility_; }

 private:
  friend WeakHopf build_canonical(const DoubleGroupoid&);
  friend WeakHopf build_theta(const DoubleGroupoid&, const ThetaWeights&);
  friend WeakHopf build_sigma_tau(const DoubleGroupoid&, const SigmaCochain&, const TauCochain&);
  WeakHopf() = default;
  void init_coalgebra();

  std::shared_ptr<const DoubleGroupoid> t_;
  DeformationKind kind_ = DeformationKind::theta;
  std::optional<ThetaWeights> theta_;
  std::optional<SigmaCochain> sigma_;
  std::optional<TauCochain> tau_;
  std::vector<Tensor2> delta_;
  std::vector<Rational> counit_;
  std::vector<Rational> antipode_;
  AntipodeStatus antipode_status_ = AntipodeStatus::inconclusive;
  ValidationReport compatibility_;
};

// Refused with std::domain_error naming the witness when the filling condition fails.
WeakHopf build_canonical(const DoubleGroupoid& t);
// Refused with std::domain_error when theta is not admissible.
WeakHopf build_theta(const DoubleGroupoid& t, const ThetaWeights& theta);
// Cocycle preconditions are enforced (std::invalid_argument listing the first failure); the five
// compatibility conditions are recorded, not enforced. The antipode is searched in the form
// S(A) = c_A A^-1 only when the conditions hold.
WeakHopf build_sigma_tau(const DoubleGroupoid& t, const SigmaCochain& sigma, const TauCochain& tau);

// _D 1 = sum over z with r(z) = e(D) of vid(z) | D, and 1_E = sum over x with l(x) = e(E) of E | vid(x).
Element d_one(const DoubleGroupoid& t, Id d);
Element one_e(const DoubleGroupoid& t, Id e);

}  // namespace dgq
