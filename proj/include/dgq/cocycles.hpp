#pragma once

#include <functional>
#include <vector>

#include "dgq/double_groupoid.hpp"
#include "dgq/rational.hpp"
#include "dgq/report.hpp"

namespace dgq {

// Values on pairs of boxes, dense |B| x |B|. Zero marks "unset".
// Sigma lives on vertically composable pairs (b(A) = t(B)), tau on horizontal ones (r(A) = l(B)).
template <class Tag>
class PairCochain {
 public:
  PairCochain() = default;
  explicit PairCochain(Id num_boxes)
      : n_(num_boxes), values_(static_cast<std::size_t>(num_boxes) * num_boxes, Rational(0)) {}

  Id num_boxes() const { return n_; }
  const Rational& at(Id a, Id b) const { return values_[static_cast<std::size_t>(a) * n_ + b]; }
  void set(Id a, Id b, Rational v) { values_[static_cast<std::size_t>(a) * n_ + b] = std::move(v); }

  friend bool operator==(const PairCochain&, const PairCochain&) = default;

 private:
  Id n_ = 0;
  std::vector<Rational> values_;
};

using SigmaCochain = PairCochain<struct SigmaTag>;
using TauCochain = PairCochain<struct TauTag>;

// Fill the composable pairs from a function; other entries stay 0.
SigmaCochain make_sigma(const DoubleGroupoid& t, const std::function<Rational(Id, Id)>& f);
TauCochain make_tau(const DoubleGroupoid& t, const std::function<Rational(Id, Id)>& f);
SigmaCochain trivial_sigma(const DoubleGroupoid& t);
TauCochain trivial_tau(const DoubleGroupoid& t);

// 3-cochain on a group given as a one-object groupoid; values[(a * n + b) * n + c].
struct ThreeCocycle {
  Groupoid group;
  std::vector<Rational> values;

  const Rational& at(Id a, Id b, Id c) const {
    const auto n = static_cast<std::size_t>(group.num_arrows());
    return values[(a * n + b) * n + c];
  }
  static ThreeCocycle trivial(const Groupoid& group);
  static ThreeCocycle from_function(const Groupoid& group, const std::function<Rational(Id, Id, Id)>& f);
};

// omega(a, g, h) = (-1)^(agh) on C2 with exponents in {0, 1}.
ThreeCocycle sign_cocycle_c2();
// Coboundary of a normalized 2-cochain alpha (values[a * n + b]):
// (d alpha)(a, b, c) = alpha(b, c) alpha(a, bc) / (alpha(ab, c) alpha(a, b)).
ThreeCocycle coboundary(const Groupoid& group, const std::vector<Rational>& alpha);

// Axioms: "domain" (zero or missing value on a composable pair), "cocycle-sigma", "norm-sigma".
ValidationReport check_cocycle(const DoubleGroupoid& t, const SigmaCochain& sigma);
// Axioms: "domain", "cocycle-tau".
ValidationReport check_cocycle(const DoubleGroupoid& t, const TauCochain& tau);
// Axioms: "domain", "not-a-group", "cocycle-omega", "norm-omega".
ValidationReport check_cocycle(const ThreeCocycle& omega);

// Vertical triples A over B over C and horizontal triples A | B | C.
std::vector<std::array<Id, 3>> vertical_triples(const DoubleGroupoid& t);
std::vector<std::array<Id, 3>> horizontal_triples(const DoubleGroupoid& t);

// Unit and counit configurations, found by search with a uniqueness check.
// unit_configuration: for A | B | C with ABC a vertical identity box, U over V = B with AU, VC
// vertical identities, and W over Z = B with AZ, WC vertical identities.
// counit_configuration: for A over B over C a horizontal identity box, U | V = B with A over U,
// V over C horizontal identities, and W | Z = B with A over Z, W over C horizontal identities.
// Both return false when a configuration is missing or not unique.
struct UnitConfiguration {
  Id u = kNone, v = kNone, w = kNone, z = kNone;
};
bool unit_configuration(const DoubleGroupoid& t, Id a, Id b, Id c, UnitConfiguration* out);
bool counit_configuration(const DoubleGroupoid& t, Id a, Id b, Id c, UnitConfiguration* out);

// The five weak bialgebra conditions for the (sigma, tau) deformation. Axioms "multiplicativa",
// "unit-I", "unit-II", "counit-I", "counit-II", plus "configuration" if a unique U, V, W, Z is missing.
ValidationReport check_compatibility(const DoubleGroupoid& t, const SigmaCochain& sigma, const TauCochain& tau);

// sigma((a, b, g), (ag, bg, h)) = omega(a, g, h) / omega(b, g, h) on the double groupoid built by
// vec_g_double_groupoid(omega.group). Throws std::invalid_argument if omega fails check_cocycle.
SigmaCochain sigma_from_omega(const ThreeCocycle& omega);

// sigma(AB, CD) = sigma(A, C) sigma(B, D) for every 2x2 square [[A, B], [C, D]]. Axiom "sigma-product".
ValidationReport check_sigma_product_rule(const DoubleGroupoid& t, const SigmaCochain& sigma);

}  // namespace dgq
