#pragma once

#include <optional>
#include <vector>

#include "dgq/element.hpp"
#include "dgq/linalg.hpp"
#include "dgq/report.hpp"
#include "dgq/weak_hopf.hpp"

namespace dgq {

// Weights with tau(B, C) = theta(bl C): the stored ones for theta types, otherwise recovered from
// tau when tau only depends on bl of its second argument. nullopt when no such weights exist.
std::optional<ThetaWeights> effective_theta(const WeakHopf& w);

// Rank of the span of the given elements inside a space of dimension `dim`.
Id span_rank(const std::vector<Element>& elements, Id dim);

// Dimensions of the images of the source and target maps.
Id source_dimension(const WeakHopf& w);
Id target_dimension(const WeakHopf& w);

// Closed forms of Delta(1): sum over D of daleth(D^dagger) _D 1 (x) 1_{D^dagger}, and the same
// sum indexed by E. Throw std::logic_error without effective weights.
Tensor2 delta_one_by_d(const WeakHopf& w);
Tensor2 delta_one_by_e(const WeakHopf& w);

// G = sum over x of theta(l x) / theta(r x) vid(x), and its inverse.
Element pivotal_element(const WeakHopf& w);
Element pivotal_inverse(const WeakHopf& w);
// u = sum over P of 1/theta(P) 1_{Theta(P)} and u^-1 = sum theta(P) 1_{Theta(P)}.
Element pivotal_seed(const WeakHopf& w);
Element pivotal_seed_inverse(const WeakHopf& w);

// Products of the core elements _D 1, 1_E with each other, with boxes and with vertical identities,
// injectivity of D -> _D 1 and E -> 1_E, and dim of the source/target subalgebras against |D|, |E|.
// Axioms: gpd-st-d, gpd-st-e, d1-a, a-d1, 1e-a, a-1e, d1-x, 1e-x, injective-d, injective-e,
// source-dim, target-dim. The product rules assume sigma = 1; on sigma_tau algebras only the
// dimension and injectivity checks run.
ValidationReport check_core_products(const WeakHopf& w);

// Delta(1) against both closed forms and Delta(vid x) = Delta(1) sum_{zw = x} vid z (x) vid w.
// Axioms: delta-1, delta-1-by-e, delta-x.
ValidationReport check_delta_one(const WeakHopf& w);

// G G^-1 = 1, u u^-1 = 1, G = S(u) u^-1, S^2(A) = G^-1 A G for every box, Delta(G) = Delta(1)(G (x) G).
// Axioms: pivotal-inverse, seed-inverse, pivotal-seed, pivotal-conjugation, pivotal-grouplike.
ValidationReport check_pivotal(const WeakHopf& w);

struct AntipodeAnalysis {
  std::vector<Rational> square;        // S^2(A) = square[A] A
  std::vector<Rational> closed_form;   // theta(bl) theta(tr) / (theta(br) theta(tl)); empty without weights
  bool matches_closed_form = false;
  bool is_regular = false;             // S^2 = id on the source and target subalgebras
  bool constant_on_d_components = false;
  std::optional<bool> unit_antipodes;  // S(1_E) = _{E^-1} 1 and S(_D 1) = theta(e D)/theta(s D) 1_{D^-1}
  bool is_involutive = false;

  // Distinct values of `square`, ascending.
  std::vector<Rational> spectrum() const;
};
// Requires an antipode (std::logic_error otherwise).
AntipodeAnalysis antipode_analysis(const WeakHopf& w);

struct StarStructure {
  // lambda(A) = theta(tr A) / theta(br A); for theta = 1/corner count this is UL(A) / LL(A).
  std::vector<Rational> lambda;
  ValidationReport report;       // char-vertical, char-horizontal, involution, anti-multiplicative,
                                 // coproduct, gram
  Element star(const DoubleGroupoid& t, const Element& x) const;
};
// A* = lambda(A) A^v. Requires a theta type with positive weights (std::invalid_argument otherwise).
StarStructure star_structure(const WeakHopf& w);

struct DualityPairing {
  // <A, A^t> for the basis of w; all other basis pairings vanish.
  std::vector<Rational> diagonal;
  Id gram_rank = 0;
  ValidationReport report;  // mu-horizontal, mu-vertical, underline-product, underline-coproduct,
                            // product-coproduct, coproduct-product, unit-counit, counit-unit, antipode,
                            // nondegenerate
  Rational pair(const Element& x, const Element& f) const;
  Rational pair(const Tensor2& x, const Tensor2& f) const;
};
// Pairing of w on T with wt on the transpose of T, (A underlined, B) = mu(A) delta(A, B^t) with
// underlined A = daleth(A) A and mu(A) = theta(tl A) / theta(tr A). Both must be theta types with
// the same weights (std::invalid_argument otherwise).
DualityPairing duality_pairing(const WeakHopf& w, const WeakHopf& wt);

}  // namespace dgq
