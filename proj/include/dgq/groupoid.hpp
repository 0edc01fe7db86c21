#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dgq/report.hpp"

namespace dgq {

// Finite groupoid with dense ids. Composition is written left to right:
// compose(f, g) is defined when target(f) == source(g).
class Groupoid {
 public:
  Groupoid() = default;
  // Raw tables; `compose` is row-major num_arrows x num_arrows with kNone for undefined.
  // Nothing is checked here; see validate_groupoid.
  Groupoid(Id num_objects, std::vector<Id> source, std::vector<Id> target, std::vector<Id> identity,
           std::vector<Id> inverse, std::vector<Id> compose);

  // Derives identities (idempotent loops) and inverses from the composition.
  // Missing ones are left as kNone and reported by validate_groupoid.
  static Groupoid from_composition(Id num_objects, std::vector<Id> source, std::vector<Id> target,
                                   std::vector<Id> compose);
  static Groupoid from_composition(Id num_objects, std::vector<Id> source, std::vector<Id> target,
                                   const std::function<Id(Id, Id)>& compose);

  Id num_objects() const { return num_objects_; }
  Id num_arrows() const { return static_cast<Id>(source_.size()); }
  Id source(Id f) const { return source_[f]; }
  Id target(Id f) const { return target_[f]; }
  Id identity(Id p) const { return identity_[p]; }
  Id inverse(Id f) const { return inverse_[f]; }
  Id compose(Id f, Id g) const { return compose_[static_cast<std::size_t>(f) * source_.size() + g]; }
  bool is_identity(Id f) const { return identity_[source_[f]] == f; }
  // Arrows with the given source (resp. target), ascending.
  std::span<const Id> arrows_from(Id p) const;
  std::span<const Id> arrows_to(Id p) const;

  const std::vector<Id>& sources() const { return source_; }
  const std::vector<Id>& targets() const { return target_; }
  const std::vector<Id>& identities() const { return identity_; }
  const std::vector<Id>& inverses() const { return inverse_; }
  const std::vector<Id>& composition() const { return compose_; }

  // Mutation hooks used by tests and by loaders; they keep the indexes in sync.
  void set_inverse(Id f, Id g) { inverse_[f] = g; }
  void set_compose(Id f, Id g, Id h) { compose_[static_cast<std::size_t>(f) * source_.size() + g] = h; }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.num_objects_ == b.num_objects_ && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.identity_ == b.identity_ && a.inverse_ == b.inverse_ && a.compose_ == b.compose_;
  }

 private:
  void index();

  Id num_objects_ = 0;
  std::vector<Id> source_, target_, identity_, inverse_, compose_;
  std::vector<Id> from_offsets_, from_list_, to_offsets_, to_list_;
};

// Structural errors (ids out of range, wrong table sizes) go to `structural`;
// violated axioms go to `failures` with witness arrows.
ValidationReport validate_groupoid(const Groupoid& g);

// Blocks of objects, each sorted, ordered by smallest element.
std::vector<std::vector<Id>> connected_components(const Groupoid& g);
// component id per object, numbered as in connected_components.
std::vector<Id> component_index(const Groupoid& g);

bool is_group(const Groupoid& g);

// Standard constructions.
Groupoid discrete_groupoid(Id n);
// Arrows (i, j) have id i * n + j, going from i to j.
Groupoid coarse_groupoid(Id n);
// Right action of a group on a set: act[x * |G| + a] = x.a.
// Arrows (x, a) have id x * |G| + a, going from x to x.a. Throws with a witness if act is not an action.
Groupoid transformation_groupoid(const Groupoid& group, Id set_size, const std::vector<Id>& act);
// Pairs (a, b) with equal sources and equal targets, composed componentwise. Objects must match.
// The arrow list is returned alongside.
std::pair<Groupoid, std::vector<std::pair<Id, Id>>> restricted_product(const Groupoid& a, const Groupoid& b);
std::pair<Groupoid, std::vector<std::pair<Id, Id>>> direct_product(const Groupoid& a, const Groupoid& b);
Groupoid opposite(const Groupoid& g);
// Subgroupoid on the arrows marked in `keep` (all objects retained). Returns the groupoid and
// the original id of each new arrow. Throws if the set is not closed.
std::pair<Groupoid, std::vector<Id>> wide_subgroupoid(const Groupoid& g, const std::vector<bool>& keep);

// Group given by a multiplication table table[a * n + b] = ab; element 0 need not be the unit.
Groupoid group_from_table(const std::vector<Id>& table, Id n);
// Permutation group generated by the given permutations of {0..k-1}. Elements are sorted
// lexicographically as permutations, so the identity is element 0. Product ab means "a then b".
// `elements` receives the permutations when non-null.
Groupoid group_from_permutations(const std::vector<std::vector<Id>>& generators,
                                 std::vector<std::vector<Id>>* elements = nullptr);
Groupoid cyclic_group(Id n);
// Symmetric group on k letters, elements as in group_from_permutations.
Groupoid symmetric_group(Id k, std::vector<std::vector<Id>>* elements = nullptr);

}  // namespace dgq
