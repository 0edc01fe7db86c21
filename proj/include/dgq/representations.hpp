#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgq/element.hpp"
#include "dgq/groupoid.hpp"
#include "dgq/linalg.hpp"
#include "dgq/report.hpp"
#include "dgq/weak_hopf.hpp"

namespace dgq {

// A module over k^(theta) T seen as a bundle over the vertical groupoid B => H: an H-graded space
// with box A acting from the component at b(A) to the component at t(A).
struct Bundle {
  std::vector<Id> dims;            // per horizontal arrow
  std::vector<RatMatrix> action;   // per box, dims[t(A)] x dims[b(A)]

  Id total() const;
  // Start of each component in the concatenated space.
  std::vector<Id> offsets() const;
};

// Action respects vertical composition and identities and is invertible; axioms "shape",
// "composition", "identity", "invertible".
ValidationReport check_bundle(const DoubleGroupoid& t, const Bundle& v);

// Bundle on a basis of homogeneous vectors 0..n-1; act(A, i) is the image of basis vector i.
// The degree of i is the x with vid(x) . i = i. Throws std::invalid_argument if some basis vector
// is not homogeneous or a box leaves the component at t(A).
using BasisAction = std::function<Element(Id box, Id i)>;
Bundle bundle_from_basis(const DoubleGroupoid& t, Id n, const BasisAction& act);

// The algebra acting on itself by left multiplication; grading by the top side.
Bundle regular_bundle(const WeakHopf& w);
// The target subalgebra with A . y = eps_t(A y), basis 1_E in the order of the E carrier.
Bundle unit_bundle(const WeakHopf& w);
// k on every arrow of one vertical class, every box of the class acting by 1.
Bundle trivial_class_bundle(const DoubleGroupoid& t, const std::vector<Id>& members);
// (V*)_x = (V_{x^-1})*, A acting by the transpose of the action of A^-1.
Bundle dual_bundle(const DoubleGroupoid& t, const Bundle& v);
// (V (x) U)_x = image of Delta(vid x) on the sum of V_z (x) U_w; A acts through Delta(A).
// Uses a dense ambient space of size total(V) * total(U).
Bundle tensor_bundles(const WeakHopf& w, const Bundle& v, const Bundle& u);

// Module action of an element on the concatenated space.
RatMatrix act(const Bundle& v, const DoubleGroupoid& t, const Element& e);
Rational trace(const Bundle& v, const DoubleGroupoid& t, const Element& e);
// dim End(V) over the algebra (grade preserving maps commuting with every box).
Id commutant_dimension(const DoubleGroupoid& t, const Bundle& v);
// Columns span a subspace of the concatenated space; true when every box maps it into itself.
bool is_submodule(const Bundle& v, const DoubleGroupoid& t, const RatMatrix& basis);

struct ClassData {
  std::vector<Id> members;   // horizontal arrows, ascending
  Id base = kNone;           // smallest member
  std::vector<Id> loops;     // boxes with top = bottom = base, ascending
  Groupoid loop_group;       // arrow i is loops[i]
};
// Classes of the relation "some box has top x and bottom y". Throws std::logic_error if the
// decomposition count sum |X|^2 |B(x)| differs from |B|.
std::vector<ClassData> vertical_classes(const DoubleGroupoid& t);

// Conjugacy classes of a one-object groupoid, each sorted, ordered by smallest element.
std::vector<std::vector<Id>> conjugacy_classes(const Groupoid& group);
// Dimensions of the complex irreducible representations, ascending. The regular representation
// of a random Hermitian combination of class sums is diagonalized numerically; the result is
// accepted only if the cluster sizes are squares d^2 with sum d^2 = |G| and as many clusters as
// conjugacy classes. Seeded; retries with derived seeds.
std::vector<Id> irreducible_dims(const Groupoid& group, std::uint64_t seed = 0);

struct FusionVerdict {
  bool vertical_connected = false;  // V => P connected
  bool unique_bottoms = false;      // at most one E with b(E) = x, for every x
  std::vector<Id> witness;          // (x, E1, E2) when unique_bottoms fails
  // The criterion for simplicity of the unit object as a permutation-type module.
  bool transitive = false;          // the degrees b(E)^-1 lie in one vertical class
  bool single_fibers = false;       // at most one E per degree
  Id unit_commutant = 0;            // dim End of the unit object; 1 iff simple
  bool fusion() const { return vertical_connected && unique_bottoms; }
};
// Requires effective weights (see effective_theta); std::invalid_argument otherwise.
FusionVerdict is_fusion(const WeakHopf& w);

// Proper submodule of the unit object spanned by the fiber sums of 1_E over the degrees
// (columns in the concatenated space). nullopt when every fiber has one element.
std::optional<RatMatrix> unit_reducibility_witness(const WeakHopf& w, const Bundle& unit);

struct SimpleDescriptor {
  Id class_index = 0;
  Id irrep_dim = 1;    // dim V
  Id total_dim = 1;    // |X| dim V
  Rational qdim;
  std::optional<Rational> fpdim;
};

struct DimensionTable {
  std::vector<ClassData> classes;
  std::vector<Rational> class_sums;   // sum over y in X of theta(l y) / theta(r y)
  std::vector<SimpleDescriptor> simples;
  Id num_e = 0;
  Rational global_dim;                // displayed closed form
  std::optional<Rational> fp_global;  // sum of fpdim^2
  bool positive_class_sums = false;   // hypothesis for fpdim = qdim
  bool pseudo_unitary = false;        // every S^2 scalar positive
  bool integral = false;              // every fpdim a positive integer
};
// Requires is_fusion(w).fusion(); std::domain_error naming the failing clause otherwise.
DimensionTable dimensions(const WeakHopf& w, std::uint64_t seed = 0);
// class, |X|, |B(x)|, dim V, qdim, fpdim
std::string dimensions_csv(const DimensionTable& table);

// Frobenius-Perron dimension of any module from its graded dimensions: sum over classes of
// (class sum / #E) dim V_{base}. Needs a fusion algebra with positive class sums.
Rational bundle_fpdim(const DimensionTable& table, const Bundle& v);
// tr_V(G) / #E.
Rational bundle_qdim(const WeakHopf& w, const Bundle& v);

}  // namespace dgq
