#pragma once

// The example families shared by the acceptance binary and the unit tests.

#include <functional>
#include <string>
#include <vector>

#include "dgq/builders.hpp"
#include "dgq/cocycles.hpp"
#include "dgq/weak_hopf.hpp"

namespace examples {

struct Example {
  std::string name;
  dgq::DoubleGroupoid dgpd;
  // The algebra of the example (sigma-twisted for the vec_g families).
  std::function<dgq::WeakHopf()> algebra;
  // Whether `dgpd` satisfies the filling condition, so that canonical weights exist.
  bool canonical = true;
};

inline dgq::DoubleGroupoid matched_pair_s3() {
  const dgq::Groupoid s3 = dgq::group_fixture("S3");
  return dgq::matched_pair(
      dgq::matched_pair_from_factorization(s3, dgq::subgroup_fixture("S3", "A3"), dgq::subgroup_fixture("S3", "S2")));
}

inline Example canonical_example(std::string name, dgq::DoubleGroupoid t) {
  Example e{std::move(name), std::move(t), {}, true};
  e.algebra = [t = e.dgpd] { return dgq::build_canonical(t); };
  return e;
}

inline Example vec_g_example(std::string name, const dgq::ThreeCocycle& omega) {
  dgq::VecGOmega v = dgq::vec_g_omega(omega);
  Example e{std::move(name), v.dgpd, {}, true};
  e.algebra = [v] { return dgq::build_sigma_tau(v.dgpd, v.sigma, dgq::trivial_tau(v.dgpd)); };
  return e;
}

// The nine families of the axiom suite.
inline std::vector<Example> axiom_suite() {
  const dgq::Groupoid c2 = dgq::group_fixture("C2");
  std::vector<Example> out;
  out.push_back(canonical_example("discrete(3)", dgq::discrete_double_groupoid(3)));
  out.push_back(canonical_example("no_siempre(1,1)", dgq::no_siempre(1, 1).dgpd));
  out.push_back(canonical_example("no_siempre(3,1)", dgq::no_siempre(3, 1).dgpd));
  out.push_back(canonical_example("matched_pair(S3=A3.S2)", matched_pair_s3()));
  out.push_back(canonical_example("bimodule(C2)", dgq::bimodule_dgpd(c2)));
  out.push_back(canonical_example("bimodule(coarse2)", dgq::bimodule_dgpd(dgq::group_fixture("coarse2"))));
  out.push_back(canonical_example("comma(S2<=S3)",
                                  dgq::comma(dgq::group_fixture("S3"), dgq::subgroup_fixture("S3", "S2"))));
  out.push_back(vec_g_example("vec_g(C2,trivial)", dgq::ThreeCocycle::trivial(c2)));
  out.push_back(vec_g_example("vec_g(C2,sign)", dgq::sign_cocycle_c2()));
  return out;
}

}  // namespace examples
