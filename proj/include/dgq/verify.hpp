#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "dgq/report.hpp"
#include "dgq/weak_hopf.hpp"

namespace dgq {

// Outcome of the exhaustive weak Hopf check. Failure details carry "lhs = ...; rhs = ..." dumps.
struct AxiomReport {
  ValidationReport report;
  std::map<std::string, std::size_t> checked;  // instances examined per axiom

  bool ok() const { return report.ok(); }
};

// Axioms checked:
//   associativity, unit, coassociativity, counit   (algebra and coalgebra on basis elements)
//   d-mult        Delta(ab) = Delta(a) Delta(b) for every basis pair, including zero products
//   ax-unit       both factorizations of Delta^(2)(1)
//   ax-counit     both forms, on every basis triple where some term can be nonzero
//   source-map, target-map   closed forms against the defining expressions
//   atp-1, atp-2, atp-3      on every basis element ("antipode-missing" when there is none)
AxiomReport verify_axioms(const WeakHopf& w);

// Delta(1) = 1 (x) 1.
bool is_hopf(const WeakHopf& w);

nlohmann::json to_json(const AxiomReport& r);

}  // namespace dgq
