#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dgq {

using Id = std::int32_t;
inline constexpr Id kNone = -1;

struct Violation {
  std::string axiom;
  std::vector<Id> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Outcome of a structural check. `structural` holds malformed-table errors (dangling ids),
// `failures` holds violated axioms. Both are sorted for deterministic output.
struct ValidationReport {
  std::vector<Violation> structural;
  std::vector<Violation> failures;

  bool ok() const { return structural.empty() && failures.empty(); }
  bool has(const std::string& axiom) const;
  std::size_t count(const std::string& axiom) const;
  void fail(std::string axiom, std::vector<Id> witness, std::string detail = {});
  void broken(std::string axiom, std::vector<Id> witness, std::string detail = {});
  // Appends `other`, prefixing each axiom name with `prefix`.
  void absorb(const ValidationReport& other, const std::string& prefix = {});
  void sort();
};

nlohmann::json to_json(const ValidationReport& r);

}  // namespace dgq
