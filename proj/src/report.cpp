#include "dgq/report.hpp"

#include <algorithm>

namespace dgq {

bool ValidationReport::has(const std::string& axiom) const { return count(axiom) > 0; }

std::size_t ValidationReport::count(const std::string& axiom) const {
  auto pred = [&](const Violation& v) { return v.axiom == axiom; };
  return static_cast<std::size_t>(std::count_if(failures.begin(), failures.end(), pred) +
                                  std::count_if(structural.begin(), structural.end(), pred));
}

void ValidationReport::fail(std::string axiom, std::vector<Id> witness, std::string detail) {
  failures.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

void ValidationReport::broken(std::string axiom, std::vector<Id> witness, std::string detail) {
  structural.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

void ValidationReport::absorb(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.structural) structural.push_back({prefix + v.axiom, v.witness, v.detail});
  for (const auto& v : other.failures) failures.push_back({prefix + v.axiom, v.witness, v.detail});
}

void ValidationReport::sort() {
  std::sort(structural.begin(), structural.end());
  std::sort(failures.begin(), failures.end());
}

nlohmann::json to_json(const ValidationReport& r) {
  auto dump = [](const std::vector<Violation>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : vs) {
      nlohmann::json j{{"axiom", v.axiom}, {"witness", v.witness}};
      if (!v.detail.empty()) j["detail"] = v.detail;
      a.push_back(std::move(j));
    }
    return a;
  };
  return {{"valid", r.ok()}, {"structural", dump(r.structural)}, {"failures", dump(r.failures)}};
}

}  // namespace dgq
