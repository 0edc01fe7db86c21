#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgq/cocycles.hpp"
#include "dgq/double_groupoid.hpp"
#include "dgq/weak_hopf.hpp"

namespace dgq {

// Malformed JSON, wrong field types, dangling ids or unparsable rationals.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A double groupoid on disk, see docs/schema.md. Arrow and box composition tables are listed as
// triples; a pair missing from a table is undefined, which validate reports.
struct DgpdDocument {
  DoubleGroupoid dgpd;
  std::string description;
  std::vector<std::string> point_names;   // empty or one per point
  std::optional<ThetaWeights> theta;
  std::optional<SigmaCochain> sigma;
  std::optional<TauCochain> tau;
  std::optional<Groupoid> group;           // the group G of a T0(G) document, for omega files
};

DgpdDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const DgpdDocument& doc);
// Reads a file or "-" for stdin. Throws ParseError.
DgpdDocument load_document(const std::string& path);
// Canonical text: sorted keys, two-space indent, sorted triples, trailing newline.
std::string dump_document(const DgpdDocument& doc);

nlohmann::json groupoid_to_json(const Groupoid& g);
// One-object groupoids only: {"order": n, "table": [ab for a, b]}.
nlohmann::json group_to_json(const Groupoid& g);
Groupoid group_from_json(const nlohmann::json& j);

// Maps keyed "p" (theta), "a,b" (sigma, tau) and "a,b,c" (omega), values "p/q". A file may hold the
// bare map or an object with the map under "theta", "sigma", "tau" or "omega".
ThetaWeights theta_from_json(const nlohmann::json& j, Id points);
SigmaCochain sigma_from_json(const nlohmann::json& j, const DoubleGroupoid& t);
TauCochain tau_from_json(const nlohmann::json& j, const DoubleGroupoid& t);
ThreeCocycle omega_from_json(const nlohmann::json& j, const Groupoid& group);
nlohmann::json to_json(const ThetaWeights& theta);
nlohmann::json to_json(const SigmaCochain& sigma, const DoubleGroupoid& t);
nlohmann::json to_json(const TauCochain& tau, const DoubleGroupoid& t);
nlohmann::json read_json_file(const std::string& path);

// point,theta
std::string theta_csv(const DoubleGroupoid& t);
// kind,g,x,value over the domain of each corner map.
std::string corner_csv(const DoubleGroupoid& t);

}  // namespace dgq
