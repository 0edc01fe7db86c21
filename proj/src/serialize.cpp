#include "dgq/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace dgq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

Id as_id(const json& v, Id bound, const std::string& where) {
  if (!v.is_number_integer()) fail(where + ": expected an integer id");
  const auto x = v.get<long long>();
  if (x < 0 || x >= bound) fail(where + ": id " + std::to_string(x) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<Id>(x);
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(where + ": expected a rational string \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(where + ": cannot parse rational \"" + v.get<std::string>() + "\"");
  }
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key, "document");
  if (!a.is_array()) fail(std::string(key) + ": expected an array");
  return a;
}

// Records indexed by "id", which must run over 0..n-1 in any order. Returns them by id.
std::vector<const json*> records(const json& j, const char* key) {
  const json& a = array_field(j, key);
  const Id n = static_cast<Id>(a.size());
  std::vector<const json*> out(n, nullptr);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    const Id id = as_id(field(a[i], "id", where), n, where + ".id");
    if (out[id]) fail(where + ": duplicate id " + std::to_string(id));
    out[id] = &a[i];
  }
  return out;
}

// Triples (a, b, ab) into a dense n x n table with kNone elsewhere.
std::vector<Id> composition_table(const json& j, const char* key, Id n) {
  std::vector<Id> table(static_cast<std::size_t>(n) * n, kNone);
  if (!j.contains(key)) return table;
  const json& a = array_field(j, key);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != 3) fail(where + ": expected a triple");
    const Id x = as_id(a[i][0], n, where), y = as_id(a[i][1], n, where), z = as_id(a[i][2], n, where);
    Id& slot = table[static_cast<std::size_t>(x) * n + y];
    if (slot != kNone && slot != z) fail(where + ": conflicting entries for the pair");
    slot = z;
  }
  return table;
}

json composition_triples(const Groupoid& g) {
  json out = json::array();
  for (Id a = 0; a < g.num_arrows(); ++a)
    for (Id b = 0; b < g.num_arrows(); ++b)
      if (g.compose(a, b) != kNone) out.push_back({a, b, g.compose(a, b)});
  return out;
}

std::vector<Id> split_ids(const std::string& key, std::size_t count, Id bound, const std::string& where) {
  std::vector<Id> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      fail(where + ": bad key \"" + key + "\"");
    }
    if (used != part.size() || v < 0 || v >= bound) fail(where + ": bad key \"" + key + "\"");
    out.push_back(static_cast<Id>(v));
  }
  if (out.size() != count) fail(where + ": key \"" + key + "\" needs " + std::to_string(count) + " ids");
  return out;
}

const json& unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.at(key).is_object()) return j.at(key);
  return j;
}

template <class Cochain>
Cochain pair_map(const json& j, const DoubleGroupoid& t, const char* key,
                 const std::function<bool(Id, Id)>& composable) {
  const json& m = unwrap(j, key);
  if (!m.is_object()) fail(std::string(key) + ": expected an object");
  Cochain c(t.num_boxes());
  for (const auto& [k, v] : m.items()) {
    const auto ids = split_ids(k, 2, t.num_boxes(), key);
    if (!composable(ids[0], ids[1])) fail(std::string(key) + ": pair \"" + k + "\" is not composable");
    c.set(ids[0], ids[1], as_rational(v, std::string(key) + "[" + k + "]"));
  }
  return c;
}

template <class Cochain>
json pair_map_json(const Cochain& c, const DoubleGroupoid& t) {
  json out = json::object();
  for (Id a = 0; a < t.num_boxes(); ++a)
    for (Id b = 0; b < t.num_boxes(); ++b)
      if (!c.at(a, b).is_zero()) out[std::to_string(a) + "," + std::to_string(b)] = c.at(a, b).str();
  return out;
}

}  // namespace

json groupoid_to_json(const Groupoid& g) {
  json arrows = json::array();
  for (Id f = 0; f < g.num_arrows(); ++f) arrows.push_back({{"id", f}, {"source", g.source(f)}, {"target", g.target(f)}});
  return {{"objects", g.num_objects()}, {"arrows", arrows}, {"compose", composition_triples(g)}};
}

json group_to_json(const Groupoid& g) {
  if (!is_group(g)) throw std::invalid_argument("group_to_json: not a group");
  json table = json::array();
  for (Id a = 0; a < g.num_arrows(); ++a)
    for (Id b = 0; b < g.num_arrows(); ++b) table.push_back(g.compose(a, b));
  return {{"order", g.num_arrows()}, {"table", table}};
}

Groupoid group_from_json(const json& j) {
  const json& order = field(j, "order", "group");
  if (!order.is_number_integer() || order.get<long long>() <= 0) fail("group.order: expected a positive integer");
  const Id n = order.get<Id>();
  const json& table = field(j, "table", "group");
  if (!table.is_array() || table.size() != static_cast<std::size_t>(n) * n) fail("group.table: expected order^2 entries");
  std::vector<Id> t;
  for (const auto& v : table) t.push_back(as_id(v, n, "group.table"));
  Groupoid g = group_from_table(t, n);
  if (!is_group(g)) fail("group.table: not a group");
  return g;
}

ThetaWeights theta_from_json(const json& j, Id points) {
  const json& m = unwrap(j, "theta");
  if (!m.is_object()) fail("theta: expected an object");
  std::vector<std::optional<Rational>> vals(points);
  for (const auto& [k, v] : m.items()) {
    const Id p = split_ids(k, 1, points, "theta")[0];
    Rational r = as_rational(v, "theta[" + k + "]");
    if (r.is_zero()) fail("theta[" + k + "]: weights must be nonzero");
    vals[p] = std::move(r);
  }
  std::vector<Rational> out;
  for (Id p = 0; p < points; ++p) {
    if (!vals[p]) fail("theta: no weight for point " + std::to_string(p));
    out.push_back(*vals[p]);
  }
  return ThetaWeights(std::move(out));
}

SigmaCochain sigma_from_json(const json& j, const DoubleGroupoid& t) {
  return pair_map<SigmaCochain>(j, t, "sigma", [&](Id a, Id b) { return t.bottom(a) == t.top(b); });
}

TauCochain tau_from_json(const json& j, const DoubleGroupoid& t) {
  return pair_map<TauCochain>(j, t, "tau", [&](Id a, Id b) { return t.right(a) == t.left(b); });
}

ThreeCocycle omega_from_json(const json& j, const Groupoid& group) {
  const json& m = unwrap(j, "omega");
  if (!m.is_object()) fail("omega: expected an object");
  const Id n = group.num_arrows();
  ThreeCocycle w;
  w.group = group;
  w.values.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (const auto& [k, v] : m.items()) {
    const auto ids = split_ids(k, 3, n, "omega");
    w.values[(static_cast<std::size_t>(ids[0]) * n + ids[1]) * n + ids[2]] = as_rational(v, "omega[" + k + "]");
  }
  return w;
}

json to_json(const ThetaWeights& theta) {
  json out = json::object();
  for (Id p = 0; p < theta.size(); ++p) out[std::to_string(p)] = theta.at(p).str();
  return out;
}

json to_json(const SigmaCochain& sigma, const DoubleGroupoid& t) { return pair_map_json(sigma, t); }
json to_json(const TauCochain& tau, const DoubleGroupoid& t) { return pair_map_json(tau, t); }

DgpdDocument document_from_json(const json& j) {
  if (!j.is_object()) fail("document: expected a JSON object");
  DgpdDocument doc;
  if (j.contains("description")) {
    if (!j.at("description").is_string()) fail("description: expected a string");
    doc.description = j.at("description").get<std::string>();
  }
  const auto points = records(j, "points");
  const Id np = static_cast<Id>(points.size());
  bool named = false;
  for (const json* p : points) named = named || p->contains("name");
  if (named)
    for (Id i = 0; i < np; ++i) {
      const json& nm = field(*points[i], "name", "points[" + std::to_string(i) + "]");
      if (!nm.is_string()) fail("points: names must be strings");
      doc.point_names.push_back(nm.get<std::string>());
    }

  auto arrows = [&](const char* key, const char* s, const char* e, const char* comp) {
    const auto rec = records(j, key);
    const Id n = static_cast<Id>(rec.size());
    std::vector<Id> src(n), dst(n);
    for (Id i = 0; i < n; ++i) {
      const std::string where = std::string(key) + "#" + std::to_string(i);
      src[i] = as_id(field(*rec[i], s, where), np, where + "." + s);
      dst[i] = as_id(field(*rec[i], e, where), np, where + "." + e);
    }
    return Groupoid::from_composition(np, std::move(src), std::move(dst), composition_table(j, comp, n));
  };
  Groupoid h = arrows("h_arrows", "l", "r", "h_arrow_compose");
  Groupoid v = arrows("v_arrows", "t", "b", "v_arrow_compose");

  const auto boxes = records(j, "boxes");
  const Id nb = static_cast<Id>(boxes.size());
  std::vector<Id> top(nb), bottom(nb), left(nb), right(nb);
  for (Id a = 0; a < nb; ++a) {
    const std::string where = "boxes#" + std::to_string(a);
    top[a] = as_id(field(*boxes[a], "t", where), h.num_arrows(), where + ".t");
    bottom[a] = as_id(field(*boxes[a], "b", where), h.num_arrows(), where + ".b");
    left[a] = as_id(field(*boxes[a], "l", where), v.num_arrows(), where + ".l");
    right[a] = as_id(field(*boxes[a], "r", where), v.num_arrows(), where + ".r");
  }
  doc.dgpd = DoubleGroupoid::assemble(std::move(h), std::move(v), std::move(top), std::move(bottom), std::move(left),
                                      std::move(right), composition_table(j, "hcompose", nb),
                                      composition_table(j, "vcompose", nb));
  if (j.contains("theta")) doc.theta = theta_from_json(j.at("theta"), np);
  if (j.contains("sigma")) doc.sigma = sigma_from_json(j.at("sigma"), doc.dgpd);
  if (j.contains("tau")) doc.tau = tau_from_json(j.at("tau"), doc.dgpd);
  if (j.contains("group")) doc.group = group_from_json(j.at("group"));
  return doc;
}

json document_to_json(const DgpdDocument& doc) {
  const DoubleGroupoid& t = doc.dgpd;
  json j;
  if (!doc.description.empty()) j["description"] = doc.description;
  json points = json::array();
  for (Id p = 0; p < t.num_points(); ++p) {
    json rec = {{"id", p}};
    if (!doc.point_names.empty()) rec["name"] = doc.point_names.at(p);
    points.push_back(rec);
  }
  j["points"] = points;
  json h = json::array(), v = json::array(), b = json::array();
  for (Id x = 0; x < t.num_h(); ++x) h.push_back({{"id", x}, {"l", t.l(x)}, {"r", t.r(x)}});
  for (Id g = 0; g < t.num_v(); ++g) v.push_back({{"id", g}, {"t", t.t(g)}, {"b", t.b(g)}});
  for (Id a = 0; a < t.num_boxes(); ++a)
    b.push_back({{"id", a}, {"t", t.top(a)}, {"b", t.bottom(a)}, {"l", t.left(a)}, {"r", t.right(a)}});
  j["h_arrows"] = h;
  j["v_arrows"] = v;
  j["boxes"] = b;
  j["h_arrow_compose"] = composition_triples(t.horizontal());
  j["v_arrow_compose"] = composition_triples(t.vertical());
  j["hcompose"] = composition_triples(t.boxes_h());
  j["vcompose"] = composition_triples(t.boxes_v());
  if (doc.theta) j["theta"] = to_json(*doc.theta);
  if (doc.sigma) j["sigma"] = to_json(*doc.sigma, t);
  if (doc.tau) j["tau"] = to_json(*doc.tau, t);
  if (doc.group) j["group"] = group_to_json(*doc.group);
  return j;
}

json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) fail("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

DgpdDocument load_document(const std::string& path) {
  try {
    return document_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

std::string dump_document(const DgpdDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string theta_csv(const DoubleGroupoid& t) {
  std::ostringstream os;
  os << "point,theta\n";
  for (Id p = 0; p < t.num_points(); ++p) os << p << ',' << t.theta(p) << '\n';
  return os.str();
}

std::string corner_csv(const DoubleGroupoid& t) {
  std::ostringstream os;
  os << "kind,g,x,value\n";
  for (CornerKind k : kAllCorners)
    for (Id g = 0; g < t.num_v(); ++g)
      for (Id x = 0; x < t.num_h(); ++x)
        if (t.corner_domain(k, g, x)) os << corner_name(k) << ',' << g << ',' << x << ',' << t.corner(k, g, x) << '\n';
  return os.str();
}

}  // namespace dgq
