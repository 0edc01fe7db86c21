#include "dgq/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "dgq/builders.hpp"
#include "dgq/core_groupoids.hpp"
#include "dgq/representations.hpp"
#include "dgq/serialize.hpp"
#include "dgq/verify.hpp"
#include "dgq/wha_extras.hpp"

namespace dgq {

using nlohmann::json;

namespace {

// Carries an exit code out of a command together with the message for stderr.
struct Exit {
  int code;
  std::string message;
  json witness;
};

struct AlgebraOptions {
  std::string theta;   // "", "canonical" or a file
  std::string sigma, tau, omega;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_failures(std::ostream& out, const ValidationReport& r, std::size_t limit = 20) {
  std::size_t shown = 0;
  for (const auto* list : {&r.structural, &r.failures})
    for (const Violation& v : *list) {
      if (shown++ == limit) {
        out << "    ... " << (r.structural.size() + r.failures.size() - limit) << " more\n";
        return;
      }
      out << "    " << v.axiom << " (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
      out << ")";
      if (!v.detail.empty()) out << ": " << v.detail;
      out << '\n';
    }
}

void section(std::ostream& out, const std::string& name, const ValidationReport& r) {
  out << name << ": " << (r.ok() ? "ok" : "FAIL") << '\n';
  if (!r.ok()) print_failures(out, r);
}

DgpdDocument load_valid(const std::string& path) {
  DgpdDocument doc = load_document(path);
  ValidationReport rep = validate(doc.dgpd);
  if (!rep.ok()) throw Exit{kExitAxiomFailure, "input is not a double groupoid", to_json(rep)};
  return doc;
}

WeakHopf make_algebra(const DgpdDocument& doc, const AlgebraOptions& o) {
  const DoubleGroupoid& t = doc.dgpd;
  const bool twisted = !o.sigma.empty() || !o.tau.empty() || !o.omega.empty() || doc.sigma || doc.tau;
  if (twisted) {
    if (!o.theta.empty()) throw ParseError("--theta cannot be combined with sigma/tau/omega");
    SigmaCochain sigma = doc.sigma ? *doc.sigma : trivial_sigma(t);
    TauCochain tau = doc.tau ? *doc.tau : trivial_tau(t);
    if (!o.omega.empty()) {
      if (!doc.group) throw ParseError("--omega needs a document with a \"group\" section");
      if (!(vec_g_double_groupoid(*doc.group) == t)) throw ParseError("--omega needs the T0(G) double groupoid of its group");
      const ThreeCocycle omega = omega_from_json(read_json_file(o.omega), *doc.group);
      ValidationReport rep = check_cocycle(omega);
      if (!rep.ok()) throw Exit{kExitAxiomFailure, "omega is not a normalized 3-cocycle", to_json(rep)};
      sigma = sigma_from_omega(omega);
    }
    if (!o.sigma.empty()) sigma = sigma_from_json(read_json_file(o.sigma), t);
    if (!o.tau.empty()) tau = tau_from_json(read_json_file(o.tau), t);
    try {
      return build_sigma_tau(t, sigma, tau);
    } catch (const std::invalid_argument& e) {
      throw Exit{kExitAxiomFailure, e.what(), json()};
    }
  }
  std::optional<ThetaWeights> theta = doc.theta;
  if (o.theta == "canonical") theta.reset();
  else if (!o.theta.empty()) theta = theta_from_json(read_json_file(o.theta), t.num_points());
  if (!theta) {
    std::pair<Id, Id> w;
    if (!filling_condition(t, &w))
      throw Exit{kExitInadmissible, "canonical weights need the filling condition; no box bounds (g, x)",
                 json{{"g", w.first}, {"x", w.second}}};
    return build_canonical(t);
  }
  const auto bad = check_theta_admissible(t, *theta);
  if (!bad.empty())
    throw Exit{kExitInadmissible, "weights are not admissible at (g, x)",
               json{{"g", bad.front().g}, {"x", bad.front().x}, {"sum", bad.front().sum.str()}}};
  return build_theta(t, *theta);
}

json analysis_json(const AntipodeAnalysis& a) {
  json spec = json::array();
  for (const auto& s : a.spectrum()) spec.push_back(s.str());
  json j = {{"spectrum", spec},
            {"matches_closed_form", a.matches_closed_form},
            {"regular", a.is_regular},
            {"constant_on_d_components", a.constant_on_d_components},
            {"involutive", a.is_involutive}};
  if (a.unit_antipodes) j["unit_antipodes"] = *a.unit_antipodes;
  return j;
}

// ---- commands ----

int cmd_validate(const std::string& file, std::ostream& out) {
  DgpdDocument doc = load_document(file);
  ValidationReport rep = validate(doc.dgpd);
  json j = to_json(rep);
  j["ok"] = rep.ok();
  out << j.dump(2) << '\n';
  return rep.ok() ? kExitOk : kExitAxiomFailure;
}

struct BuildParams {
  std::string family;
  Id points = 3, m = 1, n = 1;
  std::string group = "S3", h = "A3", v = "S2", f = "S2", omega = "trivial";
  std::string h_blocks, v_blocks;
  std::string output;
};

// "0,1|2,3" -> block index per point.
std::vector<Id> parse_blocks(const std::string& text, Id points) {
  std::vector<Id> block(points, kNone);
  std::stringstream ss(text);
  std::string part;
  Id b = 0;
  while (std::getline(ss, part, '|')) {
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      std::size_t used = 0;
      long p = -1;
      try {
        p = std::stol(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || p < 0 || p >= points || block[p] != kNone)
        throw ParseError("bad partition \"" + text + "\"");
      block[p] = b;
    }
    ++b;
  }
  for (Id p = 0; p < points; ++p)
    if (block[p] == kNone) throw ParseError("partition \"" + text + "\" misses point " + std::to_string(p));
  return block;
}

DgpdDocument build_family(const BuildParams& p) {
  auto group = [](const std::string& name) {
    try {
      return group_fixture(name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  };
  auto subgroup = [](const std::string& g, const std::string& s) {
    try {
      return subgroup_fixture(g, s);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  };
  DgpdDocument doc;
  const std::string& fam = p.family;
  if (fam == "discrete") {
    if (p.points < 1) throw ParseError("--points must be positive");
    doc.dgpd = discrete_double_groupoid(p.points);
    doc.description = "discrete double groupoid on " + std::to_string(p.points) + " points";
  } else if (fam == "no-siempre") {
    if (p.m < 1 || p.n < 1) throw ParseError("--m and --n must be positive");
    NoSiempre ns = no_siempre(p.m, p.n);
    doc.dgpd = std::move(ns.dgpd);
    doc.point_names = ns.names;
    doc.description = "commuting squares for {P,Q,T*}|{R,S*} and {P,R}|{Q,S*,T*}, m=" + std::to_string(p.m) +
                      " n=" + std::to_string(p.n) + ", distinguished box " + std::to_string(ns.box_a);
  } else if (fam == "coarse-squares") {
    const Id k = p.points;
    if (k < 1) throw ParseError("--points must be positive");
    const auto hb = parse_blocks(p.h_blocks, k), vb = parse_blocks(p.v_blocks, k);
    std::vector<bool> hm(k * k), vm(k * k);
    for (Id i = 0; i < k; ++i)
      for (Id j = 0; j < k; ++j) {
        hm[i * k + j] = hb[i] == hb[j];
        vm[i * k + j] = vb[i] == vb[j];
      }
    doc.dgpd = commuting_squares(coarse_groupoid(k), hm, vm);
    doc.description = "commuting squares in the coarse groupoid on " + std::to_string(k) + " points, H blocks " +
                      p.h_blocks + ", V blocks " + p.v_blocks;
  } else if (fam == "matched-pair") {
    const Groupoid g = group(p.group);
    try {
      doc.dgpd = matched_pair(matched_pair_from_factorization(g, subgroup(p.group, p.h), subgroup(p.group, p.v)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    doc.description = "matched pair from " + p.group + " = " + p.v + " . " + p.h;
  } else if (fam == "bimodule") {
    doc.dgpd = bimodule_dgpd(group(p.group));
    doc.description = "T(G) for G = " + p.group;
  } else if (fam == "comma") {
    doc.dgpd = comma(group(p.group), subgroup(p.group, p.f));
    doc.description = "comma double groupoid of " + p.f + " in " + p.group;
  } else if (fam == "vec-g") {
    const Groupoid g = group(p.group);
    if (!is_group(g)) throw ParseError("vec-g needs a group");
    doc.dgpd = vec_g_double_groupoid(g);
    doc.group = g;
    doc.description = "T0(G) for G = " + p.group;
    if (p.omega == "sign") {
      if (g.num_arrows() != 2) throw ParseError("--omega sign needs G = C2");
      doc.sigma = vec_g_omega(sign_cocycle_c2()).sigma;
      doc.description += " with sigma from omega(a,g,h) = (-1)^(agh)";
    } else if (p.omega != "trivial") {
      throw ParseError("--omega is trivial or sign");
    }
  } else {
    throw ParseError("unknown family \"" + fam + "\"");
  }
  return doc;
}

int cmd_build(const BuildParams& p, std::ostream& out) {
  const DgpdDocument doc = build_family(p);
  const std::string text = dump_document(doc);
  if (p.output.empty() || p.output == "-") {
    out << text;
  } else {
    std::ofstream f(p.output);
    if (!f) throw ParseError("cannot write " + p.output);
    f << text;
  }
  return kExitOk;
}

int cmd_wha(const std::string& file, const AlgebraOptions& o, bool verify, bool as_json, std::ostream& out) {
  const DgpdDocument doc = load_valid(file);
  const WeakHopf w = make_algebra(doc, o);
  json j = {{"kind", deformation_name(w.kind())},
            {"dim", w.dim()},
            {"antipode", antipode_status_name(w.antipode_status())},
            {"hopf", is_hopf(w)}};
  if (w.has_antipode()) j["analysis"] = analysis_json(antipode_analysis(w));
  std::ostringstream text;
  text << "algebra: " << deformation_name(w.kind()) << ", dim " << w.dim() << ", antipode "
       << antipode_status_name(w.antipode_status()) << '\n';
  if (w.has_antipode()) {
    const AntipodeAnalysis a = antipode_analysis(w);
    text << "antipode-square spectrum:";
    for (const auto& s : a.spectrum()) text << ' ' << s;
    text << "\n  closed form: " << yes_no(a.matches_closed_form) << "\n  regular: " << yes_no(a.is_regular)
         << "\n  constant on D components: " << yes_no(a.constant_on_d_components)
         << "\n  involutive: " << yes_no(a.is_involutive) << '\n';
  }
  bool pass = true;
  if (verify) {
    auto run = [&](const std::string& name, const ValidationReport& r) {
      pass = pass && r.ok();
      j["checks"][name] = to_json(r);
      j["checks"][name]["ok"] = r.ok();
      section(text, name, r);
    };
    const AxiomReport ax = verify_axioms(w);
    j["checks"]["axioms"] = to_json(ax);
    pass = ax.ok();
    section(text, "axioms", ax.report);
    run("core", check_core_products(w));
    if (effective_theta(w)) {
      run("delta-one", check_delta_one(w));
      run("pivotal", check_pivotal(w));
    } else {
      text << "delta-one, pivotal: skipped (no theta weights)\n";
    }
    if (w.theta_type() && w.theta()->all_positive()) {
      run("star", star_structure(w).report);
    } else {
      text << "star: skipped (needs positive theta weights)\n";
    }
    if (w.theta_type()) {
      try {
        const WeakHopf wt = build_theta(w.dgpd().transpose(), *w.theta());
        run("duality", duality_pairing(w, wt).report);
      } catch (const std::domain_error& e) {
        text << "duality: skipped (" << e.what() << ")\n";
      }
    }
    j["ok"] = pass;
    text << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  out << (as_json ? j.dump(2) + "\n" : text.str());
  return pass ? kExitOk : kExitAxiomFailure;
}

int cmd_rep(const std::string& file, const AlgebraOptions& o, std::uint64_t seed, bool as_json, bool as_csv,
            std::ostream& out) {
  const DgpdDocument doc = load_valid(file);
  const WeakHopf w = make_algebra(doc, o);
  if (!effective_theta(w)) throw Exit{kExitNotFusion, "rep needs theta weights", json()};
  const FusionVerdict f = is_fusion(w);
  json verdict = {{"fusion", f.fusion()},
                  {"vertical_connected", f.vertical_connected},
                  {"unique_bottoms", f.unique_bottoms},
                  {"unit_commutant", f.unit_commutant}};
  if (!f.witness.empty()) verdict["witness"] = {{"x", f.witness[0]}, {"e1", f.witness[1]}, {"e2", f.witness[2]}};
  std::ostringstream head;
  head << "fusion: " << (f.fusion() ? "true" : "false") << "\nvertical groupoid connected: " << yes_no(f.vertical_connected)
       << "\nbottom map injective on E: " << yes_no(f.unique_bottoms) << "\nunit object endomorphisms: " << f.unit_commutant
       << '\n';
  DimensionTable d;
  try {
    d = dimensions(w, seed);
  } catch (const std::domain_error& e) {
    if (as_json) out << json{{"verdict", verdict}}.dump(2) << '\n';
    else if (!as_csv) out << head.str();
    throw Exit{kExitNotFusion, e.what(), verdict.value("witness", json())};
  }
  const std::string csv = dimensions_csv(d);
  if (as_csv) {
    out << csv;
  } else if (as_json) {
    json simples = json::array();
    for (const auto& s : d.simples)
      simples.push_back({{"class", s.class_index},
                         {"size", d.classes[s.class_index].members.size()},
                         {"loop_order", d.classes[s.class_index].loops.size()},
                         {"irrep_dim", s.irrep_dim},
                         {"qdim", s.qdim.str()},
                         {"fpdim", s.fpdim ? json(s.fpdim->str()) : json()}});
    out << json{{"verdict", verdict},
                {"seed", seed},
                {"num_e", d.num_e},
                {"global_dim", d.global_dim.str()},
                {"fp_global_dim", d.fp_global ? json(d.fp_global->str()) : json()},
                {"integral", d.integral},
                {"pseudo_unitary", d.pseudo_unitary},
                {"simples", simples}}
               .dump(2)
        << '\n';
  } else {
    out << head.str() << "global dimension: " << d.global_dim << '\n';
    if (d.fp_global) out << "global FP dimension: " << *d.fp_global << '\n';
    out << csv;
  }
  return kExitOk;
}

int cmd_info(const std::string& file, bool as_json, bool theta_table, bool corner_table, std::ostream& out) {
  const DgpdDocument doc = load_valid(file);
  const DoubleGroupoid& t = doc.dgpd;
  if (theta_table) {
    out << theta_csv(t);
    return kExitOk;
  }
  if (corner_table) {
    out << corner_csv(t);
    return kExitOk;
  }
  const CoreGroupoid d = build_core(t, CoreSide::D), e = build_core(t, CoreSide::E);
  const TransitivityFlags tf = transitivity_flags(t);
  const bool filling = filling_condition(t);
  json theta = json::object();
  for (Id p = 0; p < t.num_points(); ++p) theta[std::to_string(p)] = t.theta(p);
  if (as_json) {
    out << json{{"points", t.num_points()},
                {"h_arrows", t.num_h()},
                {"v_arrows", t.num_v()},
                {"boxes", t.num_boxes()},
                {"theta", theta},
                {"filling", filling},
                {"vacant", is_vacant(t)},
                {"horizontally_transitive", tf.horizontally_transitive},
                {"vertically_transitive", tf.vertically_transitive},
                {"locally_trivial", tf.locally_trivial},
                {"core_d", groupoid_to_json(d.as_groupoid)},
                {"core_d_boxes", d.carrier},
                {"core_e", groupoid_to_json(e.as_groupoid)},
                {"core_e_boxes", e.carrier}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  if (!doc.description.empty()) out << doc.description << '\n';
  out << "points " << t.num_points() << ", horizontal arrows " << t.num_h() << ", vertical arrows " << t.num_v()
      << ", boxes " << t.num_boxes() << '\n';
  out << "theta:";
  for (Id p = 0; p < t.num_points(); ++p)
    out << ' ' << (doc.point_names.empty() ? std::to_string(p) : doc.point_names[p]) << '=' << t.theta(p);
  out << "\nfilling: " << yes_no(filling) << "\nvacant: " << yes_no(is_vacant(t))
      << "\nhorizontally transitive: " << yes_no(tf.horizontally_transitive)
      << "\nvertically transitive: " << yes_no(tf.vertically_transitive)
      << "\nlocally trivial: " << yes_no(tf.locally_trivial) << "\ncore D: " << d.carrier.size()
      << " boxes\ncore E: " << e.carrier.size() << " boxes\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Hopf algebras of finite double groupoids, exact over the rationals"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file = "-";
  AlgebraOptions alg;
  bool as_json = false, as_csv = false, verify = false, corners = false;
  std::uint64_t seed = 0;
  BuildParams bp;

  auto* v = app.add_subcommand("validate", "check the double groupoid axioms; JSON report on stdout");
  v->add_option("file", file, "document, - for stdin");

  auto* b = app.add_subcommand("build", "write a built-in double groupoid as a document");
  b->add_option("family", bp.family, "discrete, no-siempre, coarse-squares, matched-pair, bimodule, comma, vec-g")
      ->required();
  b->add_option("--points", bp.points, "discrete, coarse-squares: number of points");
  b->add_option("--m", bp.m, "no-siempre: number of S points");
  b->add_option("--n", bp.n, "no-siempre: number of T points");
  b->add_option("--G", bp.group, "group fixture: C1..C9, S1..S4, A3, coarse2");
  b->add_option("--H", bp.h, "matched-pair: horizontal subgroup");
  b->add_option("--V", bp.v, "matched-pair: vertical subgroup");
  b->add_option("--F", bp.f, "comma: subgroup");
  b->add_option("--omega", bp.omega, "vec-g: trivial or sign");
  b->add_option("--h-blocks", bp.h_blocks, "coarse-squares: partition for H, e.g. 0,1|2");
  b->add_option("--v-blocks", bp.v_blocks, "coarse-squares: partition for V");
  b->add_option("-o,--output", bp.output, "output file (default stdout)");

  auto algebra_flags = [&](CLI::App* c) {
    c->add_option("file", file, "document, - for stdin");
    c->add_option("--theta", alg.theta, "canonical or a weights file");
    c->add_option("--sigma", alg.sigma, "sigma cochain file");
    c->add_option("--tau", alg.tau, "tau cochain file");
    c->add_option("--omega", alg.omega, "3-cocycle file for a T0(G) document");
    c->add_flag("--json", as_json, "JSON output");
  };
  auto* w = app.add_subcommand("wha", "build the weak Hopf algebra and report on it");
  algebra_flags(w);
  w->add_flag("--verify", verify, "check every axiom and identity; exit 1 on failure");

  auto* r = app.add_subcommand("rep", "fusion verdict and dimension table");
  algebra_flags(r);
  r->add_flag("--csv", as_csv, "dimension table only, as CSV");
  r->add_option("--seed", seed, "seed of the numerical irrep step (default 0)");

  auto* i = app.add_subcommand("info", "counts, theta, filling, vacancy, transitivity, core groupoids");
  i->add_option("file", file, "document, - for stdin");
  i->add_flag("--json", as_json, "JSON output, core groupoids included");
  i->add_flag("--csv", as_csv, "theta table as CSV (point,theta)");
  i->add_flag("--corners", corners, "corner table as CSV (kind,g,x,value)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*v) return cmd_validate(file, out);
    if (*b) return cmd_build(bp, out);
    if (*w) return cmd_wha(file, alg, verify, as_json, out);
    if (*r) return cmd_rep(file, alg, seed, as_json, as_csv, out);
    if (*i) return cmd_info(file, as_json, as_csv, corners, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    if (!e.witness.is_null()) err << "witness: " << e.witness.dump() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAxiomFailure;
  }
  return kExitParseError;
}

}  // namespace dgq
