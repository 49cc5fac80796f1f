#include "gca/chern.hpp"
#include "gca/graph.hpp"
#include "gca/graph_complex.hpp"
#include "gca/grt.hpp"
#include "gca/lie.hpp"
#include "gca/polyvector.hpp"
#include "gca/series.hpp"
#include "gca/suites.hpp"
#include "gca/symalg.hpp"
#include "gca/wheel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace gca;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2;

struct Output {
  bool json = false;
  Json doc;
  std::ostringstream text;
};

std::string read_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

graph::Graph load_graph(const std::string& arg) {
  std::string s = trim(read_arg(arg));
  if (s == "tetra" || s == "tetrahedron") return graph::tetrahedron();
  if (!s.empty() && s.front() == '{') return graph::parse_json(s);
  return graph::parse_text(s);
}

std::string str(const ratlin::Rational& q) { return q.get_str(); }
const char* yes(bool b) { return b ? "true" : "false"; }

Json gra_vector_json(const graph::GraVector& v) {
  Json terms = Json::array();
  for (const auto& [g, c] : v.terms()) terms.push_back({{"graph", graph::to_text(g)}, {"coefficient", str(c)}});
  return terms;
}

// graph / gc

int graph_canon(Output& out, const std::string& arg) {
  graph::Graph g = load_graph(arg);
  graph::IsoForm f = graph::iso_canonical(g);
  out.doc = {{"canonical", graph::to_text(f.graph)},
             {"sign", f.sign},
             {"odd_automorphism", f.odd_automorphism},
             {"degree", graph::degree_of(g)},
             {"gc_filter", graph::passes_gc_filter(g)}};
  out.text << "canonical: " << graph::to_text(f.graph) << "\n"
           << "sign: " << f.sign << "\n"
           << "odd automorphism: " << yes(f.odd_automorphism) << "\n"
           << "degree: " << graph::degree_of(g) << "\n"
           << "gc filter: " << yes(graph::passes_gc_filter(g)) << "\n";
  return kExitOk;
}

int graph_diff(Output& out, const std::string& arg) {
  graph::Graph g = load_graph(arg);
  graph::GraVector d = gc::class_differential(gc::class_reduce(graph::GraVector::from_graph(g)));
  out.doc = {{"graph", graph::to_text(g)}, {"arity", d.arity()}, {"differential", gra_vector_json(d)}};
  out.text << "d[" << graph::to_text(g) << "] = " << d.render() << "\n";
  return kExitOk;
}

int graph_cocycle(Output& out, const std::string& arg, bool full) {
  graph::Graph g = load_graph(arg);
  gc::BasisOptions opts;
  opts.gc_filter = !full;
  gc::CocycleReport r = gc::classify_cocycle(g, opts);
  out.doc = {{"graph", graph::to_text(g)}, {"cocycle", r.cocycle}, {"exact", r.exact}, {"zero", r.zero}};
  out.text << "cocycle: " << yes(r.cocycle) << ", exact: " << yes(r.exact);
  if (r.zero) out.text << " (symmetrization vanishes)";
  out.text << "\n";
  return kExitOk;
}

int gc_cohomology(Output& out, int arity, int degree, bool tadpoles, bool full) {
  gc::BasisOptions opts;
  opts.gc_filter = !full;
  opts.allow_tadpoles = tadpoles;
  gc::CohomologyReport r = gc::cohomology(arity, degree, opts);
  out.doc = {{"arity", r.arity},         {"degree", r.degree},       {"basis_size", r.basis_size},
             {"kernel_dim", r.kernel_dim}, {"image_dim", r.image_dim}, {"cohomology_dim", r.cohomology_dim}};
  out.text << "arity " << r.arity << ", degree " << r.degree << "\n"
           << "basis " << r.basis_size << ", kernel " << r.kernel_dim << ", image " << r.image_dim << "\n"
           << "cohomology: " << r.cohomology_dim << "\n";
  return kExitOk;
}

// gra act: args file {"d": 2, "cutoff": 3, "args": ["t1*xi1", ...]}
int gra_act(Output& out, const std::string& graph_arg, const std::string& args_arg) {
  graph::Graph g = load_graph(graph_arg);
  Json a;
  try {
    a = Json::parse(read_arg(args_arg));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("args: ") + e.what());
  }
  if (!a.contains("d") || !a.contains("args")) throw std::invalid_argument("args needs fields d and args");
  int d = a["d"].get<int>();
  int cutoff = a.value("cutoff", 3);
  poly::Frame f = poly::make_frame(d, cutoff);
  std::vector<poly::Polyvector> args;
  for (const auto& s : a["args"]) args.push_back(symalg::parse(f.table, s.get<std::string>()));
  if (static_cast<int>(args.size()) != g.n) throw std::invalid_argument("need one argument per vertex");
  poly::Polyvector r = poly::act(f, g, args);
  out.doc = {{"graph", graph::to_text(g)}, {"d", d}, {"cutoff", cutoff}, {"result", r.render()}};
  out.text << r.render() << "\n";
  return kExitOk;
}

// wheel

int wheel_check(Output& out, int max_vertices) {
  wheel::WheelReport r = wheel::check_wheels_only(max_vertices);
  Json entries = Json::array();
  out.text << "graphs examined: " << r.graphs_examined << ", pairs: " << r.pairs_examined << "\n";
  for (const auto& e : r.entries) {
    std::string canon = graph::to_text(graph::iso_canonical(e.graph).graph);
    entries.push_back({{"graph", graph::to_text(e.graph)},
                       {"canonical", canon},
                       {"orientations", e.orientations},
                       {"is_wheel", e.is_wheel}});
    out.text << graph::to_text(e.graph) << "  orientations " << e.orientations << "  wheel " << yes(e.is_wheel) << "\n";
  }
  out.doc = {{"max_vertices", r.max_vertices},
             {"graphs_examined", r.graphs_examined},
             {"pairs_examined", r.pairs_examined},
             {"entries", entries},
             {"wheels_only", r.ok()}};
  out.text << "wheels only: " << yes(r.ok()) << "\n";
  if (!r.ok())
    for (const auto& e : r.entries)
      if (e.is_wheel != (e.orientations > 0) || (e.is_wheel && e.orientations != 2)) {
        out.doc["counterexample"] = graph::to_text(e.graph);
        out.text << "counterexample: " << graph::to_text(e.graph) << "\n";
        break;
      }
  return r.ok() ? kExitOk : kExitFail;
}

int wheel_theorem(Output& out, int d, int pairs, int max_vertices, std::uint64_t seed) {
  suites::WheelTheoremReport r = suites::wheel_theorem(d, 3, pairs, seed, max_vertices);
  out.doc = {{"d", r.d},
             {"truncation", r.N},
             {"seed", seed},
             {"pairs", r.pairs},
             {"determined", r.determined},
             {"proportional", r.proportional},
             {"constant", r.constant},
             {"ratio", r.determined ? Json(str(r.ratio)) : Json(nullptr)},
             {"nonwheel_tested", r.nonwheel_tested},
             {"nonwheel_zero", r.nonwheel_zero},
             {"pass", r.pass()}};
  out.text << "d " << r.d << ", truncation " << r.N << ", pairs " << r.pairs << ", determined " << r.determined << "\n";
  if (r.determined) out.text << "ratio: " << str(r.ratio) << (r.constant ? "" : " (not constant)") << "\n";
  out.text << "non-wheel classes: " << r.nonwheel_tested << ", all zero: " << yes(r.nonwheel_zero) << "\n";
  out.text << (r.pass() ? "PASS" : "FAIL") << "\n";
  if (!r.pass()) {
    out.doc["counterexample"] = r.failure;
    out.text << "counterexample: " << r.failure << "\n";
  }
  return r.pass() ? kExitOk : kExitFail;
}

// fedosov

int fedosov_verify(Output& out, int d, int trunc, int trials, std::uint64_t seed) {
  suites::SuiteReport r = suites::fedosov_suite(d, trunc, seed, trials);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"pass", c.pass}, {"instances", c.instances}};
    if (!c.pass) j["counterexample"] = c.failure;
    checks.push_back(j);
    out.text << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.instances << ")\n";
    if (!c.pass) out.text << "  counterexample: " << c.failure << "\n";
  }
  out.doc = {{"d", d}, {"truncation", trunc}, {"seed", seed}, {"trials", trials}, {"checks", checks}, {"pass", r.pass()}};
  return r.pass() ? kExitOk : kExitFail;
}

// grt

int grt_verify(Output& out, const std::string& expr, const std::string& relation, int cap) {
  lie::LieElement s = lie::parse(read_arg(expr), grt::xy_alphabet(), cap);
  Json checks = Json::array();
  bool ok = true;
  out.text << "element: " << s.render() << "\n";
  auto report = [&](const std::string& name, bool pass, const std::string& residual) {
    Json j = {{"relation", name}, {"pass", pass}};
    if (!pass) j["residual"] = residual;
    checks.push_back(j);
    out.text << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) out.text << "  residual: " << residual << "\n";
    ok = ok && pass;
  };
  bool all = relation == "all";
  if (all || relation == "antisym") {
    lie::LieElement r = grt::antisymmetry_residual(s);
    report("antisym", r.is_zero(), r.render());
  }
  if (all || relation == "hexagon") {
    lie::LieElement r = grt::hexagon_residual(s);
    report("hexagon", r.is_zero(), r.render());
  }
  if (all || relation == "pentagon") {
    bool pass = grt::pentagon_check(s, cap);
    std::string residual;
    if (!pass) residual = grt::pentagon_residual(s, grt::TnQuotient(4, cap)).render();
    report("pentagon", pass, residual);
  }
  out.doc = {{"element", s.render()}, {"degree_cap", cap}, {"checks", checks}, {"pass", ok}};
  return ok ? kExitOk : kExitFail;
}

// chern / series

std::vector<long> parse_degrees(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad degree: " + item);
    out.push_back(v);
  }
  return out;
}

int chern_ci(Output& out, int d, int r, const std::string& degrees, int max_n) {
  chern::CompleteIntersection ci{d, r, parse_degrees(degrees)};
  chern::ChernTable t = chern::chern_table(ci, max_n);
  Json ch = Json::array(), grid = Json::array();
  out.text << "canonical degree: " << t.canonical_degree << "\n"
           << "calabi-yau: " << yes(t.calabi_yau) << "\n";
  for (std::size_t k = 0; k < t.ch.size(); ++k) {
    ch.push_back({{"n", k + 1}, {"coefficient", str(t.ch[k])}});
    out.text << "ch_" << k + 1 << ": " << str(t.ch[k]) << "\n";
  }
  for (const auto& c : t.grid) {
    grid.push_back({{"n", c.n}, {"q", c.q}, {"nontrivial", c.nontrivial}});
    out.text << "n=" << c.n << " q=" << c.q << ": " << (c.nontrivial ? "nontrivial" : "trivial") << "\n";
  }
  const char* hodge = "not computed; see Brueckmann's explicit formulas for twisted Hodge numbers of complete intersections";
  out.text << "twisted Hodge numbers: " << hodge << "\n";
  out.doc = {{"d", d},   {"r", r},       {"degrees", ci.degrees},
             {"canonical_degree", t.canonical_degree}, {"calabi_yau", t.calabi_yau},
             {"ch", ch}, {"grid", grid}, {"twisted_hodge", hodge}};
  return kExitOk;
}

int series_qrelation(Output& out, int cutoff) {
  bool rel = chern::verify_q_relation(cutoff);
  int adm_cut = std::min(cutoff, 12);
  bool adm = adm_cut >= 2 && chern::admissible_genus(symalg::q_series(adm_cut)) &&
             chern::admissible_genus(symalg::q_tilde_series(adm_cut));
  symalg::Series q = symalg::q_series(cutoff);
  Json coeffs = Json::array();
  out.text << "q:";
  for (int k = 0; k <= cutoff; ++k) {
    coeffs.push_back(str(q[k]));
    if (q[k] != 0) out.text << " [t^" << k << "] " << str(q[k]);
  }
  out.text << "\n"
           << "q relation to t^" << cutoff << ": " << (rel ? "PASS" : "FAIL") << "\n";
  if (adm_cut >= 2) out.text << "admissible q, q~ to t^" << adm_cut << ": " << (adm ? "PASS" : "FAIL") << "\n";
  out.doc = {{"cutoff", cutoff}, {"q", coeffs}, {"relation", rel}};
  if (adm_cut >= 2) out.doc["admissible_cutoff"] = adm_cut, out.doc["admissible"] = adm;
  bool ok = rel && (adm_cut < 2 || adm);
  out.doc["pass"] = ok;
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph complex, polyvector and jet-scale verification toolkit", "gca"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--seed", seed, "Seed for randomized checks");

  std::function<int(Output&)> action;
  std::string graph_arg, args_arg;
  bool full = false, tadpoles = false;

  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities")->require_subcommand(1);
  auto* canon = graph_cmd->add_subcommand("canon", "Canonical isomorphism-class form");
  canon->add_option("--graph,graph", graph_arg, "Graph file or inline text")->required();
  canon->callback([&] { action = [&](Output& o) { return graph_canon(o, graph_arg); }; });
  auto* diff = graph_cmd->add_subcommand("diff", "Differential of the symmetrized graph");
  diff->add_option("--graph,graph", graph_arg, "Graph file or inline text")->required();
  diff->callback([&] { action = [&](Output& o) { return graph_diff(o, graph_arg); }; });
  auto* gcoc = graph_cmd->add_subcommand("cocycle", "Closed / exact test");
  gcoc->add_option("--graph,graph", graph_arg, "Graph file or inline text")->required();
  gcoc->add_flag("--full", full, "Use the full complex instead of the GC filter");
  gcoc->callback([&] { action = [&](Output& o) { return graph_cocycle(o, graph_arg, full); }; });

  int arity = 0, degree = 0;
  auto* gc_cmd = app.add_subcommand("gc", "Graph complex")->require_subcommand(1);
  auto* coh = gc_cmd->add_subcommand("cohomology", "Cohomology of one (arity, degree) window");
  coh->add_option("--arity", arity, "Vertex count")->required()->check(CLI::Range(1, 7));
  coh->add_option("--degree", degree, "Degree 2n-2-e")->required();
  coh->add_flag("--tadpoles", tadpoles, "Allow loops");
  coh->add_flag("--full", full, "Use the full complex instead of the GC filter");
  coh->callback([&] { action = [&](Output& o) { return gc_cohomology(o, arity, degree, tadpoles, full); }; });
  auto* coc = gc_cmd->add_subcommand("cocycle", "Closed / exact test");
  coc->add_option("--graph,graph", graph_arg, "Graph file or inline text")->required();
  coc->add_flag("--full", full, "Use the full complex instead of the GC filter");
  coc->callback([&] { action = [&](Output& o) { return graph_cocycle(o, graph_arg, full); }; });

  auto* gra_cmd = app.add_subcommand("gra", "Action on polyvector fields")->require_subcommand(1);
  auto* act = gra_cmd->add_subcommand("act", "Evaluate a graph on polyvectors");
  act->add_option("--graph", graph_arg, "Graph file or inline text")->required();
  act->add_option("--args", args_arg, "JSON file {d, cutoff, args}")->required();
  act->callback([&] { action = [&](Output& o) { return gra_act(o, graph_arg, args_arg); }; });

  int max_vertices = 6, d = 2, pairs = 5;
  auto* wheel_cmd = app.add_subcommand("wheel", "Wheel combinatorics")->require_subcommand(1);
  auto* wcheck = wheel_cmd->add_subcommand("check", "Valid orientations exist only on wheels");
  wcheck->add_option("--max-vertices", max_vertices, "Largest vertex count")->check(CLI::Range(4, 8));
  wcheck->callback([&] { action = [&](Output& o) { return wheel_check(o, max_vertices); }; });
  auto* wthm = wheel_cmd->add_subcommand("theorem", "Wheel(3) against the contraction on random jets");
  wthm->add_option("--d", d, "Dimension")->check(CLI::Range(1, 3));
  wthm->add_option("--pairs", pairs, "Random (jet, polyvector) pairs")->check(CLI::Range(1, 100));
  wthm->add_option("--max-vertices", max_vertices, "Non-wheel scan bound (0 skips)")->check(CLI::Range(0, 6));
  wthm->callback([&] { action = [&](Output& o) { return wheel_theorem(o, d, pairs, max_vertices, seed); }; });

  int trunc = 4, trials = 20;
  auto* fed = app.add_subcommand("fedosov", "Jet-scale Fedosov identities")->require_subcommand(1);
  auto* fver = fed->add_subcommand("verify", "Flatness, Atiyah, psi and Koszul checks");
  fver->add_option("--d", d, "Dimension")->required()->check(CLI::Range(1, 3));
  fver->add_option("--trunc", trunc, "t-weight truncation")->required()->check(CLI::Range(3, 4));
  fver->add_option("--trials", trials, "Random instances per identity")->check(CLI::Range(1, 1000));
  fver->callback([&] { action = [&](Output& o) { return fedosov_verify(o, d, trunc, trials, seed); }; });

  std::string element, relation = "all";
  int cap = 4;
  auto* grt_cmd = app.add_subcommand("grt", "grt relations")->require_subcommand(1);
  auto* gver = grt_cmd->add_subcommand("verify", "Check a Lie element in x, y");
  gver->add_option("--element", element, "Lie expression or file")->required();
  gver->add_option("--relation", relation, "Relation")->check(CLI::IsMember({"antisym", "hexagon", "pentagon", "all"}));
  gver->add_option("--degree-cap", cap, "Degree cap")->check(CLI::Range(1, 4));
  gver->callback([&] { action = [&](Output& o) { return grt_verify(o, element, relation, cap); }; });

  int r = 1, max_n = 3;
  std::string degrees;
  auto* chern_cmd = app.add_subcommand("chern", "Complete intersections")->require_subcommand(1);
  auto* ci = chern_cmd->add_subcommand("ci", "Chern character table");
  ci->add_option("--d", d, "Dimension")->required()->check(CLI::NonNegativeNumber);
  ci->add_option("--r", r, "Number of hypersurfaces")->required()->check(CLI::PositiveNumber);
  ci->add_option("--degrees", degrees, "Comma-separated degrees")->required();
  ci->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::Range(1, 40));
  ci->callback([&] { action = [&](Output& o) { return chern_ci(o, d, r, degrees, max_n); }; });

  int cutoff = 20;
  auto* series_cmd = app.add_subcommand("series", "Series identities")->require_subcommand(1);
  auto* qrel = series_cmd->add_subcommand("qrelation", "q against q~ and admissibility");
  qrel->add_option("--cutoff", cutoff, "t-adic cutoff")->check(CLI::Range(0, 20));
  qrel->callback([&] { action = [&](Output& o) { return series_qrelation(o, cutoff); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.json = json;
  int code = kExitOk;
  try {
    code = action(out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (json) {
    std::string command;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      command += (command.empty() ? "" : " ") + sub->get_name();
    }
    Json doc = {{"schema_version", kSchemaVersion}, {"command", command}};
    for (auto& [k, v] : out.doc.items()) doc[k] = v;
    doc["exit_code"] = code;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return code;
}
