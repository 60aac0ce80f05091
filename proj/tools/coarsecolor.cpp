// Copyright 2026 The coarsecolor Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen, color, verify, export-dot, growth, autos.
//
// Exit codes:
//   0  success / check passed
//   1  invalid input or I/O failure
//   2  check failed (verify, growth)
//   3  capacity failure (forced R, or too few codes for some net vertex)
//   4  no admissible R up to the radius cap
//   5  parameter error (growth)
//   6  search or size budget exceeded
//   CLI11 usage errors keep CLI11's own nonzero codes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coarsecolor/automorphisms.hpp"
#include "coarsecolor/coloring.hpp"
#include "coarsecolor/generators.hpp"
#include "coarsecolor/graph.hpp"
#include "coarsecolor/growth.hpp"
#include "coarsecolor/io.hpp"
#include "coarsecolor/net.hpp"
#include "coarsecolor/symmetry.hpp"

namespace cc = coarsecolor;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kError = 1,
  kCheckFailed = 2,
  kCapacityFailure = 3,
  kNoValidR = 4,
  kParameterError = 5,
  kBudget = 6,
};

struct Globals {
  std::uint64_t seed = 0;
  std::size_t budget = 0;  // 0 = library defaults
  std::string output;
};

cc::SearchBudget search_budget(const Globals& g) {
  cc::SearchBudget b;
  if (g.budget) b.max_nodes = g.budget;
  return b;
}

std::size_t vertex_budget(const Globals& g) {
  return g.budget ? g.budget : cc::kDefaultVertexBudget;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw cc::DocumentError("cannot write " + g.output);
  out << text;
}

void write_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw cc::DocumentError("cannot write " + path);
  out << report.dump(2) << "\n";
}

std::string big(const cc::BigInt& x) { return x.str(); }

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoul(item));
  }
  return out;
}

// "0,1,-,1": '-' or 'null' marks an undefined entry.
cc::PartialColoring parse_phi(const std::string& text) {
  cc::PartialColoring psi;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "-" || item == "null") psi.emplace_back();
    else if (item == "0" || item == "1") psi.emplace_back(item == "1" ? 1 : 0);
    else throw cc::DocumentError("bad color '" + item + "'");
  }
  return psi;
}

// K<n>, C<n>, P<n>, S<n> (star with n leaves); basepoint 0.
cc::PointedGraph factor_by_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad factor " + name);
  const std::size_t n = std::stoul(name.substr(1));
  switch (name[0]) {
    case 'K': return {cc::complete_graph(n), 0};
    case 'C': return {cc::cycle_graph(n), 0};
    case 'P': return {cc::path_graph(n), 0};
    case 'S': return {cc::star_graph(n), 0};
    default: throw std::invalid_argument("unknown factor " + name);
  }
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  std::size_t d = 3, depth = 2, n = 10, L = 3, N = 1, p = 2, q = 2, H = 1,
              rounds = 2;
  std::string factors = "K2,K2";
  std::string input;
  int a = 0, b = 1;
};

int run_gen(const GenArgs& a, const Globals& g) {
  cc::GraphDocument doc;
  const std::size_t vb = vertex_budget(g);
  if (a.family == "tree-ball") {
    doc.graph = cc::regular_tree_ball(a.d, a.depth, vb);
  } else if (a.family == "cycle") {
    doc.graph = cc::cycle_graph(a.n);
  } else if (a.family == "path") {
    doc.graph = cc::path_graph(a.n);
  } else if (a.family == "motion-example") {
    doc.graph = cc::motion_example(a.L);
  } else if (a.family == "counterexample") {
    doc.graph = cc::counterexample_graph(a.N, vb).graph;
  } else if (a.family == "dl") {
    doc.graph = cc::dl_graph(a.p, a.q, a.H, vb).graph;
  } else if (a.family == "free-product") {
    std::vector<cc::PointedGraph> factors;
    std::stringstream in(a.factors);
    std::string item;
    while (std::getline(in, item, ',')) factors.push_back(factor_by_name(item));
    doc.graph = cc::free_product_truncation(factors, a.rounds, vb);
  } else if (a.family == "gadget") {
    if (!a.input.empty()) {
      auto src = cc::read_document(a.input);
      if (!src.coloring) throw cc::DocumentError("gadget input needs a coloring");
      doc.graph = cc::gadget_substitute(src.graph, cc::to_total(*src.coloring));
    } else {
      const cc::Edge e[] = {{0, 1}};
      const cc::Coloring phi = {static_cast<std::uint8_t>(a.a),
                                static_cast<std::uint8_t>(a.b)};
      doc.graph = cc::gadget_substitute(cc::Graph::from_edges(2, e), phi);
    }
  } else {
    std::cerr << "unknown family: " << a.family << "\n";
    return kError;
  }
  emit(g, cc::serialize_document(doc));
  (g.output.empty() ? std::cerr : std::cout)
      << "vertices: " << doc.graph.vertex_count()
      << "\nedges: " << doc.graph.edge_count() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- color

struct ColorArgs {
  std::string input;
  std::optional<std::size_t> R;
  std::string mode = "strict";
  std::string formula;
  std::string boundary;
  cc::Vertex anchor = 0;
  std::size_t radius_cap = cc::kDefaultRadiusCap;
  bool verify = false;
  std::string report;
};

std::vector<cc::Vertex> resolve_boundary(const cc::Graph& g, const std::string& text) {
  std::vector<cc::Vertex> out;
  if (text.empty()) return out;
  if (text == "low-degree") {
    const std::size_t dmax = g.max_degree();
    for (cc::Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < dmax) out.push_back(v);
    }
    return out;
  }
  for (std::size_t v : parse_list(text)) {
    g.check_vertex(static_cast<cc::Vertex>(v));
    out.push_back(static_cast<cc::Vertex>(v));
  }
  return out;
}

int run_color(const ColorArgs& a, const Globals& g) {
  auto doc = cc::read_document(a.input);
  cc::Metric metric(doc.graph);
  cc::PipelineOptions opt;
  opt.R = a.R;
  opt.anchor = a.anchor;
  opt.radius_cap = a.radius_cap;
  opt.verify = a.verify;
  opt.budget = search_budget(g);
  if (a.mode == "strict") {
    opt.mode = cc::RadiusMode::kStrict;
  } else if (a.mode == "interior") {
    opt.mode = cc::RadiusMode::kInterior;
    opt.boundary = resolve_boundary(doc.graph, a.boundary);
  } else if (a.mode == "formula") {
    opt.mode = cc::RadiusMode::kFormula;
    if (a.formula.empty()) throw std::invalid_argument("--formula is required in formula mode");
    opt.formula = cc::formula_by_name(a.formula);
  } else {
    throw std::invalid_argument("unknown mode " + a.mode);
  }

  json report;
  report["input"] = a.input;
  report["mode"] = a.mode;
  cc::PipelineResult result;
  try {
    result = cc::coarse_color_pipeline(metric, opt);
  } catch (const cc::RadiusError& e) {
    const bool forced = a.R.has_value();
    report["status"] = forced ? "capacity-failure" : "no-valid-R";
    report["error"] = e.what();
    if (e.worst_vertex) report["worst_vertex"] = *e.worst_vertex;
    write_report(a.report, report);
    std::cerr << (forced ? "capacity failure: " : "no valid R: ") << e.what() << "\n";
    return forced ? kCapacityFailure : kNoValidR;
  } catch (const cc::CapacityError& e) {
    report["status"] = "capacity-failure";
    report["error"] = e.what();
    if (e.vertex) report["worst_vertex"] = *e.vertex;
    write_report(a.report, report);
    std::cerr << "capacity failure: " << e.what() << "\n";
    return kCapacityFailure;
  }

  const auto& r = result.report;
  cc::GraphDocument out{doc.graph, cc::to_partial(result.phi)};
  emit(g, cc::serialize_document(out));

  report["status"] = "success";
  report["R"] = r.R;
  report["net_size"] = r.net_size;
  report["net"] = result.net.members;
  report["quotient_edges"] = r.quotient_edges;
  report["strategy"] = cc::to_string(r.strategy);
  report["quotient_distinguishing"] = r.quotient_distinguishing;
  report["degenerate"] = r.degenerate;
  report["capacity_checked_vertices"] = r.capacity_checked_vertices;
  report["min_capacity_margin"] = big(r.min_capacity_margin);
  report["min_code_slack"] = r.min_code_slack ? json(big(*r.min_code_slack)) : json(nullptr);
  report["radii"] = result.xi.radii;
  report["codes"] = result.xi.codes;
  report["bound"] = r.bound;
  if (r.verified) {
    report["max_geometric_motion"] = r.max_geometric_motion;
    report["within_bound"] = r.within_bound;
  }
  write_report(a.report, report);

  std::ostream& text = g.output.empty() ? std::cerr : std::cout;
  text << "status: success" << (r.degenerate ? " (degenerate)" : "") << "\n"
       << "R: " << r.R << "\n"
       << "net size: " << r.net_size << "\n"
       << "quotient edges: " << r.quotient_edges << "\n"
       << "code strategy: " << cc::to_string(r.strategy) << "\n"
       << "quotient distinguishing: " << (r.quotient_distinguishing ? "yes" : "no") << "\n"
       << "min capacity margin: " << big(r.min_capacity_margin) << "\n";
  if (r.min_code_slack) text << "min code slack: " << big(*r.min_code_slack) << "\n";
  if (r.verified) {
    text << "max gm: " << r.max_geometric_motion << " (bound " << r.bound << ", "
         << (r.within_bound ? "pass" : "fail") << ")\n";
  }
  if (r.verified && !r.within_bound) return kCheckFailed;
  return kOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input;
  std::string coloring_file;
  std::string phi;
  std::optional<std::size_t> bound;
  std::string report;
};

cc::Coloring load_coloring(const cc::GraphDocument& doc, const std::string& file,
                           const std::string& inline_phi, bool required) {
  std::optional<cc::PartialColoring> psi;
  if (!inline_phi.empty()) psi = parse_phi(inline_phi);
  else if (!file.empty()) psi = cc::read_document(file).coloring;
  else psi = doc.coloring;
  if (!psi) {
    if (required) throw cc::DocumentError("no coloring given");
    return {};
  }
  if (psi->size() != doc.graph.vertex_count()) {
    throw cc::DocumentError("coloring length does not match vertex count");
  }
  return cc::to_total(*psi);
}

int run_verify(const VerifyArgs& a, const Globals& g) {
  auto doc = cc::read_document(a.input);
  cc::Metric metric(doc.graph);
  const auto phi = load_coloring(doc, a.coloring_file, a.phi, true);
  const auto budget = search_budget(g);
  const auto colors = cc::colors_from_binary(phi);

  const auto aut = cc::AutomorphismSearch(metric).group_order(budget);
  const auto aut_phi = cc::AutomorphismSearch(metric, colors).group_order(budget);
  json report;
  report["vertices"] = doc.graph.vertex_count();
  report["aut_order"] = big(aut);
  report["aut_phi_order"] = big(aut_phi);
  std::cout << "|Aut|: " << aut << "\n|Aut(phi)|: " << aut_phi << "\n";

  int code = kOk;
  if (a.bound) {
    auto check = cc::check_coarse_bound(metric, colors, *a.bound, budget);
    report["max_geometric_motion"] = check.max_geometric_motion;
    report["bound"] = check.bound;
    report["pass"] = check.pass;
    json violators = json::array();
    for (const auto& v : check.violators) {
      violators.push_back({{"from", v.from},
                           {"to", v.to},
                           {"distance", v.distance},
                           {"witness", v.witness.image()}});
    }
    report["violators"] = violators;
    std::cout << "max gm: " << check.max_geometric_motion << "\nbound: " << check.bound
              << "\nresult: " << (check.pass ? "pass" : "fail") << "\n";
    for (const auto& v : check.violators) {
      std::cout << "violator: " << v.from << " -> " << v.to << " (distance "
                << v.distance << ")\n";
    }
    if (!check.pass) code = kCheckFailed;
  } else {
    const auto gm = cc::max_geometric_motion(cc::AutomorphismSearch(metric, colors), budget);
    report["max_geometric_motion"] = gm;
    std::cout << "max gm: " << gm << "\n";
  }
  write_report(a.report, report);
  return code;
}

// ----------------------------------------------------------- export-dot

struct DotArgs {
  std::string input;
  std::string coloring_file;
  std::string phi;
  bool no_coloring = false;
};

int run_dot(const DotArgs& a, const Globals& g) {
  auto doc = cc::read_document(a.input);
  std::optional<cc::PartialColoring> psi;
  if (!a.phi.empty()) psi = parse_phi(a.phi);
  else if (!a.coloring_file.empty()) psi = cc::read_document(a.coloring_file).coloring;
  else if (!a.no_coloring) psi = doc.coloring;
  emit(g, cc::export_dot(doc.graph, psi));
  return kOk;
}

// --------------------------------------------------------------- growth

struct GrowthArgs {
  std::uint64_t delta = 3, Q = 0;
  std::size_t R = 5;
  std::string formula;
  std::string input;
  std::string radii;
  std::string epsilon = "1/2";
  std::size_t r_lo = 1, r_hi = 20;
  std::string report;
};

cc::GrowthSource growth_source(const GrowthArgs& a, std::unique_ptr<cc::Graph>& graph,
                               std::unique_ptr<cc::Metric>& metric) {
  if (!a.formula.empty()) return cc::formula_by_name(a.formula);
  if (a.input.empty()) throw cc::ParameterError("--formula or --input is required");
  graph = std::make_unique<cc::Graph>(cc::read_document(a.input).graph);
  metric = std::make_unique<cc::Metric>(*graph);
  return cc::GraphGrowthSource{metric.get(), {}, {}};
}

json point_json(const std::optional<cc::Vertex>& p) {
  return p ? json(*p) : json(nullptr);
}

int run_growth_claim(const GrowthArgs& a) {
  const cc::ClaimParameters params{a.delta, a.R, a.Q};
  auto r = cc::verify_claim_minimum(params);
  json report{{"delta", a.delta}, {"R", a.R}, {"Q", a.Q}, {"holds", r.holds},
              {"min", big(r.min_value)}, {"minimizers", r.minimizer_count},
              {"minimizers_with_properties", r.minimizers_with_properties}};
  std::cout << "min: " << r.min_value << "\nminimizers: " << r.minimizer_count
            << " (" << r.minimizers_with_properties << " with properties)\n";
  if (r.witness) {
    report["witness"] = r.witness->tuple;
    report["I"] = r.witness->index;
    std::cout << "witness: (";
    for (std::size_t i = 0; i < r.witness->tuple.size(); ++i) {
      std::cout << (i ? ", " : "") << r.witness->tuple[i];
    }
    std::cout << ") I=" << r.witness->index << "\n";
  }
  std::cout << "result: " << (r.holds ? "holds" : "fails") << "\n";
  write_report(a.report, report);
  return r.holds ? kOk : kCheckFailed;
}

int run_growth_prodspheres(const GrowthArgs& a) {
  std::unique_ptr<cc::Graph> graph;
  std::unique_ptr<cc::Metric> metric;
  auto source = growth_source(a, graph, metric);
  auto r = cc::prodspheres_check(source, a.R);
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"point", point_json(e.point)},
                       {"lhs", big(e.lhs)},
                       {"rhs_statement", big(e.rhs_statement)},
                       {"rhs_proof", big(e.rhs_proof)},
                       {"holds_statement", e.holds_statement},
                       {"holds_proof", e.holds_proof}});
  }
  const bool holds = r.holds_statement();
  write_report(a.report, {{"R", a.R}, {"holds", holds},
                          {"holds_proof_form", r.holds_proof()}, {"entries", entries}});
  if (r.entries.size() == 1) {
    const auto& e = r.entries.front();
    std::cout << "lhs: " << e.lhs << "\nrhs: " << e.rhs_statement
              << "\nrhs (squared-ball form): " << e.rhs_proof << "\n";
  } else {
    std::cout << "points checked: " << r.entries.size() << "\n";
  }
  std::cout << "squared-ball form: " << (r.holds_proof() ? "holds" : "fails") << "\n"
            << "result: " << (holds ? "holds" : "fails") << "\n";
  return holds ? kOk : kCheckFailed;
}

int run_growth_hypothesis(const GrowthArgs& a) {
  std::unique_ptr<cc::Graph> graph;
  std::unique_ptr<cc::Metric> metric;
  auto source = growth_source(a, graph, metric);
  auto radii = parse_list(a.radii);
  if (radii.empty()) throw cc::ParameterError("--radii is required");
  auto r = cc::hypothesis_lb_check(source, radii);
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"point", point_json(e.point)}, {"pass", e.pass},
                       {"first_failing_radius", e.first_failing_radius
                                                    ? json(*e.first_failing_radius)
                                                    : json(nullptr)}});
  }
  const bool ok = r.all_pass();
  write_report(a.report, {{"radii", radii}, {"pass", ok}, {"entries", entries}});
  for (const auto& e : r.entries) {
    if (e.first_failing_radius) {
      std::cout << "first failing radius";
      if (e.point) std::cout << " at " << *e.point;
      std::cout << ": " << *e.first_failing_radius << "\n";
      break;
    }
  }
  std::cout << "result: " << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kCheckFailed;
}

int run_growth_linear(const GrowthArgs& a) {
  std::unique_ptr<cc::Graph> graph;
  std::unique_ptr<cc::Metric> metric;
  auto source = growth_source(a, graph, metric);
  cc::Rational eps;
  try {
    eps = cc::Rational(a.epsilon);
  } catch (const std::exception&) {
    throw cc::ParameterError("bad epsilon " + a.epsilon);
  }
  auto r = cc::linear_bound_check(source, eps, a.r_lo, a.r_hi);
  write_report(a.report, {{"epsilon", a.epsilon}, {"r_lo", r.r_lo}, {"r_hi", r.r_hi},
                          {"holds_from", r.holds_from ? json(*r.holds_from) : json(nullptr)}});
  if (r.holds_from) std::cout << "holds from r = " << *r.holds_from << "\n";
  std::cout << "result: " << (r.holds_from ? "pass" : "fail") << "\n";
  return r.holds_from ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- autos

struct AutosArgs {
  std::string input;
  std::string coloring_file;
  std::string phi;
  bool list = false;
  std::size_t lemma_trials = 0;
  std::string report;
};

int run_autos(const AutosArgs& a, const Globals& g) {
  auto doc = cc::read_document(a.input);
  cc::Metric metric(doc.graph);
  const auto phi = load_coloring(doc, a.coloring_file, a.phi, false);
  const auto colors = phi.empty() ? cc::VertexColors{} : cc::colors_from_binary(phi);
  const auto budget = search_budget(g);
  cc::AutomorphismSearch search(metric, colors);
  const auto order = search.group_order(budget);
  const auto orbits = search.orbits(budget);
  const auto gm = cc::max_geometric_motion(search, budget);
  std::size_t orbit_count = 0;
  for (cc::Vertex v = 0; v < orbits.size(); ++v) orbit_count += orbits[v] == v;

  json report{{"order", big(order)}, {"orbits", orbits}, {"orbit_count", orbit_count},
              {"max_geometric_motion", gm}};
  std::cout << "|Aut|: " << order << "\norbits: " << orbit_count << "\nmax gm: " << gm
            << "\n";
  if (a.list) {
    auto group = search.enumerate({}, budget);
    auto motion = cc::group_motion(metric, group);
    json perms = json::array();
    for (const auto& f : group) perms.push_back(f.image());
    report["automorphisms"] = perms;
    report["motion"] = motion.motion ? json(*motion.motion) : json(nullptr);
    std::cout << "motion: ";
    if (motion.motion) std::cout << *motion.motion << "\n";
    else std::cout << "inf\n";
    for (const auto& f : group) {
      for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f(i);
      std::cout << "\n";
    }
  }
  if (a.lemma_trials) {
    auto lemma = cc::motion_lemma_check(metric, a.lemma_trials, g.seed, budget);
    report["lemma_hypothesis"] = lemma.hypothesis_met;
    report["lemma_samples"] = lemma.samples;
    report["lemma_success_at"] =
        lemma.samples_to_success ? json(*lemma.samples_to_success) : json(nullptr);
    if (lemma.coloring) report["lemma_coloring"] = *lemma.coloring;
    std::cout << "2^m >= |Aut|^2: " << (lemma.hypothesis_met ? "yes" : "no") << "\n";
    if (lemma.samples_to_success) {
      std::cout << "distinguishing sample found at trial " << *lemma.samples_to_success
                << " (seed " << g.seed << ")\n";
    } else if (lemma.hypothesis_met) {
      std::cout << "no distinguishing sample in " << lemma.samples << " trials\n";
    }
  }
  write_report(a.report, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse distinguishing 2-colorings of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for randomized steps");
  app.add_option("--budget", globals.budget,
                 "Search-node budget for automorphism search and vertex budget for generators");
  app.add_option("-o,--output", globals.output, "Output file (default stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph document");
  gen_cmd->add_option("family", gen.family,
                      "tree-ball | cycle | path | motion-example | counterexample | dl | "
                      "free-product | gadget")
      ->required();
  gen_cmd->add_option("--d", gen.d, "Tree degree");
  gen_cmd->add_option("--depth", gen.depth, "Tree depth");
  gen_cmd->add_option("--n", gen.n, "Cycle or path length");
  gen_cmd->add_option("--L", gen.L, "Ladder rungs");
  gen_cmd->add_option("--N", gen.N, "Counterexample levels");
  gen_cmd->add_option("--p", gen.p, "First tree branching");
  gen_cmd->add_option("--q", gen.q, "Second tree branching");
  gen_cmd->add_option("--H", gen.H, "Diestel-Leader height");
  gen_cmd->add_option("--factors", gen.factors, "Free product factors, e.g. K2,C3");
  gen_cmd->add_option("--rounds", gen.rounds, "Free product rounds");
  gen_cmd->add_option("--input", gen.input, "Colored graph for gadget substitution");
  gen_cmd->add_option("--a", gen.a, "Single-edge gadget: color of the first end")
      ->check(CLI::Range(0, 1));
  gen_cmd->add_option("--b", gen.b, "Single-edge gadget: color of the second end")
      ->check(CLI::Range(0, 1));

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Run the coloring pipeline");
  color_cmd->add_option("input", color.input, "Graph document")->required();
  color_cmd->add_option("--R", color.R, "Force the radius");
  color_cmd->add_option("--mode", color.mode, "strict | interior | formula");
  color_cmd->add_option("--formula", color.formula, "path | grid | treeD");
  color_cmd->add_option("--boundary", color.boundary,
                        "Boundary vertices (comma list or 'low-degree')");
  color_cmd->add_option("--anchor", color.anchor, "Net anchor vertex");
  color_cmd->add_option("--radius-cap", color.radius_cap, "Largest R tried");
  color_cmd->add_flag("--verify", color.verify, "Check the displacement bound");
  color_cmd->add_option("--report", color.report, "JSON report path");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring's symmetries");
  verify_cmd->add_option("input", verify.input, "Graph document")->required();
  verify_cmd->add_option("--coloring", verify.coloring_file, "Document holding the coloring");
  verify_cmd->add_option("--phi", verify.phi, "Inline coloring, e.g. 0,0,1");
  verify_cmd->add_option("--bound", verify.bound, "Displacement bound");
  verify_cmd->add_option("--report", verify.report, "JSON report path");

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write Graphviz text");
  dot_cmd->add_option("input", dot.input, "Graph document")->required();
  dot_cmd->add_option("--coloring", dot.coloring_file, "Document holding the coloring");
  dot_cmd->add_option("--phi", dot.phi, "Inline coloring; '-' marks undefined");
  dot_cmd->add_flag("--no-coloring", dot.no_coloring, "Ignore any embedded coloring");

  GrowthArgs growth;
  auto* growth_cmd = app.add_subcommand("growth", "Growth-condition checks");
  growth_cmd->require_subcommand(1);
  growth_cmd->add_option("--report", growth.report, "JSON report path");
  auto* claim_cmd = growth_cmd->add_subcommand("claim", "Constrained product minimum");
  claim_cmd->add_option("--delta", growth.delta)->required();
  claim_cmd->add_option("--R", growth.R)->required();
  claim_cmd->add_option("--Q", growth.Q)->required();
  auto* prod_cmd = growth_cmd->add_subcommand("prodspheres", "Sphere product inequality");
  auto* hyp_cmd = growth_cmd->add_subcommand("hypothesis", "beta(r) >= 2^(sqrt(r)/4)");
  auto* lin_cmd = growth_cmd->add_subcommand("linear", "eps * beta(r) > r");
  for (auto* c : {prod_cmd, hyp_cmd, lin_cmd}) {
    c->add_option("--formula", growth.formula, "path | grid | treeD");
    c->add_option("--input", growth.input, "Graph document");
  }
  prod_cmd->add_option("--R", growth.R)->required();
  hyp_cmd->add_option("--radii", growth.radii, "Comma-separated radii")->required();
  lin_cmd->add_option("--epsilon", growth.epsilon, "Rational, e.g. 1/10");
  lin_cmd->add_option("--r-lo", growth.r_lo);
  lin_cmd->add_option("--r-hi", growth.r_hi);

  AutosArgs autos;
  auto* autos_cmd = app.add_subcommand("autos", "Automorphism group summary");
  autos_cmd->add_option("input", autos.input, "Graph document")->required();
  autos_cmd->add_option("--coloring", autos.coloring_file, "Document holding the coloring");
  autos_cmd->add_option("--phi", autos.phi, "Inline coloring");
  autos_cmd->add_flag("--list", autos.list, "Print every automorphism");
  autos_cmd->add_option("--lemma-trials", autos.lemma_trials,
                        "Sample random colorings against the motion bound");
  autos_cmd->add_option("--report", autos.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen_cmd) return run_gen(gen, globals);
    if (*color_cmd) return run_color(color, globals);
    if (*verify_cmd) return run_verify(verify, globals);
    if (*dot_cmd) return run_dot(dot, globals);
    if (*autos_cmd) return run_autos(autos, globals);
    if (*growth_cmd) {
      if (*claim_cmd) return run_growth_claim(growth);
      if (*prod_cmd) return run_growth_prodspheres(growth);
      if (*hyp_cmd) return run_growth_hypothesis(growth);
      if (*lin_cmd) return run_growth_linear(growth);
    }
  } catch (const cc::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const cc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const cc::SizeBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const cc::InsufficientData& e) {
    std::cerr << "insufficient data: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
