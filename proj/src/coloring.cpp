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

#include "coarsecolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "coarsecolor/symmetry.hpp"

namespace coarsecolor {

RadiusSelection ab_sets(std::size_t R) {
  if (R < 5 || R % 2 == 0) {
    std::ostringstream msg;
    msg << "R must be odd and >= 5 (got " << R << ")";
    throw std::invalid_argument(msg.str());
  }
  RadiusSelection sel;
  sel.R = R;
  for (std::size_t n = 2; n <= (R - 1) / 2; ++n) sel.A.push_back(2 * n);
  for (std::size_t n = 1; n <= (R - 1) / 2; ++n) sel.B.push_back(2 * n + 1);
  return sel;
}

bool capacity_inequality(const std::vector<BigInt>& sigma,
                         const std::vector<BigInt>& beta, std::size_t R) {
  BigInt product = 1;
  for (std::size_t r = 3; r <= R; r += 2) product *= sigma.at(r) + 1;
  return product > beta.at(4 * R + 1);
}

namespace {

BigInt capacity_margin(const GrowthProfile& p, std::size_t R) {
  BigInt product = 1;
  for (std::size_t r = 3; r <= R; r += 2) product *= BigInt(p.sigma[r]) + 1;
  return product - BigInt(p.beta[4 * R + 1]);
}

// Vertices whose capacity inequality matters for R in the given mode.
std::vector<Vertex> checked_points(const Graph& g, std::size_t R,
                                   RadiusMode mode,
                                   const std::vector<std::int32_t>& to_boundary) {
  std::vector<Vertex> points;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (mode == RadiusMode::kInterior && !to_boundary.empty()) {
      std::int32_t d = to_boundary[x];
      if (d != kUnreachable && static_cast<std::size_t>(d) <= 4 * R + 1) continue;
    }
    points.push_back(x);
  }
  return points;
}

struct Worst {
  std::optional<Vertex> vertex;
  BigInt margin;
};

Worst worst_margin(const Metric& metric, std::size_t R,
                   const std::vector<Vertex>& points) {
  Worst w;
  for (Vertex x : points) {
    BigInt m = capacity_margin(metric.growth_profile(x, 4 * R + 1), R);
    if (!w.vertex || m < w.margin) {
      w.vertex = x;
      w.margin = m;
    }
  }
  return w;
}

std::vector<std::int32_t> boundary_distances(const Graph& g,
                                             RadiusMode mode,
                                             const std::vector<Vertex>& boundary) {
  if (mode != RadiusMode::kInterior || boundary.empty()) return {};
  return bfs_distances(g, std::span<const Vertex>(boundary));
}

}  // namespace

std::size_t choose_R(const Metric& metric, RadiusMode mode,
                     const std::vector<Vertex>& boundary, std::size_t cap) {
  if (mode == RadiusMode::kFormula) {
    throw std::invalid_argument("formula mode takes a GrowthFormula");
  }
  const Graph& g = metric.graph();
  if (!g.is_connected()) throw GraphError("choose_R needs a connected graph");
  const auto to_boundary = boundary_distances(g, mode, boundary);
  Worst last;
  for (std::size_t R = 5; R <= cap; R += 2) {
    last = worst_margin(metric, R, checked_points(g, R, mode, to_boundary));
    if (!last.vertex || last.margin > 0) return R;
  }
  std::ostringstream msg;
  msg << "no odd R in [5, " << cap << "] satisfies the capacity inequality";
  if (last.vertex) msg << "; worst vertex " << *last.vertex << " (margin " << last.margin << ")";
  throw RadiusError(msg.str(), last.vertex);
}

namespace {

bool formula_capacity(const GrowthFormula& formula, std::size_t R) {
  BigInt product = 1;
  for (std::size_t r = 3; r <= R; r += 2) product *= formula.sigma(r) + 1;
  return product > formula.beta(4 * R + 1);
}

}  // namespace

std::size_t choose_R(const GrowthFormula& formula, std::size_t cap) {
  for (std::size_t R = 5; R <= cap; R += 2) {
    if (formula_capacity(formula, R)) return R;
  }
  std::ostringstream msg;
  msg << "no odd R in [5, " << cap << "] satisfies the capacity inequality for "
      << formula.name;
  throw RadiusError(msg.str(), std::nullopt);
}

std::size_t require_capacity(const Metric& metric, std::size_t R,
                             RadiusMode mode,
                             const std::vector<Vertex>& boundary) {
  ab_sets(R);
  const Graph& g = metric.graph();
  const auto points =
      checked_points(g, R, mode, boundary_distances(g, mode, boundary));
  Worst w = worst_margin(metric, R, points);
  if (w.vertex && w.margin <= 0) {
    std::ostringstream msg;
    msg << "R=" << R << " fails the capacity inequality at vertex "
        << *w.vertex << " (margin " << w.margin << ")";
    throw RadiusError(msg.str(), w.vertex);
  }
  return points.size();
}

PartialColoring build_psi(const Metric& metric, const Net& net,
                          const RadiusSelection& sel) {
  if (net.R != sel.R) throw std::invalid_argument("net radius differs from R");
  const Graph& g = metric.graph();
  auto dist = bfs_distances(g, std::span<const Vertex>(net.members));
  const std::set<std::size_t> A(sel.A.begin(), sel.A.end());
  const std::set<std::size_t> B(sel.B.begin(), sel.B.end());
  PartialColoring psi(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (dist[x] == kUnreachable) {
      psi[x] = 1;
      continue;
    }
    const auto d = static_cast<std::size_t>(dist[x]);
    if (d <= 1) psi[x] = 0;
    else if (d == 2) psi[x] = 1;
    else if (A.count(d)) psi[x] = 1;
    else if (B.count(d)) psi[x] = std::nullopt;
    else psi[x] = 1;  // outside D(Y, R)
  }
  return psi;
}

std::vector<std::vector<std::size_t>> sphere_capacities(
    const Metric& metric, const Net& net, const RadiusSelection& sel) {
  std::vector<std::vector<std::size_t>> caps;
  for (Vertex y : net.members) {
    auto p = metric.growth_profile(y, sel.R);
    std::vector<std::size_t> row;
    for (std::size_t r : sel.B) row.push_back(p.sigma[r]);
    caps.push_back(std::move(row));
  }
  return caps;
}

std::string to_string(CodeStrategy s) {
  return s == CodeStrategy::kTreeSiblings ? "tree-siblings" : "level-distinct";
}

namespace {

// Advances `code` to the next tuple in lexicographic order (last radius
// fastest) within capacity; false on wrap-around.
bool next_code(std::vector<std::size_t>& code,
               const std::vector<std::size_t>& cap) {
  for (std::size_t k = code.size(); k-- > 0;) {
    if (code[k] < cap[k]) {
      ++code[k];
      return true;
    }
    code[k] = 0;
  }
  return false;
}

}  // namespace

SphereCode build_xi(const Metric& metric, const Net& net,
                    const SpanningTree& tree, const RadiusSelection& sel,
                    CodeStrategy strategy) {
  const auto caps = sphere_capacities(metric, net, sel);
  const std::size_t m = net.members.size();
  if (tree.parent.size() != m) throw std::invalid_argument("tree does not match net");
  SphereCode xi;
  xi.radii = sel.B;
  xi.codes.assign(m, std::vector<std::size_t>(sel.B.size(), 0));
  std::vector<char> assigned(m, 0);
  assigned[tree.root] = 1;
  for (std::size_t y : tree.bfs_order) {
    if (y == tree.root) continue;
    std::set<std::vector<std::size_t>> taken;
    if (strategy == CodeStrategy::kTreeSiblings) {
      for (std::size_t s : tree.children[*tree.parent[y]]) {
        if (s != y && assigned[s]) taken.insert(xi.codes[s]);
      }
    } else {
      for (std::size_t s = 0; s < m; ++s) {
        if (s != y && assigned[s] && tree.depth[s] == tree.depth[y]) {
          taken.insert(xi.codes[s]);
        }
      }
    }
    std::vector<std::size_t> code(sel.B.size(), 0);
    bool found = false;
    while (next_code(code, caps[y])) {
      if (!taken.count(code)) {
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "net vertex " << net.members[y] << " has " << taken.size()
          << " rivals but too few admissible codes (" << to_string(strategy)
          << ")";
      throw CapacityError(msg.str(), net.members[y]);
    }
    xi.codes[y] = std::move(code);
    assigned[y] = 1;
  }
  return xi;
}

VertexColors code_labels(const SphereCode& code) {
  std::map<std::vector<std::size_t>, int> ids;
  for (const auto& c : code.codes) ids.emplace(c, 0);
  int next = 0;
  for (auto& [c, id] : ids) id = next++;
  VertexColors labels;
  for (const auto& c : code.codes) labels.push_back(ids[c]);
  return labels;
}

CodeAssignment assign_codes(const Metric& metric, const Net& net,
                            const QuotientGraph& quotient,
                            const SpanningTree& tree,
                            const RadiusSelection& sel,
                            const SearchBudget& budget) {
  Metric quotient_metric(quotient.graph);
  CodeAssignment out;
  out.strategy = CodeStrategy::kTreeSiblings;
  out.code = build_xi(metric, net, tree, sel, out.strategy);
  out.distinguishing =
      !AutomorphismSearch(quotient_metric, code_labels(out.code)).has_nontrivial(budget);
  if (out.distinguishing) return out;
  out.strategy = CodeStrategy::kLevelDistinct;
  out.code = build_xi(metric, net, tree, sel, out.strategy);
  out.distinguishing =
      !AutomorphismSearch(quotient_metric, code_labels(out.code)).has_nontrivial(budget);
  return out;
}

Coloring realize_phi(const Metric& metric, const Net& net,
                     const PartialColoring& psi, const SphereCode& xi) {
  const Graph& g = metric.graph();
  if (psi.size() != g.vertex_count()) {
    throw std::invalid_argument("partial coloring length does not match graph");
  }
  if (xi.codes.size() != net.members.size()) {
    throw std::invalid_argument("sphere code does not match net");
  }
  PartialColoring out = psi;
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    for (std::size_t k = 0; k < xi.radii.size(); ++k) {
      auto sphere = metric.sphere(net.members[i], xi.radii[k]);
      const std::size_t ones = xi.codes[i][k];
      if (ones > sphere.size()) {
        std::ostringstream msg;
        msg << "code " << ones << " exceeds |S(" << net.members[i] << ","
            << xi.radii[k] << ")| = " << sphere.size();
        throw CapacityError(msg.str(), net.members[i]);
      }
      for (std::size_t j = 0; j < sphere.size(); ++j) {
        out[sphere[j]] = j < ones ? 1 : 0;
      }
    }
  }
  Coloring phi(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!out[v]) throw std::logic_error("partial coloring left undefined off the B-spheres");
    phi[v] = *out[v];
  }
  return phi;
}

SphereCode induced_code(const Metric& metric, const Net& net,
                        const Coloring& phi, const RadiusSelection& sel) {
  if (phi.size() != metric.graph().vertex_count()) {
    throw std::invalid_argument("coloring length does not match graph");
  }
  SphereCode code;
  code.radii = sel.B;
  for (Vertex y : net.members) {
    auto dist = metric.distances_from(y);
    std::vector<std::size_t> row(sel.B.size(), 0);
    for (Vertex v = 0; v < dist.size(); ++v) {
      if (phi[v] != 1 || dist[v] == kUnreachable) continue;
      for (std::size_t k = 0; k < sel.B.size(); ++k) {
        if (static_cast<std::size_t>(dist[v]) == sel.B[k]) ++row[k];
      }
    }
    code.codes.push_back(std::move(row));
  }
  return code;
}

PipelineResult coarse_color_pipeline(const Metric& metric,
                                     const PipelineOptions& options) {
  const Graph& g = metric.graph();
  if (g.vertex_count() == 0) throw GraphError("pipeline needs a nonempty graph");
  g.check_vertex(options.anchor);
  PipelineResult result;
  if (g.vertex_count() == 1) {
    const std::size_t R = options.R.value_or(5);
    result.selection = ab_sets(R);
    result.phi = {0};
    result.psi = {0};
    result.net = Net{R, 0, {0}};
    result.quotient = QuotientGraph{Graph::from_edges(1, {}), {0}};
    result.tree = spanning_tree(result.quotient, 0);
    result.xi = SphereCode{result.selection.B,
                           {std::vector<std::size_t>(result.selection.B.size(), 0)}};
    result.report.R = R;
    result.report.net_size = 1;
    result.report.degenerate = true;
    result.report.quotient_distinguishing = true;
    result.report.bound = 4 * R + 1;
    if (options.verify) {
      result.report.verified = true;
      result.report.within_bound = true;
    }
    return result;
  }
  if (!g.is_connected()) throw GraphError("pipeline needs a connected graph");

  std::size_t R = 0;
  PipelineReport& report = result.report;
  if (options.mode == RadiusMode::kFormula) {
    if (!options.formula) throw std::invalid_argument("formula mode needs a formula");
    if (options.R) {
      R = *options.R;
      ab_sets(R);
      if (!formula_capacity(*options.formula, R)) {
        throw RadiusError("R=" + std::to_string(R) +
                              " fails the capacity inequality for " +
                              options.formula->name,
                          std::nullopt);
      }
    } else {
      R = choose_R(*options.formula, options.radius_cap);
    }
  } else if (options.R) {
    R = *options.R;
    report.capacity_checked_vertices =
        require_capacity(metric, R, options.mode, options.boundary);
  } else {
    R = choose_R(metric, options.mode, options.boundary, options.radius_cap);
    report.capacity_checked_vertices =
        require_capacity(metric, R, options.mode, options.boundary);
  }

  result.selection = ab_sets(R);
  result.net = build_net(metric, R, options.anchor);
  if (auto bad = check_net(metric, result.net); !bad.empty()) {
    throw std::logic_error("greedy net violates its contract: " + bad.front().what);
  }
  result.quotient = build_quotient(metric, result.net);
  result.tree = spanning_tree(result.quotient, *result.net.index_of(options.anchor));
  CodeAssignment codes = assign_codes(metric, result.net, result.quotient,
                                      result.tree, result.selection, options.budget);
  result.xi = codes.code;
  result.psi = build_psi(metric, result.net, result.selection);
  result.phi = realize_phi(metric, result.net, result.psi, result.xi);
  if (induced_code(metric, result.net, result.phi, result.selection) != result.xi) {
    throw std::logic_error("realized coloring does not induce its sphere code");
  }

  report.R = R;
  report.net_size = result.net.members.size();
  report.quotient_edges = result.quotient.graph.edge_count();
  report.strategy = codes.strategy;
  report.quotient_distinguishing = codes.distinguishing;
  report.bound = 4 * R + 1;

  const auto caps = sphere_capacities(metric, result.net, result.selection);
  bool first = true;
  for (std::size_t i = 0; i < result.net.members.size(); ++i) {
    BigInt codes_total = 1;
    for (std::size_t c : caps[i]) codes_total *= c + 1;
    const auto profile = metric.growth_profile(result.net.members[i], 4 * R + 1);
    BigInt margin = codes_total - BigInt(profile.beta[4 * R + 1]);
    if (first || margin < report.min_capacity_margin) report.min_capacity_margin = margin;
    first = false;
    if (i == result.tree.root) continue;
    std::size_t rivals = 0;
    if (codes.strategy == CodeStrategy::kTreeSiblings) {
      rivals = result.tree.children[*result.tree.parent[i]].size() - 1;
    } else {
      for (std::size_t s = 0; s < result.net.members.size(); ++s) {
        if (s != i && result.tree.depth[s] == result.tree.depth[i]) ++rivals;
      }
    }
    BigInt slack = codes_total - 1 - rivals;
    if (!report.min_code_slack || slack < *report.min_code_slack) {
      report.min_code_slack = slack;
    }
  }

  if (options.verify) {
    auto check = check_coarse_bound(metric, colors_from_binary(result.phi),
                                    report.bound, options.budget, 1);
    report.verified = true;
    report.max_geometric_motion = check.max_geometric_motion;
    report.within_bound = check.pass;
  }
  return result;
}

}  // namespace coarsecolor
