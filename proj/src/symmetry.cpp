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

#include "coarsecolor/symmetry.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace coarsecolor {

MotionReport motion_report(const Metric& metric, const Permutation& f) {
  const Graph& g = metric.graph();
  if (f.size() != g.vertex_count()) {
    throw std::invalid_argument("permutation size does not match graph");
  }
  MotionReport report;
  report.displacement.resize(f.size());
  for (Vertex x = 0; x < f.size(); ++x) {
    auto d = metric.distance(x, f(x));
    if (!d) throw std::invalid_argument("automorphism moves a vertex to another component");
    report.displacement[x] = *d;
    if (*d > 0) ++report.motion;
    report.geometric_motion = std::max(report.geometric_motion, *d);
  }
  return report;
}

GroupMotion group_motion(const Metric& metric,
                         const std::vector<Permutation>& group) {
  GroupMotion gm;
  gm.order = group.size();
  for (const auto& f : group) {
    if (f.is_identity()) continue;
    auto r = motion_report(metric, f);
    if (!gm.motion || r.motion < *gm.motion) gm.motion = r.motion;
    gm.geometric_motion = std::max(gm.geometric_motion, r.geometric_motion);
  }
  return gm;
}

GroupMotion graph_motion(const Metric& metric, const VertexColors& colors,
                         const SearchBudget& budget) {
  AutomorphismSearch search(metric, colors);
  return group_motion(metric, search.enumerate({}, budget));
}

std::vector<Permutation> stabilizer(const Metric& metric, Vertex x,
                                    const VertexColors& colors,
                                    const SearchBudget& budget) {
  metric.graph().check_vertex(x);
  AutomorphismSearch search(metric, colors);
  const Edge fix[] = {{x, x}};
  return search.enumerate(fix, budget);
}

bool is_distinguishing(const Metric& metric, const Coloring& phi,
                       const SearchBudget& budget) {
  if (phi.size() != metric.graph().vertex_count()) {
    throw std::invalid_argument("coloring length does not match graph");
  }
  AutomorphismSearch search(metric, colors_from_binary(phi));
  return !search.has_nontrivial(budget);
}

std::size_t max_geometric_motion(const AutomorphismSearch& search,
                                 const SearchBudget& budget) {
  const Metric& metric = search.metric();
  auto rep = search.orbits(budget);
  std::size_t best = 0;
  for (Vertex x = 0; x < rep.size(); ++x) {
    if (rep[x] != x) continue;
    std::vector<Vertex> orbit;
    for (Vertex v = x; v < rep.size(); ++v) {
      if (rep[v] == x) orbit.push_back(v);
    }
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      auto dist = metric.distances_from(orbit[i]);
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        if (dist[orbit[j]] == kUnreachable) {
          throw std::invalid_argument("orbit spans two components");
        }
        best = std::max(best, static_cast<std::size_t>(dist[orbit[j]]));
      }
    }
  }
  return best;
}

CoarseBoundReport check_coarse_bound(const Metric& metric,
                                     const VertexColors& colors,
                                     std::size_t bound,
                                     const SearchBudget& budget,
                                     std::size_t max_violators) {
  AutomorphismSearch search(metric, colors);
  CoarseBoundReport report;
  report.bound = bound;
  auto rep = search.orbits(budget);
  const std::size_t n = rep.size();
  for (Vertex x = 0; x < n; ++x) {
    auto dist = metric.distances_from(x);
    for (Vertex y = x + 1; y < n; ++y) {
      if (rep[x] != rep[y]) continue;
      if (dist[y] == kUnreachable) {
        throw std::invalid_argument("orbit spans two components");
      }
      const auto d = static_cast<std::size_t>(dist[y]);
      report.max_geometric_motion = std::max(report.max_geometric_motion, d);
      if (d > bound && report.violators.size() < max_violators) {
        const Edge pair[] = {{x, y}};
        auto witness = search.find_one(pair, budget);
        if (!witness) throw std::logic_error("orbit pair without witness");
        report.violators.push_back({x, y, d, std::move(*witness)});
      }
    }
  }
  report.pass = report.max_geometric_motion <= bound;
  return report;
}

DistinguishingSearchResult search_distinguishing_2coloring(
    const Metric& metric, SearchMode mode, std::size_t attempts,
    std::uint64_t seed, const SearchBudget& budget) {
  const std::size_t n = metric.graph().vertex_count();
  DistinguishingSearchResult result;
  if (mode == SearchMode::kExhaustive) {
    if (n >= 63 || (std::uint64_t{1} << n) > attempts) {
      std::ostringstream msg;
      msg << "exhaustive search over 2^" << n << " colorings exceeds budget "
          << attempts;
      throw BudgetExceeded(msg.str());
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    Coloring phi(n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      for (std::size_t v = 0; v < n; ++v) phi[v] = (bits >> v) & 1U;
      ++result.tried;
      if (is_distinguishing(metric, phi, budget)) {
        result.status = DistinguishingSearchResult::Status::kFound;
        result.coloring = phi;
        return result;
      }
    }
    result.status = DistinguishingSearchResult::Status::kNone;
    return result;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Coloring phi(n);
  for (std::size_t t = 0; t < attempts; ++t) {
    for (auto& c : phi) c = coin(rng) ? 1 : 0;
    ++result.tried;
    if (is_distinguishing(metric, phi, budget)) {
      result.status = DistinguishingSearchResult::Status::kFound;
      result.coloring = phi;
      return result;
    }
  }
  result.status = DistinguishingSearchResult::Status::kUnknown;
  return result;
}

MotionLemmaReport motion_lemma_check(const Metric& metric, std::size_t trials,
                                     std::uint64_t seed,
                                     const SearchBudget& budget) {
  AutomorphismSearch search(metric);
  auto group = search.enumerate({}, budget);
  auto gm = group_motion(metric, group);
  MotionLemmaReport report;
  report.motion = gm.motion;
  report.group_order = group.size();
  const BigInt squared = BigInt(group.size()) * group.size();
  if (!gm.motion) {
    report.hypothesis_met = true;  // 2^inf >= 1
  } else {
    report.hypothesis_met =
        boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(*gm.motion)) >=
        squared;
  }
  if (!report.hypothesis_met) return report;

  const std::size_t n = metric.graph().vertex_count();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Coloring phi(n);
  for (std::size_t t = 1; t <= trials; ++t) {
    for (auto& c : phi) c = coin(rng) ? 1 : 0;
    report.samples = t;
    // Aut(g, phi) = {f in Aut(g) : phi o f = phi}.
    bool only_identity = std::none_of(group.begin(), group.end(), [&](const auto& f) {
      return !f.is_identity() && preserves_coloring(f, phi);
    });
    if (only_identity) {
      report.samples_to_success = t;
      report.coloring = phi;
      break;
    }
  }
  return report;
}

Permutation project_automorphism(const Metric& metric, const Net& net,
                                 const QuotientGraph& quotient,
                                 const RadiusSelection& sel,
                                 const Coloring& phi, const Permutation& f) {
  const Graph& g = metric.graph();
  if (!is_automorphism(g, f) || !preserves_coloring(f, phi)) {
    throw ProjectionError("map is not a color-preserving automorphism");
  }
  std::vector<Vertex> image(net.members.size());
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    const Vertex fy = f(net.members[i]);
    std::optional<std::size_t> hit = net.index_of(fy);
    if (!hit) {
      for (Vertex w : g.neighbors(fy)) {
        if (auto j = net.index_of(w)) {
          if (hit) throw ProjectionError("two net vertices next to f(y)");
          hit = j;
        }
      }
    }
    if (!hit) {
      std::ostringstream msg;
      msg << "no net vertex within distance 1 of f(" << net.members[i]
          << ") = " << fy;
      throw ProjectionError(msg.str());
    }
    image[i] = static_cast<Vertex>(*hit);
  }
  std::vector<Vertex> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ProjectionError("projection is not injective on the net");
  }
  Permutation projected(std::move(image));
  if (!is_automorphism(quotient.graph, projected)) {
    throw ProjectionError("projection is not a quotient automorphism");
  }
  const auto labels = code_labels(induced_code(metric, net, phi, sel));
  if (!preserves_colors(projected, labels)) {
    throw ProjectionError("projection does not preserve the induced code");
  }
  return projected;
}

}  // namespace coarsecolor
