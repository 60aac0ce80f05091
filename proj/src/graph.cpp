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

#include "coarsecolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace coarsecolor {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) result = saturating_mul(result, base);
  return result;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError("vertex count exceeds index range");
  }
  if (!labels.empty() && labels.size() != n) {
    throw GraphError("label count does not match vertex count");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside 0.."
          << (n == 0 ? 0 : n - 1);
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "loop edge at vertex " << u;
      throw GraphError(msg.str());
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    std::ostringstream msg;
    msg << "vertex " << v << " out of range (graph has " << adjacency_.size()
        << " vertices)";
    throw GraphError(msg.str());
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  check_vertex(v);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  auto dist = bfs_distances(*this, Vertex{0});
  return std::none_of(dist.begin(), dist.end(),
                      [](std::int32_t d) { return d == kUnreachable; });
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
  const Vertex sources[] = {source};
  return bfs_distances(g, std::span<const Vertex>(sources));
}

std::vector<std::int32_t> bfs_distances(const Graph& g,
                                        std::span<const Vertex> sources) {
  std::vector<std::int32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Metric::Metric(const Graph& g) : graph_(&g), cache_(g.vertex_count()) {}

std::span<const std::int32_t> Metric::distances_from(Vertex source) const {
  graph_->check_vertex(source);
  {
    std::lock_guard lock(mutex_);
    if (cache_[source]) return *cache_[source];
  }
  auto fresh = std::make_unique<std::vector<std::int32_t>>(
      bfs_distances(*graph_, source));
  std::lock_guard lock(mutex_);
  if (!cache_[source]) cache_[source] = std::move(fresh);
  return *cache_[source];
}

Distance Metric::distance(Vertex x, Vertex y) const {
  graph_->check_vertex(y);
  std::int32_t d = distances_from(x)[y];
  if (d == kUnreachable) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::vector<Vertex> Metric::sphere(Vertex x, std::size_t r) const {
  auto dist = distances_from(x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreachable && static_cast<std::size_t>(dist[v]) == r) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex> Metric::disk(Vertex x, std::size_t r) const {
  auto dist = distances_from(x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreachable && static_cast<std::size_t>(dist[v]) <= r) {
      out.push_back(v);
    }
  }
  return out;
}

GrowthProfile Metric::growth_profile(Vertex x, std::size_t r_max) const {
  auto dist = distances_from(x);
  GrowthProfile p;
  p.center = x;
  p.sigma.assign(r_max + 1, 0);
  for (std::int32_t d : dist) {
    if (d != kUnreachable && static_cast<std::size_t>(d) <= r_max) {
      ++p.sigma[static_cast<std::size_t>(d)];
    }
  }
  p.beta.resize(r_max + 1);
  std::size_t running = 0;
  for (std::size_t r = 0; r <= r_max; ++r) {
    running += p.sigma[r];
    p.beta[r] = running;
  }
  return p;
}

std::size_t Metric::eccentricity(Vertex x) const {
  auto dist = distances_from(x);
  std::int32_t best = 0;
  for (std::int32_t d : dist) best = std::max(best, d);
  return static_cast<std::size_t>(best);
}

GrowthBoundsReport check_basic_growth_bounds(const Metric& metric,
                                             std::size_t r_max) {
  const Graph& g = metric.graph();
  if (!g.is_connected()) {
    throw GraphError("growth bounds require a connected graph");
  }
  GrowthBoundsReport report;
  report.r_max = r_max;
  const std::uint64_t delta = g.max_degree();
  report.max_degree = delta;
  report.ball_bound_checked = delta > 2;
  if (!report.ball_bound_checked) {
    report.notice =
        "max degree <= 2: ball bound beta_x(r) <= 3(Delta-1)^r skipped";
  }
  if (delta == 0) return report;  // single vertex
  auto violate = [&](Vertex x, std::size_t r, std::string what) {
    report.violations.push_back({x, r, std::move(what)});
  };
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    auto p = metric.growth_profile(x, r_max + 1);
    if (p.sigma[1] > delta) violate(x, 1, "sigma(1) <= Delta");
    for (std::size_t r = 1; r <= r_max; ++r) {
      if (p.sigma[r + 1] > saturating_mul(p.sigma[r], delta - 1)) {
        violate(x, r, "sigma(r+1) <= sigma(r)(Delta-1)");
      }
      if (p.sigma[r + 1] >
          saturating_mul(delta, saturating_pow(delta - 1, r))) {
        violate(x, r, "sigma(r+1) <= Delta(Delta-1)^r");
      }
    }
    if (report.ball_bound_checked) {
      for (std::size_t r = 0; r <= r_max; ++r) {
        if (p.beta[r] > saturating_mul(3, saturating_pow(delta - 1, r))) {
          violate(x, r, "beta(r) <= 3(Delta-1)^r");
        }
      }
    }
  }
  return report;
}

}  // namespace coarsecolor
