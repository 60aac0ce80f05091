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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coarsecolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input or invalid vertex indices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph. Immutable after construction; adjacency
/// lists are sorted ascending and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Duplicate edges (in either
  /// orientation) are merged; loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edge list with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_connected() const;
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Convenience wrapper matching the usual construction entry point.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// Graph distance. An empty value means the vertices lie in different
/// components.
using Distance = std::optional<std::size_t>;

/// Sentinel used inside distance arrays for unreachable vertices.
inline constexpr std::int32_t kUnreachable = -1;

struct GrowthProfile {
  Vertex center = 0;
  std::vector<std::size_t> sigma;  // sigma[r] = |S(x,r)|
  std::vector<std::size_t> beta;   // beta[r]  = |D(x,r)|
};

/// Shortest-path metric of a graph with a lazily filled per-source BFS
/// cache. Safe for concurrent readers; the cache is guarded by a mutex.
class Metric {
 public:
  explicit Metric(const Graph& g);
  Metric(const Metric&) = delete;
  Metric& operator=(const Metric&) = delete;

  const Graph& graph() const { return *graph_; }

  /// Distances from `source` to every vertex, kUnreachable where
  /// disconnected. The span stays valid for the lifetime of the Metric.
  std::span<const std::int32_t> distances_from(Vertex source) const;

  Distance distance(Vertex x, Vertex y) const;

  /// Vertices at distance exactly r (resp. at most r), ascending.
  std::vector<Vertex> sphere(Vertex x, std::size_t r) const;
  std::vector<Vertex> disk(Vertex x, std::size_t r) const;

  GrowthProfile growth_profile(Vertex x, std::size_t r_max) const;

  /// Eccentricity-bounded diameter of the component of x.
  std::size_t eccentricity(Vertex x) const;

 private:
  const Graph* graph_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<std::int32_t>>> cache_;
};

/// Plain BFS without caching.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

/// Multi-source BFS: distance from each vertex to the nearest source.
std::vector<std::int32_t> bfs_distances(const Graph& g,
                                        std::span<const Vertex> sources);

struct GrowthBoundViolation {
  Vertex vertex;
  std::size_t radius;
  std::string inequality;
};

struct GrowthBoundsReport {
  std::size_t max_degree = 0;
  std::size_t r_max = 0;
  bool ball_bound_checked = false;  // beta_x(r) <= 3 (Delta-1)^r, needs Delta > 2
  std::string notice;
  std::vector<GrowthBoundViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the elementary sphere/ball growth bounds in terms of the maximal
/// degree for every vertex and every radius up to r_max. Requires a
/// connected graph.
GrowthBoundsReport check_basic_growth_bounds(const Metric& metric,
                                             std::size_t r_max);

}  // namespace coarsecolor
