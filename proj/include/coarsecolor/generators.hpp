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
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "coarsecolor/automorphisms.hpp"
#include "coarsecolor/graph.hpp"

namespace coarsecolor {

/// Thrown when a generator would exceed its vertex budget.
class SizeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexBudget = 200'000;

struct PointedGraph {
  Graph graph;
  Vertex basepoint = 0;
};

// Standard families.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// Ball of the d-regular tree around its root (vertex 0), BFS numbering.
Graph regular_tree_ball(std::size_t d, std::size_t depth,
                        std::size_t budget = kDefaultVertexBudget);

/// Apex x (vertex 0) attached to two rails y_1..y_L and z_1..z_L joined by
/// rungs y_i - z_i. Vertex y_i is 2i-1 and z_i is 2i.
Graph motion_example(std::size_t rungs);

/// The rail swap y_i <-> z_i of motion_example(rungs).
Permutation motion_example_swap(std::size_t rungs);

/// Spine u_1..u_N with 2^n + 1 pendant paths of length n glued at u_n.
struct CounterexampleGraph {
  Graph graph;
  std::size_t levels = 0;
  std::vector<Vertex> spine;  // spine[n-1] = u_n
  /// copies[n-1][i] lists v_1..v_n of the i-th copy at level n (v_0 is u_n).
  std::vector<std::vector<std::vector<Vertex>>> copies;
};

CounterexampleGraph counterexample_graph(
    std::size_t levels, std::size_t budget = kDefaultVertexBudget);

/// Pigeonhole adversary: swaps the first two equally colored copies at the
/// top level, fixing everything else. Always succeeds because there are
/// 2^N + 1 copies and only 2^N colorings of a copy's free vertices.
Permutation counterexample_adversary(const CounterexampleGraph& cg,
                                     std::span<const std::uint8_t> phi);

/// Finite horocyclic product of a complete p-ary and q-ary tree of depth H.
struct DiestelLeaderGraph {
  Graph graph;
  std::size_t p = 0, q = 0, height = 0;
  // Tree vertices are numbered in BFS order; node 0 is the root.
  std::vector<std::size_t> p_parent, q_parent;
  std::vector<std::size_t> p_level, q_level;
  /// Tree coordinates of each graph vertex.
  std::vector<std::size_t> x_of, y_of;

  std::size_t p_tree_distance(std::size_t a, std::size_t b) const;
  std::size_t q_tree_distance(std::size_t a, std::size_t b) const;
};

DiestelLeaderGraph dl_graph(std::size_t p, std::size_t q, std::size_t height,
                            std::size_t budget = kDefaultVertexBudget);

/// Number of interior vertices of each gadget kind, exposed for tests.
struct GadgetShape {
  std::size_t path_interior;           // vertices strictly between endpoints
  std::vector<std::size_t> tag_sites;  // interior positions carrying a leaf
};
GadgetShape gadget_shape(std::uint8_t color_a, std::uint8_t color_b);

/// Replaces every edge {a,b} by a rigid gadget chosen by the colors of its
/// endpoints. Original vertices keep their indices; gadget vertices follow.
Graph gadget_substitute(const Graph& g, std::span<const std::uint8_t> phi);

/// Iterated gluing model of a free product of pointed graphs.
Graph free_product_truncation(std::span<const PointedGraph> factors,
                              std::size_t rounds,
                              std::size_t budget = kDefaultVertexBudget);

/// Glues a copy of `piece` at each listed host vertex, identifying the host
/// vertex with the piece's basepoint.
Graph attach_copies(const Graph& host, std::span<const Vertex> at,
                    const PointedGraph& piece);

/// Longest simple cycle, computed block by block with exhaustive DFS.
struct CycleSearchResult {
  enum class Status { kExact, kExceeded, kUnknown };
  Status status = Status::kExact;
  std::size_t length = 0;  // valid for kExact; 0 for forests
};

CycleSearchResult max_cycle_length(const Graph& g, std::size_t cutoff,
                                   std::size_t node_budget = 10'000'000);

}  // namespace coarsecolor
