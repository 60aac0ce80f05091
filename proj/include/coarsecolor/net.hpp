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
#include <optional>
#include <stdexcept>
#include <vector>

#include "coarsecolor/graph.hpp"

namespace coarsecolor {

/// A (2R+1)-separated, 2R-coarsely dense vertex set containing the anchor.
struct Net {
  std::size_t R = 0;
  Vertex anchor = 0;
  std::vector<Vertex> members;  // sorted

  /// Position of v in `members`, if v is a member.
  std::optional<std::size_t> index_of(Vertex v) const;
};

/// Greedy maximal net: the anchor is admitted first, then vertices in
/// ascending index order unless they are within 2R of an admitted vertex.
Net build_net(const Metric& metric, std::size_t R, Vertex anchor);

struct NetViolation {
  Vertex a;
  Vertex b;  // for density violations a == b is the uncovered vertex
  std::string what;
};

/// Direct check of separation, density, and anchor membership.
std::vector<NetViolation> check_net(const Metric& metric, const Net& net);

/// Net members joined when 0 < d(y, y') <= 4R+1. Vertex i of `graph` is
/// net.members[i].
struct QuotientGraph {
  Graph graph;
  std::vector<Vertex> members;
};

/// Builds the quotient and verifies it is connected with
/// deg(y) <= |D(y, 4R+1)| - 1; throws std::logic_error otherwise.
QuotientGraph build_quotient(const Metric& metric, const Net& net);

/// BFS spanning tree of the quotient; vertices are quotient indices.
struct SpanningTree {
  std::size_t root = 0;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> children;  // sorted
  std::vector<std::size_t> depth;
  std::vector<std::size_t> bfs_order;  // root first, children sorted
};

/// Smallest-index parent among the previous BFS layer.
SpanningTree spanning_tree(const QuotientGraph& q, std::size_t root);

}  // namespace coarsecolor
