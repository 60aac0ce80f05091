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

#include "coarsecolor/net.hpp"

#include <algorithm>
#include <sstream>

namespace coarsecolor {

std::optional<std::size_t> Net::index_of(Vertex v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Net build_net(const Metric& metric, std::size_t R, Vertex anchor) {
  const Graph& g = metric.graph();
  g.check_vertex(anchor);
  if (R == 0) throw std::invalid_argument("net radius must be positive");
  if (!g.is_connected()) throw GraphError("build_net needs a connected graph");
  const auto exclusion = static_cast<std::int32_t>(2 * R);
  std::vector<char> excluded(g.vertex_count(), 0);
  Net net;
  net.R = R;
  net.anchor = anchor;
  auto admit = [&](Vertex y) {
    net.members.push_back(y);
    auto dist = metric.distances_from(y);
    for (Vertex v = 0; v < dist.size(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= exclusion) excluded[v] = 1;
    }
  };
  admit(anchor);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!excluded[v]) admit(v);
  }
  std::sort(net.members.begin(), net.members.end());
  return net;
}

std::vector<NetViolation> check_net(const Metric& metric, const Net& net) {
  std::vector<NetViolation> out;
  const Graph& g = metric.graph();
  const auto separation = static_cast<std::int32_t>(2 * net.R + 1);
  const auto density = static_cast<std::int32_t>(2 * net.R);
  if (!net.index_of(net.anchor)) {
    out.push_back({net.anchor, net.anchor, "anchor not in net"});
  }
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    auto dist = metric.distances_from(net.members[i]);
    for (std::size_t j = i + 1; j < net.members.size(); ++j) {
      std::int32_t d = dist[net.members[j]];
      if (d != kUnreachable && d < separation) {
        out.push_back({net.members[i], net.members[j], "separation"});
      }
    }
  }
  auto nearest = bfs_distances(g, std::span<const Vertex>(net.members));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (nearest[v] == kUnreachable || nearest[v] > density) {
      out.push_back({v, v, "density"});
    }
  }
  return out;
}

QuotientGraph build_quotient(const Metric& metric, const Net& net) {
  const auto threshold = static_cast<std::int32_t>(4 * net.R + 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    auto dist = metric.distances_from(net.members[i]);
    for (std::size_t j = i + 1; j < net.members.size(); ++j) {
      std::int32_t d = dist[net.members[j]];
      if (d != kUnreachable && d > 0 && d <= threshold) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  QuotientGraph q{Graph::from_edges(net.members.size(), edges), net.members};
  if (metric.graph().is_connected() && !q.graph.is_connected()) {
    throw std::logic_error("quotient of a connected graph is disconnected");
  }
  for (Vertex i = 0; i < q.graph.vertex_count(); ++i) {
    const std::size_t ball =
        metric.disk(net.members[i], static_cast<std::size_t>(threshold)).size();
    if (q.graph.degree(i) > ball - 1) {
      std::ostringstream msg;
      msg << "quotient degree bound violated at net vertex " << net.members[i];
      throw std::logic_error(msg.str());
    }
  }
  return q;
}

SpanningTree spanning_tree(const QuotientGraph& q, std::size_t root) {
  const std::size_t n = q.graph.vertex_count();
  if (root >= n) throw std::invalid_argument("spanning tree root not in net");
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.children.assign(n, {});
  t.depth.assign(n, 0);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::vector<std::size_t> layer = {root};
  t.bfs_order.push_back(root);
  std::size_t level = 0;
  // Layer by layer so that each vertex picks the smallest-index parent in
  // the previous layer rather than the first one dequeued.
  while (!layer.empty()) {
    ++level;
    std::vector<std::size_t> next;
    for (std::size_t u : layer) {
      for (Vertex w : q.graph.neighbors(static_cast<Vertex>(u))) {
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (std::size_t w : next) {
      std::size_t best = n;
      for (Vertex u : q.graph.neighbors(static_cast<Vertex>(w))) {
        if (t.depth[u] == level - 1 && (u == root || t.parent[u]) && u < best) {
          best = u;
        }
      }
      t.parent[w] = best;
      t.depth[w] = level;
      t.children[best].push_back(w);
    }
    layer = std::move(next);
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  // BFS order with sorted children.
  t.bfs_order.clear();
  std::vector<std::size_t> queue = {root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    t.bfs_order.push_back(queue[head]);
    for (std::size_t c : t.children[queue[head]]) queue.push_back(c);
  }
  if (t.bfs_order.size() != n) {
    throw std::invalid_argument("quotient graph is not connected");
  }
  return t;
}

}  // namespace coarsecolor
