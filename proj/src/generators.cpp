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

#include "coarsecolor/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace coarsecolor {

namespace {

void check_budget(std::size_t needed, std::size_t budget, const char* what) {
  if (needed > budget) {
    std::ostringstream msg;
    msg << what << " needs " << needed << " vertices, budget is " << budget;
    throw SizeBudgetExceeded(msg.str());
  }
}

// a*b with saturation, for budget arithmetic only.
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b
             ? std::numeric_limits<std::size_t>::max()
             : a + b;
}

std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph regular_tree_ball(std::size_t d, std::size_t depth, std::size_t budget) {
  if (d < 3) throw GraphError("regular tree ball needs degree d >= 3");
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t level = 1; level <= depth; ++level) {
    layer = sat_mul(layer, level == 1 ? d : d - 1);
    total = sat_add(total, layer);
  }
  check_budget(total, budget, "regular_tree_ball");
  std::vector<Edge> edges;
  edges.reserve(total);
  std::vector<Vertex> frontier = {0};
  Vertex next = 1;
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<Vertex> fresh;
    const std::size_t kids = level == 1 ? d : d - 1;
    for (Vertex parent : frontier) {
      for (std::size_t k = 0; k < kids; ++k) {
        edges.emplace_back(parent, next);
        fresh.push_back(next++);
      }
    }
    frontier = std::move(fresh);
  }
  return Graph::from_edges(total, edges);
}

Graph motion_example(std::size_t rungs) {
  if (rungs == 0) throw GraphError("motion_example needs at least one rung");
  const std::size_t n = 1 + 2 * rungs;
  auto y = [](std::size_t i) { return static_cast<Vertex>(2 * i - 1); };
  auto z = [](std::size_t i) { return static_cast<Vertex>(2 * i); };
  std::vector<Edge> edges = {{0, y(1)}, {0, z(1)}};
  std::vector<std::string> labels(n);
  labels[0] = "x";
  for (std::size_t i = 1; i <= rungs; ++i) {
    edges.emplace_back(y(i), z(i));
    if (i < rungs) {
      edges.emplace_back(y(i), y(i + 1));
      edges.emplace_back(z(i), z(i + 1));
    }
    labels[y(i)] = "y" + std::to_string(i);
    labels[z(i)] = "z" + std::to_string(i);
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Permutation motion_example_swap(std::size_t rungs) {
  std::vector<Vertex> image(1 + 2 * rungs);
  image[0] = 0;
  for (std::size_t i = 1; i <= rungs; ++i) {
    image[2 * i - 1] = static_cast<Vertex>(2 * i);
    image[2 * i] = static_cast<Vertex>(2 * i - 1);
  }
  return Permutation(std::move(image));
}

CounterexampleGraph counterexample_graph(std::size_t levels,
                                         std::size_t budget) {
  if (levels == 0) throw GraphError("counterexample needs N >= 1");
  std::size_t total = levels;
  for (std::size_t n = 1; n <= levels; ++n) {
    total = sat_add(total, sat_mul(sat_add(sat_pow(2, n), 1), n));
  }
  check_budget(total, budget, "counterexample_graph");

  CounterexampleGraph cg;
  cg.levels = levels;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t n = 1; n <= levels; ++n) {
    cg.spine.push_back(static_cast<Vertex>(n - 1));
    labels.push_back("u" + std::to_string(n));
    if (n > 1) edges.emplace_back(static_cast<Vertex>(n - 2),
                                  static_cast<Vertex>(n - 1));
  }
  Vertex next = static_cast<Vertex>(levels);
  cg.copies.resize(levels);
  for (std::size_t n = 1; n <= levels; ++n) {
    const std::size_t count = (std::size_t{1} << n) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Vertex> copy;
      Vertex prev = cg.spine[n - 1];
      for (std::size_t m = 1; m <= n; ++m) {
        edges.emplace_back(prev, next);
        labels.push_back("v" + std::to_string(n) + "." + std::to_string(i + 1) +
                         "." + std::to_string(m));
        copy.push_back(next);
        prev = next++;
      }
      cg.copies[n - 1].push_back(std::move(copy));
    }
  }
  cg.graph = Graph::from_edges(total, edges, std::move(labels));
  return cg;
}

Permutation counterexample_adversary(const CounterexampleGraph& cg,
                                     std::span<const std::uint8_t> phi) {
  if (phi.size() != cg.graph.vertex_count()) {
    throw std::invalid_argument("coloring length does not match graph");
  }
  const auto& top = cg.copies.back();
  std::map<std::vector<std::uint8_t>, std::size_t> first_seen;
  for (std::size_t i = 0; i < top.size(); ++i) {
    std::vector<std::uint8_t> pattern;
    for (Vertex v : top[i]) pattern.push_back(phi[v]);
    auto [it, inserted] = first_seen.emplace(pattern, i);
    if (inserted) continue;
    auto image = Permutation::identity(cg.graph.vertex_count()).image();
    const auto& a = top[it->second];
    const auto& b = top[i];
    for (std::size_t m = 0; m < a.size(); ++m) {
      image[a[m]] = b[m];
      image[b[m]] = a[m];
    }
    return Permutation(std::move(image));
  }
  throw std::logic_error("pigeonhole failed: copies outnumber colorings");
}

namespace {

std::size_t tree_distance(const std::vector<std::size_t>& parent,
                          const std::vector<std::size_t>& level,
                          std::size_t a, std::size_t b) {
  std::size_t d = 0;
  while (level[a] > level[b]) { a = parent[a]; ++d; }
  while (level[b] > level[a]) { b = parent[b]; ++d; }
  while (a != b) {
    a = parent[a];
    b = parent[b];
    d += 2;
  }
  return d;
}

void complete_tree(std::size_t arity, std::size_t height,
                   std::vector<std::size_t>& parent,
                   std::vector<std::size_t>& level) {
  parent = {0};
  level = {0};
  std::size_t begin = 0, end = 1;
  for (std::size_t l = 1; l <= height; ++l) {
    for (std::size_t node = begin; node < end; ++node) {
      for (std::size_t k = 0; k < arity; ++k) {
        parent.push_back(node);
        level.push_back(l);
      }
    }
    begin = end;
    end = parent.size();
  }
}

}  // namespace

std::size_t DiestelLeaderGraph::p_tree_distance(std::size_t a,
                                                std::size_t b) const {
  return tree_distance(p_parent, p_level, a, b);
}

std::size_t DiestelLeaderGraph::q_tree_distance(std::size_t a,
                                                std::size_t b) const {
  return tree_distance(q_parent, q_level, a, b);
}

DiestelLeaderGraph dl_graph(std::size_t p, std::size_t q, std::size_t height,
                            std::size_t budget) {
  if (p < 2 || q < 2) throw GraphError("dl_graph needs p, q >= 2");
  if (height < 1) throw GraphError("dl_graph needs H >= 1");
  std::size_t tree_nodes = 0, vertices = 0;
  for (std::size_t l = 0; l <= height; ++l) {
    tree_nodes = sat_add(tree_nodes, sat_add(sat_pow(p, l), sat_pow(q, l)));
    vertices = sat_add(vertices, sat_mul(sat_pow(p, l), sat_pow(q, height - l)));
  }
  check_budget(std::max(tree_nodes, vertices), budget, "dl_graph");

  DiestelLeaderGraph dl;
  dl.p = p;
  dl.q = q;
  dl.height = height;
  complete_tree(p, height, dl.p_parent, dl.p_level);
  complete_tree(q, height, dl.q_parent, dl.q_level);

  std::vector<std::vector<std::size_t>> p_children(dl.p_parent.size());
  for (std::size_t v = 1; v < dl.p_parent.size(); ++v) {
    p_children[dl.p_parent[v]].push_back(v);
  }
  std::map<std::pair<std::size_t, std::size_t>, Vertex> index;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < dl.p_parent.size(); ++x) {
    for (std::size_t y = 0; y < dl.q_parent.size(); ++y) {
      if (dl.p_level[x] + dl.q_level[y] != height) continue;
      index.emplace(std::pair{x, y}, static_cast<Vertex>(dl.x_of.size()));
      dl.x_of.push_back(x);
      dl.y_of.push_back(y);
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  // x steps down to a child while y steps up to its parent; the reverse
  // move is the same edge seen from the other end.
  std::vector<Edge> edges;
  for (Vertex v = 0; v < dl.x_of.size(); ++v) {
    std::size_t x = dl.x_of[v], y = dl.y_of[v];
    if (dl.q_level[y] == 0) continue;
    for (std::size_t child : p_children[x]) {
      edges.emplace_back(v, index.at({child, dl.q_parent[y]}));
    }
  }
  dl.graph = Graph::from_edges(dl.x_of.size(), edges, std::move(labels));
  return dl;
}

GadgetShape gadget_shape(std::uint8_t color_a, std::uint8_t color_b) {
  if (color_a > 1 || color_b > 1) throw std::invalid_argument("colors are 0/1");
  if (color_a == 0 && color_b == 0) return {5, {3}};
  if (color_a == 1 && color_b == 1) return {5, {2, 4}};
  // The tag sits next to the color-0 end.
  if (color_a == 0) return {5, {2}};
  return {5, {4}};
}

Graph gadget_substitute(const Graph& g, std::span<const std::uint8_t> phi) {
  if (phi.size() != g.vertex_count()) {
    throw std::invalid_argument("coloring length does not match graph");
  }
  if (!g.is_connected()) throw GraphError("gadget_substitute needs a connected graph");
  std::vector<Edge> edges;
  std::size_t next = g.vertex_count();
  for (const auto& [a, b] : g.edges()) {
    const GadgetShape shape = gadget_shape(phi[a], phi[b]);
    std::vector<Vertex> chain = {a};
    for (std::size_t i = 0; i < shape.path_interior; ++i) {
      chain.push_back(static_cast<Vertex>(next++));
    }
    chain.push_back(b);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      edges.emplace_back(chain[i - 1], chain[i]);
    }
    for (std::size_t site : shape.tag_sites) {
      edges.emplace_back(chain[site], static_cast<Vertex>(next++));
    }
  }
  return Graph::from_edges(next, edges);
}

Graph free_product_truncation(std::span<const PointedGraph> factors,
                              std::size_t rounds, std::size_t budget) {
  if (factors.size() < 2) throw GraphError("free product needs >= 2 factors");
  for (const auto& f : factors) {
    f.graph.check_vertex(f.basepoint);
    if (!f.graph.is_connected()) throw GraphError("free product factors must be connected");
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  // A fresh copy of factor j glued at `at`; returns the new vertices.
  auto glue = [&](std::size_t j, Vertex at) {
    const auto& f = factors[j];
    std::vector<Vertex> local(f.graph.vertex_count());
    std::vector<Vertex> fresh;
    for (Vertex v = 0; v < local.size(); ++v) {
      if (v == f.basepoint) {
        local[v] = at;
        continue;
      }
      local[v] = static_cast<Vertex>(labels.size());
      labels.push_back(labels[at] + "." + std::to_string(j + 1) + ":" +
                       std::to_string(v));
      fresh.push_back(local[v]);
      check_budget(labels.size(), budget, "free_product_truncation");
    }
    for (const auto& [u, v] : f.graph.edges()) edges.emplace_back(local[u], local[v]);
    return fresh;
  };

  labels.push_back("e");
  std::vector<std::pair<Vertex, std::size_t>> frontier;  // (vertex, its factor)
  frontier.emplace_back(0, 0);
  for (Vertex v : glue(0, 0)) frontier.emplace_back(v, 0);
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<std::pair<Vertex, std::size_t>> next;
    for (const auto& [v, home] : frontier) {
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j == home) continue;
        for (Vertex w : glue(j, v)) next.emplace_back(w, j);
      }
    }
    frontier = std::move(next);
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph attach_copies(const Graph& host, std::span<const Vertex> at,
                    const PointedGraph& piece) {
  piece.graph.check_vertex(piece.basepoint);
  std::vector<Edge> edges = host.edges();
  std::size_t next = host.vertex_count();
  for (Vertex h : at) {
    host.check_vertex(h);
    std::vector<Vertex> local(piece.graph.vertex_count());
    for (Vertex v = 0; v < local.size(); ++v) {
      local[v] = v == piece.basepoint ? h : static_cast<Vertex>(next++);
    }
    for (const auto& [u, v] : piece.graph.edges()) {
      edges.emplace_back(local[u], local[v]);
    }
  }
  return Graph::from_edges(next, edges);
}

namespace {

// Vertex sets of the biconnected components with at least three vertices.
std::vector<std::vector<Vertex>> cyclic_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  int time = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack = {{root, root, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex u = stack.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        std::vector<Vertex> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{u, done.v}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        if (block.size() >= 3) blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace

CycleSearchResult max_cycle_length(const Graph& g, std::size_t cutoff,
                                   std::size_t node_budget) {
  CycleSearchResult result;
  std::size_t nodes = 0;
  std::vector<char> in_block(g.vertex_count(), 0), on_path(g.vertex_count(), 0);
  for (const auto& block : cyclic_blocks(g)) {
    for (Vertex v : block) in_block[v] = 1;
    std::size_t best = 0;
    // Cycles through `start` using only larger block vertices; each cycle
    // is found from its smallest vertex.
    for (Vertex start : block) {
      if (best == block.size()) break;
      struct Frame {
        Vertex v;
        std::size_t next;
      };
      std::vector<Frame> stack = {{start, 0}};
      on_path[start] = 1;
      while (!stack.empty()) {
        if (++nodes > node_budget) {
          result.status = CycleSearchResult::Status::kUnknown;
          result.length = 0;
          return result;
        }
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next >= nbrs.size()) {
          on_path[f.v] = 0;
          stack.pop_back();
          continue;
        }
        Vertex w = nbrs[f.next++];
        if (!in_block[w] || w < start) continue;
        if (w == start) {
          if (stack.size() >= 3) {
            best = std::max(best, stack.size());
            if (best > cutoff) {
              result.status = CycleSearchResult::Status::kExceeded;
              result.length = 0;
              return result;
            }
          }
          continue;
        }
        if (on_path[w]) continue;
        on_path[w] = 1;
        stack.push_back({w, 0});
      }
    }
    for (Vertex v : block) in_block[v] = 0;
    result.length = std::max(result.length, best);
  }
  return result;
}

}  // namespace coarsecolor
