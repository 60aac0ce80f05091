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

#include <queue>
#include <random>

#include "coarsecolor/generators.hpp"
#include "coarsecolor/symmetry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coarsecolor;

namespace {

bool is_path(const Graph& g) {
  if (!g.is_connected() || g.edge_count() + 1 != g.vertex_count()) return false;
  return g.max_degree() <= 2;
}

std::size_t group_size(const Graph& g) {
  Metric m(g);
  return AutomorphismSearch(m).enumerate().size();
}

// BFS distances inside a rooted tree given by parent pointers.
std::vector<std::vector<std::size_t>> tree_distances(const std::vector<std::size_t>& parent) {
  const std::size_t n = parent.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 1; v < n; ++v) {
    adj[v].push_back(parent[v]);
    adj[parent[v]].push_back(v);
  }
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

}  // namespace

TEST_CASE("standard families") {
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(7).edge_count() == 7);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(3).vertex_count() == 4);
  CHECK(cycle_graph(200).vertex_count() == 200);
}

TEST_CASE("regular tree balls") {
  Graph star = regular_tree_ball(3, 1);
  CHECK(star.vertex_count() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(regular_tree_ball(3, 2).vertex_count() == 10);
  CHECK(regular_tree_ball(4, 2).vertex_count() == 17);
  CHECK(regular_tree_ball(3, 0).vertex_count() == 1);

  Graph t = regular_tree_ball(4, 3);
  Metric m(t);
  CHECK(t.edge_count() + 1 == t.vertex_count());
  CHECK(t.degree(0) == 4);
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    const bool leaf = *m.distance(0, v) == 3;
    CHECK(t.degree(v) == (leaf ? 1U : 4U));  // parent + d-1 children
  }
  CHECK_THROWS_AS(regular_tree_ball(3, 30, 1000), SizeBudgetExceeded);
}

TEST_CASE("motion example ladder") {
  Graph tri = motion_example(1);
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(motion_example(5).vertex_count() == 11);

  for (std::size_t L = 1; L <= 50; ++L) {
    Graph g = motion_example(L);
    Metric m(g);
    CHECK(g.is_connected());
    auto swap = motion_example_swap(L);
    CHECK(is_automorphism(g, swap));
    auto r = motion_report(m, swap);
    CHECK(r.motion == 2 * L);
    CHECK(r.geometric_motion == 1);
  }
  for (std::size_t L = 2; L <= 10; ++L) CHECK(group_size(motion_example(L)) == 2);
}

TEST_CASE("counterexample graph sizes") {
  CHECK(counterexample_graph(1).graph.vertex_count() == 4);
  CHECK(counterexample_graph(2).graph.vertex_count() == 15);
  CHECK(counterexample_graph(3).graph.vertex_count() == 43);
  for (std::size_t N = 1; N <= 6; ++N) {
    auto cg = counterexample_graph(N);
    std::size_t expected = N;
    for (std::size_t n = 1; n <= N; ++n) expected += n * ((std::size_t{1} << n) + 1);
    CHECK(cg.graph.vertex_count() == expected);
    CHECK(cg.graph.edge_count() + 1 == expected);
    CHECK(cg.graph.is_connected());
    for (std::size_t n = 1; n <= N; ++n) {
      const std::size_t spine_nbrs = (n > 1) + (n < N);
      CHECK(cg.graph.degree(cg.spine[n - 1]) == spine_nbrs + (std::size_t{1} << n) + 1);
      CHECK(cg.copies[n - 1].size() == (std::size_t{1} << n) + 1);
      for (const auto& copy : cg.copies[n - 1]) CHECK(copy.size() == n);
    }
  }
  CHECK_THROWS_AS(counterexample_graph(30, 1000), SizeBudgetExceeded);
}

TEST_CASE("counterexample adversary defeats every coloring") {
  {
    auto cg = counterexample_graph(1);
    Metric m(cg.graph);
    Coloring zero(4, 0);
    auto f = counterexample_adversary(cg, zero);
    CHECK(motion_report(m, f).geometric_motion == 2);
  }
  std::mt19937_64 rng(2024);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t N = 1; N <= 4; ++N) {
    auto cg = counterexample_graph(N);
    Metric m(cg.graph);
    for (int trial = 0; trial < 50; ++trial) {
      Coloring phi(cg.graph.vertex_count());
      for (auto& c : phi) c = coin(rng);
      auto f = counterexample_adversary(cg, phi);
      CHECK(is_automorphism(cg.graph, f));
      CHECK(preserves_coloring(f, phi));
      CHECK_FALSE(f.is_identity());
      CHECK(motion_report(m, f).geometric_motion == 2 * N);
    }
  }
}

TEST_CASE("Diestel-Leader truncations") {
  auto k22 = dl_graph(2, 2, 1);
  CHECK(k22.graph.vertex_count() == 4);
  CHECK(k22.graph.edge_count() == 4);
  auto k23 = dl_graph(2, 3, 1);
  CHECK(k23.graph.vertex_count() == 5);
  CHECK(k23.graph.edge_count() == 6);

  for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    for (std::size_t H = 2; H <= 3; ++H) {
      auto dl = dl_graph(p, q, H);
      const Graph& g = dl.graph;
      CHECK(g.is_connected());
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto lx = dl.p_level[dl.x_of[v]];
        CHECK(lx + dl.q_level[dl.y_of[v]] == H);
        CHECK(g.degree(v) >= 2);
        if (lx > 0 && lx < H) CHECK(g.degree(v) == static_cast<std::size_t>(p + q));
        else CHECK(g.degree(v) < static_cast<std::size_t>(p + q));
      }
      // Adjacent vertices move each tree coordinate by one step.
      for (auto [u, v] : g.edges()) {
        CHECK(dl.p_tree_distance(dl.x_of[u], dl.x_of[v]) == 1);
        CHECK(dl.q_tree_distance(dl.y_of[u], dl.y_of[v]) == 1);
      }
    }
  }
}

TEST_CASE("Diestel-Leader distances dominate tree distances") {
  for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto dl = dl_graph(p, q, 2);
    Metric m(dl.graph);
    auto dp = tree_distances(dl.p_parent);
    auto dq = tree_distances(dl.q_parent);
    for (Vertex a = 0; a < dl.graph.vertex_count(); ++a) {
      for (Vertex b = 0; b < dl.graph.vertex_count(); ++b) {
        const auto tx = dp[dl.x_of[a]][dl.x_of[b]];
        const auto ty = dq[dl.y_of[a]][dl.y_of[b]];
        CHECK(dl.p_tree_distance(dl.x_of[a], dl.x_of[b]) == tx);
        CHECK(dl.q_tree_distance(dl.y_of[a], dl.y_of[b]) == ty);
        CHECK(*m.distance(a, b) >= std::max(tx, ty));
      }
    }
  }
}

TEST_CASE("gadget shapes") {
  auto g00 = gadget_shape(0, 0), g11 = gadget_shape(1, 1), g01 = gadget_shape(0, 1);
  auto g10 = gadget_shape(1, 0);
  CHECK(g01.path_interior == g10.path_interior);
  CHECK(g01.tag_sites.size() == 1);
  CHECK(g01.tag_sites[0] + g10.tag_sites[0] == g01.path_interior + 1);  // mirrored
  CHECK_THROWS(gadget_shape(2, 0));

  const Edge e[] = {{0, 1}};
  Graph edge = Graph::from_edges(2, e);
  auto sub = [&](std::uint8_t a, std::uint8_t b) {
    const Coloring phi = {a, b};
    return gadget_substitute(edge, phi);
  };
  Graph s00 = sub(0, 0), s11 = sub(1, 1), s01 = sub(0, 1);
  CHECK(s00.vertex_count() == 2 + g00.path_interior + g00.tag_sites.size());
  // 00 and 11 are endpoint-symmetric, 01 is rigid.
  for (const Graph* g : {&s00, &s11}) {
    Metric m(*g);
    const Edge swap[] = {{0, 1}};
    CHECK(AutomorphismSearch(m).find_one(swap).has_value());
  }
  CHECK(group_size(s01) == 1);
  // 00 and 11 differ (different numbers of tags).
  CHECK(s00.vertex_count() != s11.vertex_count());
  for (const Graph* g : {&s00, &s11, &s01}) {
    for (Vertex v = 2; v < g->vertex_count(); ++v) CHECK(g->degree(v) <= 3);
  }
}

TEST_CASE("gadget substitution on small colored graphs") {
  Graph p3 = path_graph(3);
  const Coloring p3_phi = {0, 1, 0};
  Graph sp = gadget_substitute(p3, p3_phi);
  Metric msp(sp);
  auto group = AutomorphismSearch(msp).enumerate();
  CHECK(group.size() == 2);
  for (const auto& f : group) CHECK(f(1) == 1);

  Graph star = star_graph(3);
  const Coloring star_phi = {0, 1, 1, 1};
  Graph ss = gadget_substitute(star, star_phi);
  CHECK(group_size(ss) == 6);

  const Edge two[] = {{0, 1}, {2, 3}};
  Graph split = Graph::from_edges(4, two);
  const Coloring split_phi = {0, 0, 0, 0};
  CHECK_THROWS(gadget_substitute(split, split_phi));
}

TEST_CASE("free product truncations") {
  const PointedGraph k2{complete_graph(2), 0};
  const PointedGraph c3{cycle_graph(3), 0};
  const PointedGraph pair_k2[] = {k2, k2};
  Graph w2 = free_product_truncation(pair_k2, 2);
  CHECK(is_path(w2));
  CHECK(w2.vertex_count() == 6);
  Graph w3 = free_product_truncation(pair_k2, 3);
  CHECK(is_path(w3));
  CHECK(w3.vertex_count() == 8);

  const PointedGraph tri_k2[] = {c3, k2};
  Graph t1 = free_product_truncation(tri_k2, 1);
  CHECK(t1.vertex_count() == 6);
  CHECK(t1.edge_count() == 6);
  std::size_t leaves = 0;
  for (Vertex v = 0; v < 6; ++v) leaves += t1.degree(v) == 1;
  CHECK(leaves == 3);

  Graph t2 = free_product_truncation(tri_k2, 2);
  CHECK(t2.is_connected());
  auto cyc = max_cycle_length(t2, 100);
  CHECK(cyc.status == CycleSearchResult::Status::kExact);
  CHECK(cyc.length == 3);

  const PointedGraph c4{cycle_graph(4), 0};
  const PointedGraph mix[] = {c3, c4, k2};
  Graph t3 = free_product_truncation(mix, 3);
  CHECK(max_cycle_length(t3, 100).length == 4);

  const PointedGraph one[] = {k2};
  CHECK_THROWS(free_product_truncation(one, 2));
  CHECK_THROWS_AS(free_product_truncation(tri_k2, 40, 1000), SizeBudgetExceeded);
}

TEST_CASE("attach_copies glues at the requested vertices") {
  Graph p2 = path_graph(2);
  const Vertex at[] = {0, 1};
  Graph out = attach_copies(p2, at, {cycle_graph(3), 0});
  CHECK(out.vertex_count() == 2 + 2 * 2);
  CHECK(out.edge_count() == 1 + 2 * 3);
  CHECK(out.degree(0) == 3);
}

TEST_CASE("longest cycle search") {
  CHECK(max_cycle_length(regular_tree_ball(3, 3), 10).length == 0);
  CHECK(max_cycle_length(cycle_graph(5), 10).length == 5);
  auto over = max_cycle_length(cycle_graph(12), 5);
  CHECK(over.status == CycleSearchResult::Status::kExceeded);
  auto tiny = max_cycle_length(complete_graph(9), 100, 50);
  CHECK(tiny.status == CycleSearchResult::Status::kUnknown);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(4 + trial % 7, 0.35, rng);
    auto r = max_cycle_length(g, 100);
    REQUIRE(r.status == CycleSearchResult::Status::kExact);
    CHECK(r.length == oracle::longest_cycle(g));
  }
}
