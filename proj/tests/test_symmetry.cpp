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

#include <algorithm>
#include <random>

#include "coarsecolor/generators.hpp"
#include "coarsecolor/symmetry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coarsecolor;

namespace {

// Brute-force motion data from an explicit element list.
std::pair<std::optional<std::size_t>, std::size_t> brute_motion(
    const std::vector<std::vector<int>>& d, const std::vector<Permutation>& group) {
  std::optional<std::size_t> m;
  std::size_t gm = 0;
  for (const auto& f : group) {
    std::size_t moved = 0;
    for (Vertex v = 0; v < f.size(); ++v) {
      if (f(v) == v) continue;
      ++moved;
      gm = std::max<std::size_t>(gm, static_cast<std::size_t>(d[v][f(v)]));
    }
    if (moved > 0) m = m ? std::min(*m, moved) : moved;
  }
  return {m, gm};
}

Coloring random_coloring(std::size_t n, std::mt19937_64& rng) {
  Coloring c(n);
  for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 1);
  return c;
}

constexpr std::size_t kAll = std::size_t{1} << 20;

}  // namespace

TEST_CASE("motion of single permutations") {
  Graph p3 = path_graph(3);
  Metric m(p3);
  auto rep = motion_report(m, Permutation({2, 1, 0}));
  CHECK(rep.motion == 2);
  CHECK(rep.geometric_motion == 2);
  CHECK(rep.displacement == std::vector<std::size_t>{2, 0, 2});
  auto id = motion_report(m, Permutation::identity(3));
  CHECK(id.motion == 0);
  CHECK(id.geometric_motion == 0);

  Graph c8 = cycle_graph(8);
  Metric mc(c8);
  std::vector<Vertex> rot(8);
  for (Vertex v = 0; v < 8; ++v) rot[v] = (v + 3) % 8;
  auto r = motion_report(mc, Permutation(rot));
  CHECK(r.motion == 8);
  CHECK(r.geometric_motion == 3);
}

TEST_CASE("motion of automorphism groups") {
  Graph p3 = path_graph(3);
  Metric m(p3);
  auto gm = graph_motion(m);
  CHECK(gm.order == 2);
  CHECK(gm.motion == 2);
  CHECK(gm.geometric_motion == 2);

  // Legs of lengths 1, 2, 3: the smallest asymmetric tree.
  const Edge tree[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  Graph asym = Graph::from_edges(7, tree);
  Metric ma(asym);
  auto ga = graph_motion(ma);
  CHECK(ga.order == 1);
  CHECK_FALSE(ga.motion.has_value());
  CHECK(ga.geometric_motion == 0);

  Graph c6 = cycle_graph(6);
  Metric mc(c6);
  auto gc = graph_motion(mc);
  CHECK(gc.order == 12);
  CHECK(gc.motion == 4);  // reflection through two opposite vertices
  CHECK(gc.geometric_motion == 3);
}

TEST_CASE("group motion agrees with brute force on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 5;
    Graph g = oracle::random_connected_graph(n, trial % 4, rng);
    Metric m(g);
    auto d = oracle::all_pairs(g);
    auto colors = trial % 2 ? colors_from_binary(random_coloring(n, rng)) : VertexColors{};
    std::vector<Permutation> group;
    for (auto& img : oracle::naive_automorphisms(g, colors)) group.emplace_back(img);
    auto [bm, bgm] = brute_motion(d, group);
    auto got = graph_motion(m, colors);
    CHECK(got.order == group.size());
    CHECK(got.motion == bm);
    CHECK(got.geometric_motion == bgm);
    CHECK(group_motion(m, group).geometric_motion == bgm);
    AutomorphismSearch search(m, colors);
    CHECK(max_geometric_motion(search) == bgm);
  }
}

TEST_CASE("vertex stabilizers") {
  Graph c4 = cycle_graph(4);
  Metric m4(c4);
  auto s = stabilizer(m4, 0);
  CHECK(s.size() == 2);
  for (const auto& f : s) CHECK(f(0) == 0);

  Graph k4 = complete_graph(4);
  Metric mk(k4);
  CHECK(stabilizer(mk, 2).size() == 6);

  Graph star = star_graph(4);
  Metric ms(star);
  CHECK(stabilizer(ms, 0).size() == 24);
  CHECK(stabilizer(ms, 1).size() == 6);
}

TEST_CASE("stabilizer geometric motion on horocyclic products grows with height") {
  std::size_t previous = 0;
  for (std::size_t H = 1; H <= 3; ++H) {
    auto dl = dl_graph(2, 3, H);
    Metric m(dl.graph);
    VertexColors colors(dl.graph.vertex_count(), 0);
    colors[0] = 1;
    AutomorphismSearch search(m, colors);
    const std::size_t gm = max_geometric_motion(search);
    CHECK(gm >= previous);
    previous = gm;
  }
  CHECK(previous > 0);
}

TEST_CASE("distinguishing colorings") {
  Graph p3 = path_graph(3);
  Metric m3(p3);
  CHECK(is_distinguishing(m3, Coloring{0, 0, 1}));
  CHECK_FALSE(is_distinguishing(m3, Coloring{1, 0, 1}));

  Graph c4 = cycle_graph(4);
  Metric m4(c4);
  for (unsigned mask = 0; mask < 16; ++mask) {
    Coloring c(4);
    for (Vertex v = 0; v < 4; ++v) c[v] = (mask >> v) & 1;
    CHECK_FALSE(is_distinguishing(m4, c));
  }
  auto none = search_distinguishing_2coloring(m4, SearchMode::kExhaustive, kAll);
  CHECK(none.status == DistinguishingSearchResult::Status::kNone);
  CHECK(none.tried == 16);

  Graph c6 = cycle_graph(6);
  Metric m6(c6);
  auto found = search_distinguishing_2coloring(m6, SearchMode::kExhaustive, kAll);
  REQUIRE(found.status == DistinguishingSearchResult::Status::kFound);
  CHECK(is_distinguishing(m6, *found.coloring));
  CHECK(oracle::naive_automorphisms(c6, colors_from_binary(*found.coloring)).size() == 1);

  auto sampled = search_distinguishing_2coloring(m6, SearchMode::kRandomized, 500, 7);
  CHECK(sampled.status == DistinguishingSearchResult::Status::kFound);
  auto again = search_distinguishing_2coloring(m6, SearchMode::kRandomized, 500, 7);
  CHECK(again.coloring == sampled.coloring);
  auto hopeless = search_distinguishing_2coloring(m4, SearchMode::kRandomized, 50, 7);
  CHECK(hopeless.status == DistinguishingSearchResult::Status::kUnknown);

  const Edge tree[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  Graph asym = Graph::from_edges(7, tree);
  Metric ma(asym);
  auto trivial = search_distinguishing_2coloring(ma, SearchMode::kExhaustive, kAll);
  REQUIRE(trivial.status == DistinguishingSearchResult::Status::kFound);
  CHECK(*trivial.coloring == Coloring(7, 0));
}

TEST_CASE("exhaustive search agrees with brute force") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      Metric m(g);
      bool exists = false;
      for (unsigned mask = 0; mask < (1u << n) && !exists; ++mask) {
        Coloring c(n);
        for (Vertex v = 0; v < n; ++v) c[v] = (mask >> v) & 1;
        exists = oracle::naive_automorphisms(g, colors_from_binary(c)).size() == 1;
      }
      auto r = search_distinguishing_2coloring(m, SearchMode::kExhaustive, kAll);
      CHECK((r.status == DistinguishingSearchResult::Status::kFound) == exists);
    }
  }
}

TEST_CASE("motion lemma instances") {
  Graph c4 = cycle_graph(4);
  Metric m4(c4);
  auto r4 = motion_lemma_check(m4, 100);
  CHECK(r4.motion == 2);
  CHECK(r4.group_order == 8);
  CHECK_FALSE(r4.hypothesis_met);

  Graph me = motion_example(8);
  Metric mm(me);
  auto rm = motion_lemma_check(mm, 200, 3);
  CHECK(rm.group_order == 2);
  CHECK(rm.motion == 16);
  CHECK(rm.hypothesis_met);
  REQUIRE(rm.samples_to_success.has_value());
  REQUIRE(rm.coloring.has_value());
  CHECK(is_distinguishing(mm, *rm.coloring));
  CHECK_FALSE(preserves_coloring(motion_example_swap(8), *rm.coloring));

  for (std::size_t n = 13; n <= 20; ++n) {
    Graph c = cycle_graph(n);
    Metric mc(c);
    auto r = motion_lemma_check(mc, 200, n);
    // |D_n|^2 = 4n^2 against 2^(n-2) for even n, 2^(n-1) for odd n.
    CHECK(r.hypothesis_met);
    CHECK(r.samples_to_success.has_value());
  }
}

TEST_CASE("projection of automorphisms to the quotient") {
  Graph c200 = cycle_graph(200);
  Metric m(c200);
  auto res = coarse_color_pipeline(m);
  auto id = project_automorphism(m, res.net, res.quotient, res.selection, res.phi,
                                 Permutation::identity(200));
  CHECK(id.is_identity());

  // Rotation by 20 permutes an evenly spaced net cyclically.
  std::vector<Vertex> rot(200);
  for (Vertex v = 0; v < 200; ++v) rot[v] = (v + 20) % 200;
  Permutation f(rot);
  Net evenly{9, 0, {}};
  for (Vertex v = 0; v < 200; v += 20) evenly.members.push_back(v);
  auto q = build_quotient(m, evenly);
  auto psi = build_psi(m, evenly, res.selection);
  Coloring flat(200);
  for (Vertex v = 0; v < 200; ++v) flat[v] = psi[v].value_or(0);
  auto pf = project_automorphism(m, evenly, q, res.selection, flat, f);
  auto pff = project_automorphism(m, evenly, q, res.selection, flat, f.after(f));
  CHECK(pf.after(pf) == pff);
  for (std::size_t i = 0; i < 10; ++i) CHECK(pf(i) == (i + 1) % 10);
  CHECK(is_automorphism(q.graph, pf));
}

TEST_CASE("projection fails for a coloring that leaves copies exchangeable") {
  // Color arbitrarily, let the adversary swap two top-level copies, and
  // anchor the net at a tip it moves: the image of the net is far from it.
  auto cg = counterexample_graph(3);
  Metric m(cg.graph);
  const auto sel = ab_sets(5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto phi = random_coloring(cg.graph.vertex_count(), rng);
    auto f = counterexample_adversary(cg, phi);
    REQUIRE(is_automorphism(cg.graph, f));
    REQUIRE(preserves_coloring(f, phi));
    Vertex anchor = 0;
    for (const auto& copy : cg.copies.back()) {
      if (f(copy.back()) != copy.back()) anchor = copy.back();
    }
    REQUIRE(anchor != 0);
    auto net = build_net(m, 5, anchor);
    REQUIRE(net.members == std::vector<Vertex>{anchor});
    auto q = build_quotient(m, net);
    CHECK(*m.distance(anchor, f(anchor)) == 6);
    CHECK_THROWS_AS(project_automorphism(m, net, q, sel, phi, f), ProjectionError);
  }
}

TEST_CASE("coarse bound check") {
  Graph c6 = cycle_graph(6);
  Metric m6(c6);
  auto found = search_distinguishing_2coloring(m6, SearchMode::kExhaustive, kAll);
  auto ok = check_coarse_bound(m6, colors_from_binary(*found.coloring), 0);
  CHECK(ok.pass);
  CHECK(ok.max_geometric_motion == 0);

  Graph c200 = cycle_graph(200);
  Metric m(c200);
  auto res = coarse_color_pipeline(m);
  auto rep = check_coarse_bound(m, colors_from_binary(res.phi), 37);
  CHECK(rep.pass);
  CHECK(rep.max_geometric_motion <= 37);
  CHECK(rep.violators.empty());

  auto cg = counterexample_graph(3);
  Metric mc(cg.graph);
  auto bad = check_coarse_bound(mc, VertexColors(cg.graph.vertex_count(), 0), 5);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_geometric_motion == 6);
  REQUIRE_FALSE(bad.violators.empty());
  for (const auto& v : bad.violators) {
    CHECK(v.distance > 5);
    CHECK(v.witness(v.from) == v.to);
    CHECK(is_automorphism(cg.graph, v.witness));
  }
  CHECK(check_coarse_bound(mc, VertexColors(cg.graph.vertex_count(), 0), 6).pass);
}
