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

#include "coarsecolor/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace coarsecolor {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("composing permutations of different size");
  }
  std::vector<Vertex> out(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) out[v] = image_[other.image_[v]];
  Permutation p;
  p.image_ = std::move(out);
  return p;
}

VertexColors colors_from_binary(std::span<const std::uint8_t> coloring) {
  return VertexColors(coloring.begin(), coloring.end());
}

bool is_automorphism(const Graph& g, const Permutation& f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != g.degree(f(u))) return false;
    for (Vertex v : g.neighbors(u)) {
      if (!g.has_edge(f(u), f(v))) return false;
    }
  }
  return true;
}

bool preserves_colors(const Permutation& f, std::span<const int> colors) {
  if (colors.empty()) return true;
  for (Vertex v = 0; v < f.size(); ++v) {
    if (colors[f(v)] != colors[v]) return false;
  }
  return true;
}

bool preserves_coloring(const Permutation& f,
                        std::span<const std::uint8_t> coloring) {
  for (Vertex v = 0; v < f.size(); ++v) {
    if (coloring[f(v)] != coloring[v]) return false;
  }
  return true;
}

AutomorphismSearch::AutomorphismSearch(const Metric& metric,
                                       VertexColors colors)
    : metric_(&metric), colors_(std::move(colors)) {
  if (!colors_.empty() && colors_.size() != metric.graph().vertex_count()) {
    throw std::invalid_argument("vertex colors do not match vertex count");
  }
}

namespace {

// Replaces each side's cell ids by canonical ids derived from the union of
// keys, and reports whether both sides have identical cell sizes.
template <typename Key>
bool relabel(std::vector<Key>& left_keys, std::vector<Key>& right_keys,
             std::vector<int>& left, std::vector<int>& right,
             std::size_t& classes) {
  std::map<Key, int> ids;
  for (const auto& k : left_keys) ids.emplace(k, 0);
  for (const auto& k : right_keys) ids.emplace(k, 0);
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  std::vector<int> count(ids.size(), 0);
  for (std::size_t v = 0; v < left.size(); ++v) {
    left[v] = ids[left_keys[v]];
    ++count[left[v]];
  }
  for (std::size_t v = 0; v < right.size(); ++v) {
    right[v] = ids[right_keys[v]];
    --count[right[v]];
  }
  classes = ids.size();
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 0; });
}

std::size_t count_classes(const std::vector<int>& cells) {
  std::vector<int> sorted(cells);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

bool AutomorphismSearch::refine(std::vector<int>& left,
                                std::vector<int>& right) const {
  const Graph& g = metric_->graph();
  const std::size_t n = g.vertex_count();
  std::size_t classes = count_classes(left);
  std::vector<std::vector<int>> left_keys(n), right_keys(n);
  auto make_key = [&](const std::vector<int>& cells, Vertex v,
                      std::vector<int>& key) {
    key.clear();
    key.push_back(cells[v]);
    for (Vertex w : g.neighbors(v)) key.push_back(cells[w]);
    std::sort(key.begin() + 1, key.end());
  };
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      make_key(left, v, left_keys[v]);
      make_key(right, v, right_keys[v]);
    }
    std::size_t refined = 0;
    if (!relabel(left_keys, right_keys, left, right, refined)) return false;
    if (refined == classes) return true;
    classes = refined;
  }
}

bool AutomorphismSearch::individualize(Vertex v, Vertex w,
                                       std::vector<int>& left,
                                       std::vector<int>& right) const {
  auto dv = metric_->distances_from(v);
  auto dw = metric_->distances_from(w);
  const std::size_t n = left.size();
  std::vector<std::pair<int, int>> left_keys(n), right_keys(n);
  for (std::size_t u = 0; u < n; ++u) {
    left_keys[u] = {left[u], dv[u]};
    right_keys[u] = {right[u], dw[u]};
  }
  std::size_t classes = 0;
  if (!relabel(left_keys, right_keys, left, right, classes)) return false;
  return refine(left, right);
}

bool AutomorphismSearch::initial(std::span<const Edge> prefix,
                                 std::vector<int>& left,
                                 std::vector<int>& right) const {
  const Graph& g = metric_->graph();
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<int, int>> keys(n);
  for (Vertex v = 0; v < n; ++v) {
    keys[v] = {colors_.empty() ? 0 : colors_[v], static_cast<int>(g.degree(v))};
  }
  auto right_keys = keys;
  left.assign(n, 0);
  right.assign(n, 0);
  std::size_t classes = 0;
  relabel(keys, right_keys, left, right, classes);
  if (!refine(left, right)) return false;
  for (const auto& [x, y] : prefix) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (left[x] != right[y]) return false;
    if (!individualize(x, y, left, right)) return false;
  }
  return true;
}

template <typename Visitor>
void AutomorphismSearch::search(std::vector<int>& left,
                                std::vector<int>& right, Visitor& visit,
                                std::size_t& nodes,
                                const SearchBudget& budget) const {
  if (++nodes > budget.max_nodes) {
    std::ostringstream msg;
    msg << "automorphism search exceeded node budget (" << budget.max_nodes
        << ")";
    throw BudgetExceeded(msg.str());
  }
  const std::size_t n = left.size();
  std::vector<std::size_t> cell_size(n, 0);
  for (int c : left) ++cell_size[static_cast<std::size_t>(c)];

  // Target cell: smallest non-singleton, ties to the smallest cell id.
  int target = -1;
  for (std::size_t c = 0; c < n; ++c) {
    if (cell_size[c] > 1 &&
        (target < 0 || cell_size[c] < cell_size[static_cast<std::size_t>(target)])) {
      target = static_cast<int>(c);
    }
  }
  if (target < 0) {
    std::vector<Vertex> by_cell(n);
    for (Vertex w = 0; w < n; ++w) by_cell[static_cast<std::size_t>(right[w])] = w;
    std::vector<Vertex> image(n);
    for (Vertex v = 0; v < n; ++v) image[v] = by_cell[static_cast<std::size_t>(left[v])];
    Permutation f(std::move(image));
    if (is_automorphism(metric_->graph(), f) && preserves_colors(f, colors_)) {
      visit(std::move(f));
    }
    return;
  }
  Vertex v = 0;
  while (left[v] != target) ++v;
  for (Vertex w = 0; w < n; ++w) {
    if (right[w] != target) continue;
    auto l2 = left;
    auto r2 = right;
    if (!individualize(v, w, l2, r2)) continue;
    search(l2, r2, visit, nodes, budget);
    if (visit.done()) return;
  }
}

namespace {

struct Collector {
  std::vector<Permutation>* out;
  std::size_t limit;
  std::size_t stop_after = 0;  // 0 = never stop early
  void operator()(Permutation f) {
    if (out->size() >= limit) {
      std::ostringstream msg;
      msg << "automorphism enumeration exceeded result budget (" << limit
          << ")";
      throw BudgetExceeded(msg.str());
    }
    out->push_back(std::move(f));
  }
  bool done() const { return stop_after != 0 && out->size() >= stop_after; }
};

}  // namespace

std::vector<Permutation> AutomorphismSearch::enumerate(
    std::span<const Edge> prefix, const SearchBudget& budget) const {
  std::vector<Permutation> out;
  std::vector<int> left, right;
  if (!initial(prefix, left, right)) return out;
  Collector collect{&out, budget.max_automorphisms};
  std::size_t nodes = 0;
  search(left, right, collect, nodes, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> AutomorphismSearch::find_one(
    std::span<const Edge> prefix, const SearchBudget& budget) const {
  std::vector<Permutation> out;
  std::vector<int> left, right;
  if (!initial(prefix, left, right)) return std::nullopt;
  Collector collect{&out, 1, 1};
  std::size_t nodes = 0;
  search(left, right, collect, nodes, budget);
  if (out.empty()) return std::nullopt;
  return out.front();
}

bool AutomorphismSearch::has_nontrivial(const SearchBudget& budget) const {
  std::vector<Permutation> out;
  std::vector<int> left, right;
  if (!initial({}, left, right)) return false;
  Collector collect{&out, 2, 2};
  std::size_t nodes = 0;
  search(left, right, collect, nodes, budget);
  return out.size() > 1;
}

boost::multiprecision::cpp_int AutomorphismSearch::group_order(
    const SearchBudget& budget) const {
  const std::size_t n = metric_->graph().vertex_count();
  boost::multiprecision::cpp_int order = 1;
  std::vector<Edge> base;
  while (true) {
    std::vector<int> left, right;
    if (!initial(base, left, right)) {
      throw std::logic_error("stabilizer chain lost the identity");
    }
    std::vector<std::size_t> cell_size(n, 0);
    for (int c : left) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (cell_size[c] > 1 &&
          (target < 0 ||
           cell_size[c] < cell_size[static_cast<std::size_t>(target)])) {
        target = static_cast<int>(c);
      }
    }
    if (target < 0) return order;
    Vertex v = 0;
    while (left[v] != target) ++v;
    std::size_t orbit = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (left[w] != target) continue;
      auto trial = base;
      trial.emplace_back(v, w);
      if (w == v || find_one(trial, budget)) ++orbit;
    }
    order *= orbit;
    base.emplace_back(v, v);
  }
}

std::vector<Vertex> AutomorphismSearch::orbits(
    const SearchBudget& budget) const {
  const std::size_t n = metric_->graph().vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a; else parent[a] = b;
  };
  std::vector<int> left, right;
  initial({}, left, right);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (left[x] != left[y] || find(x) == find(y)) continue;
      const Edge pair[] = {{x, y}};
      if (auto f = find_one(pair, budget)) {
        for (Vertex u = 0; u < n; ++u) unite(u, (*f)(u));
      }
    }
  }
  std::vector<Vertex> rep(n);
  for (Vertex v = 0; v < n; ++v) rep[v] = find(v);
  return rep;
}

}  // namespace coarsecolor
