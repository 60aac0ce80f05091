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
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coarsecolor/graph.hpp"

namespace coarsecolor {

/// A bijection of {0..n-1}, stored as the image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (this * other)(v) = this(other(v)).
  Permutation after(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

using Automorphism = Permutation;

/// Integer vertex labels an automorphism must preserve (f maps each vertex
/// to one with the same label). An empty vector means "no constraint".
using VertexColors = std::vector<int>;

VertexColors colors_from_binary(std::span<const std::uint8_t> coloring);

bool is_automorphism(const Graph& g, const Permutation& f);
/// phi = phi o f.
bool preserves_colors(const Permutation& f, std::span<const int> colors);
bool preserves_coloring(const Permutation& f,
                        std::span<const std::uint8_t> coloring);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::size_t max_automorphisms = 2'000'000;
  std::size_t max_nodes = 50'000'000;
};

/// Backtracking search for (color-preserving) automorphisms. Domain and
/// image partitions are refined in lock step: initial cells come from the
/// vertex colors and degrees, every individualization splits by distance
/// to the individualized vertex, and cells are then refined to an
/// equitable partition. A leaf is accepted only after a full adjacency
/// check, so refinement only prunes.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Metric& metric, VertexColors colors = {});

  /// Every automorphism extending the prescribed pairs (x -> y), sorted
  /// lexicographically by image array; identity first when present.
  /// Throws BudgetExceeded rather than returning a partial list.
  std::vector<Permutation> enumerate(std::span<const Edge> prefix = {},
                                     const SearchBudget& budget = {}) const;

  /// First automorphism (in search order) extending the prefix.
  std::optional<Permutation> find_one(std::span<const Edge> prefix = {},
                                      const SearchBudget& budget = {}) const;

  /// True iff some automorphism other than the identity exists.
  bool has_nontrivial(const SearchBudget& budget = {}) const;

  /// Group order through a point-stabilizer chain; never lists the group.
  boost::multiprecision::cpp_int group_order(
      const SearchBudget& budget = {}) const;

  /// Orbit representative (smallest member) per vertex.
  std::vector<Vertex> orbits(const SearchBudget& budget = {}) const;

  const Metric& metric() const { return *metric_; }
  const VertexColors& colors() const { return colors_; }

 private:
  bool initial(std::span<const Edge> prefix, std::vector<int>& left,
               std::vector<int>& right) const;
  bool individualize(Vertex v, Vertex w, std::vector<int>& left,
                     std::vector<int>& right) const;
  bool refine(std::vector<int>& left, std::vector<int>& right) const;
  template <typename Visitor>
  void search(std::vector<int>& left, std::vector<int>& right,
              Visitor& visit, std::size_t& nodes,
              const SearchBudget& budget) const;

  const Metric* metric_;
  VertexColors colors_;
};

}  // namespace coarsecolor
