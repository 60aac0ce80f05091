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
#include <stdexcept>
#include <string>
#include <vector>

#include "coarsecolor/automorphisms.hpp"
#include "coarsecolor/graph.hpp"
#include "coarsecolor/growth.hpp"
#include "coarsecolor/net.hpp"

namespace coarsecolor {

using Coloring = std::vector<std::uint8_t>;
/// Empty entries are vertices where the partial coloring is undefined.
using PartialColoring = std::vector<std::optional<std::uint8_t>>;

/// Odd radius R >= 5 with A = {2n : 2 <= n <= (R-1)/2} (even radii 4..R-1)
/// and B = {2n+1 : 1 <= n <= (R-1)/2} (odd radii 3..R).
struct RadiusSelection {
  std::size_t R = 0;
  std::vector<std::size_t> A;
  std::vector<std::size_t> B;
};

RadiusSelection ab_sets(std::size_t R);

/// Raised when no admissible R exists up to the cap, or a forced R does
/// not satisfy the capacity inequality.
class RadiusError : public std::runtime_error {
 public:
  RadiusError(const std::string& what, std::optional<Vertex> worst)
      : std::runtime_error(what), worst_vertex(worst) {}
  std::optional<Vertex> worst_vertex;
};

/// Raised when a net vertex has more siblings than admissible codes.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::optional<Vertex> v)
      : std::runtime_error(what), vertex(v) {}
  std::optional<Vertex> vertex;
};

enum class RadiusMode { kStrict, kInterior, kFormula };

/// prod_{r in B} (sigma(r) + 1) > beta(4R + 1).
bool capacity_inequality(const std::vector<BigInt>& sigma,
                         const std::vector<BigInt>& beta, std::size_t R);

inline constexpr std::size_t kDefaultRadiusCap = 101;

/// Smallest odd R >= 5 satisfying the capacity inequality at every vertex
/// (strict), or at every vertex further than 4R+1 from `boundary`
/// (interior).
std::size_t choose_R(const Metric& metric, RadiusMode mode,
                     const std::vector<Vertex>& boundary = {},
                     std::size_t cap = kDefaultRadiusCap);

/// Same search against closed-form sphere/ball sizes.
std::size_t choose_R(const GrowthFormula& formula,
                     std::size_t cap = kDefaultRadiusCap);

/// Checks the capacity inequality for a given R; throws RadiusError naming
/// the vertex with the worst margin when it fails. Returns the number of
/// vertices checked.
std::size_t require_capacity(const Metric& metric, std::size_t R, RadiusMode mode,
                      const std::vector<Vertex>& boundary = {});

/// Partial coloring by distance to the net: 0 on distances 0 and 1, 1 on
/// distance 2, on A, and beyond R; undefined on the B-spheres.
PartialColoring build_psi(const Metric& metric, const Net& net,
                          const RadiusSelection& sel);

/// codes[i][k] belongs to net.members[i] and radius radii[k].
struct SphereCode {
  std::vector<std::size_t> radii;
  std::vector<std::vector<std::size_t>> codes;

  friend bool operator==(const SphereCode&, const SphereCode&) = default;
};

/// capacity[i][k] = |S(members[i], radii[k])|.
std::vector<std::vector<std::size_t>> sphere_capacities(
    const Metric& metric, const Net& net, const RadiusSelection& sel);

enum class CodeStrategy {
  kTreeSiblings,   // distinct among siblings of the spanning tree
  kLevelDistinct,  // distinct within each BFS level
};

std::string to_string(CodeStrategy s);

/// Root gets the zero tuple; every other net vertex the lexicographically
/// smallest nonzero tuple within capacity that differs from the codes
/// already given to its siblings (or to its BFS level).
SphereCode build_xi(const Metric& metric, const Net& net,
                    const SpanningTree& tree, const RadiusSelection& sel,
                    CodeStrategy strategy = CodeStrategy::kTreeSiblings);

struct CodeAssignment {
  SphereCode code;
  CodeStrategy strategy = CodeStrategy::kTreeSiblings;
  bool distinguishing = false;  // Aut(quotient, code) is trivial
};

/// Tree-sibling codes, escalated to level-distinct codes when the former
/// leave a nontrivial code-preserving quotient automorphism.
CodeAssignment assign_codes(const Metric& metric, const Net& net,
                            const QuotientGraph& quotient,
                            const SpanningTree& tree,
                            const RadiusSelection& sel,
                            const SearchBudget& budget = {});

/// Integer label per quotient vertex, equal iff the codes are equal.
VertexColors code_labels(const SphereCode& code);

/// Extends psi: on each B-sphere S(y, r) the xi_r(y) smallest-index
/// vertices get 1 and the rest 0.
Coloring realize_phi(const Metric& metric, const Net& net,
                     const PartialColoring& psi, const SphereCode& xi);

/// Number of 1-colored vertices on each B-sphere of each net vertex.
SphereCode induced_code(const Metric& metric, const Net& net,
                        const Coloring& phi, const RadiusSelection& sel);

struct PipelineOptions {
  std::optional<std::size_t> R;  // chosen by choose_R when empty
  RadiusMode mode = RadiusMode::kStrict;
  std::vector<Vertex> boundary;          // interior mode
  std::optional<GrowthFormula> formula;  // formula mode
  Vertex anchor = 0;
  std::size_t radius_cap = kDefaultRadiusCap;
  bool verify = false;  // run the symmetry check on the result
  SearchBudget budget;
};

struct PipelineReport {
  std::size_t R = 0;
  std::size_t net_size = 0;
  std::size_t quotient_edges = 0;
  CodeStrategy strategy = CodeStrategy::kTreeSiblings;
  bool quotient_distinguishing = false;
  bool degenerate = false;
  /// min over non-root net vertices of (admissible nonzero codes - rivals),
  /// where rivals are siblings or level mates depending on the strategy
  std::optional<BigInt> min_code_slack;
  /// vertices at which the capacity inequality was checked
  std::size_t capacity_checked_vertices = 0;
  /// min over net vertices of prod_{r in B}(sigma_y(r)+1) - beta_y(4R+1)
  BigInt min_capacity_margin;
  // Filled when verification was requested.
  bool verified = false;
  std::size_t max_geometric_motion = 0;
  std::size_t bound = 0;  // 4R + 1
  bool within_bound = false;
};

struct PipelineResult {
  Coloring phi;
  PartialColoring psi;
  Net net;
  QuotientGraph quotient;
  SpanningTree tree;
  RadiusSelection selection;
  SphereCode xi;
  PipelineReport report;
};

PipelineResult coarse_color_pipeline(const Metric& metric,
                                     const PipelineOptions& options = {});

}  // namespace coarsecolor
