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
#include "coarsecolor/coloring.hpp"
#include "coarsecolor/graph.hpp"
#include "coarsecolor/net.hpp"

namespace coarsecolor {

struct MotionReport {
  std::size_t motion = 0;             // vertices not fixed
  std::size_t geometric_motion = 0;   // max displacement
  std::vector<std::size_t> displacement;
};

MotionReport motion_report(const Metric& metric, const Permutation& f);

/// Motion and geometric motion of a group given by its element list.
/// An empty `motion` is the +infinity of the trivial group; its geometric
/// motion is 0.
struct GroupMotion {
  std::optional<std::size_t> motion;
  std::size_t geometric_motion = 0;
  std::size_t order = 0;
};

GroupMotion group_motion(const Metric& metric,
                         const std::vector<Permutation>& group);

/// m and gm of Aut(g) or Aut(g, colors), by full enumeration.
GroupMotion graph_motion(const Metric& metric, const VertexColors& colors = {},
                         const SearchBudget& budget = {});

std::vector<Permutation> stabilizer(const Metric& metric, Vertex x,
                                    const VertexColors& colors = {},
                                    const SearchBudget& budget = {});

bool is_distinguishing(const Metric& metric, const Coloring& phi,
                       const SearchBudget& budget = {});

/// max over f in the group of max_x d(x, f(x)), computed as the largest
/// distance between two vertices of one orbit. Does not list the group.
std::size_t max_geometric_motion(const AutomorphismSearch& search,
                                 const SearchBudget& budget = {});

struct CoarseBoundViolation {
  Vertex from;
  Vertex to;
  std::size_t distance;
  Permutation witness;  // a color-preserving automorphism with f(from) = to
};

struct CoarseBoundReport {
  std::size_t bound = 0;
  std::size_t max_geometric_motion = 0;
  bool pass = false;
  std::vector<CoarseBoundViolation> violators;
};

/// Compares the largest displacement over Aut(g, phi) with `bound`.
CoarseBoundReport check_coarse_bound(const Metric& metric,
                                     const VertexColors& colors,
                                     std::size_t bound,
                                     const SearchBudget& budget = {},
                                     std::size_t max_violators = 5);

enum class SearchMode { kExhaustive, kRandomized };

struct DistinguishingSearchResult {
  enum class Status { kFound, kNone, kUnknown };
  Status status = Status::kUnknown;
  std::optional<Coloring> coloring;
  std::size_t tried = 0;
};

/// Exhaustive mode walks all 2^n colorings in binary order (vertex 0 is
/// the low bit) and is definitive; randomized mode samples `attempts`
/// colorings from a generator seeded with `seed`.
DistinguishingSearchResult search_distinguishing_2coloring(
    const Metric& metric, SearchMode mode, std::size_t attempts,
    std::uint64_t seed = 0, const SearchBudget& budget = {});

struct MotionLemmaReport {
  std::optional<std::size_t> motion;  // empty = trivial group
  std::size_t group_order = 0;
  bool hypothesis_met = false;  // 2^m >= |Aut|^2
  std::optional<std::size_t> samples_to_success;
  std::optional<Coloring> coloring;
  std::size_t samples = 0;
};

MotionLemmaReport motion_lemma_check(const Metric& metric, std::size_t trials,
                                     std::uint64_t seed = 0,
                                     const SearchBudget& budget = {});

class ProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map y -> (the net vertex within distance 1 of f(y)), as a
/// permutation of quotient indices. Verified to be an automorphism of the
/// quotient that preserves the induced sphere code.
Permutation project_automorphism(const Metric& metric, const Net& net,
                                 const QuotientGraph& quotient,
                                 const RadiusSelection& sel,
                                 const Coloring& phi, const Permutation& f);

}  // namespace coarsecolor
