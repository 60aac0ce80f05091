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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coarsecolor/graph.hpp"

namespace coarsecolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed-form sphere and ball sizes of an infinite vertex-transitive family.
struct GrowthFormula {
  std::string name;
  std::size_t max_degree = 0;
  std::function<BigInt(std::size_t)> sigma;
  std::function<BigInt(std::size_t)> beta;
};

/// Two-sided infinite path: sigma(r) = 2, beta(r) = 2r + 1.
GrowthFormula path_formula();
/// d-regular tree: sigma(r) = d(d-1)^(r-1), beta(r) = 1 + d((d-1)^r - 1)/(d-2).
GrowthFormula regular_tree_formula(std::size_t d);
/// Square grid Z^2: sigma(r) = 4r, beta(r) = 2r^2 + 2r + 1.
GrowthFormula grid_formula();

/// Accepts "path", "grid", and "treeD" for D >= 3 (e.g. "tree3").
GrowthFormula formula_by_name(const std::string& name);

/// Sphere and ball data read off a finite graph. Radii are trusted up to
/// the distance of each point from `boundary` (all radii when empty).
struct GraphGrowthSource {
  const Metric* metric = nullptr;
  std::vector<Vertex> points;    // empty = every vertex
  std::vector<Vertex> boundary;  // empty = no truncation boundary
};

using GrowthSource = std::variant<GrowthFormula, GraphGrowthSource>;

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-point sphere/ball sequences up to a radius, shared by the checkers.
struct GrowthSeries {
  std::optional<Vertex> point;  // empty for formula sources
  std::vector<BigInt> sigma;
  std::vector<BigInt> beta;
};

/// Materializes sigma/beta up to r_max for every point of the source.
/// Throws InsufficientData if a point's trusted radius is below r_max.
std::vector<GrowthSeries> growth_series(const GrowthSource& source,
                                        std::size_t r_max);
std::size_t source_max_degree(const GrowthSource& source);

struct ProdSpheresEntry {
  std::optional<Vertex> point;
  BigInt lhs;              // prod_{r=3}^R (sigma(r) + 1)
  BigInt rhs_statement;    // (Delta-1) [beta(4R+1) + 1]^2
  BigInt rhs_proof;        // (Delta-1) [beta(4R+1)]^2
  bool holds_statement = false;
  bool holds_proof = false;
};

struct ProdSpheresReport {
  std::size_t R = 0;
  std::vector<ProdSpheresEntry> entries;
  bool holds_statement() const;
  bool holds_proof() const;
};

ProdSpheresReport prodspheres_check(const GrowthSource& source, std::size_t R);

/// beta >= 2^(sqrt(r)/4), decided exactly.
bool ball_exceeds_root_exponential(const BigInt& beta, std::size_t r);

struct HypothesisEntry {
  std::optional<Vertex> point;
  std::vector<bool> pass;  // parallel to the radii
  std::optional<std::size_t> first_failing_radius;
};

struct HypothesisReport {
  std::vector<std::size_t> radii;
  std::vector<HypothesisEntry> entries;
  bool all_pass() const;
};

HypothesisReport hypothesis_lb_check(const GrowthSource& source,
                                     std::span<const std::size_t> radii);

struct LinearBoundReport {
  Rational epsilon;
  std::size_t r_lo = 0, r_hi = 0;
  /// Least r in [r_lo, r_hi] with eps*beta_x(s) > s for all s in [r, r_hi]
  /// and all points; empty when even r_hi fails.
  std::optional<std::size_t> holds_from;
};

LinearBoundReport linear_bound_check(const GrowthSource& source,
                                     const Rational& epsilon, std::size_t r_lo,
                                     std::size_t r_hi);

// Integer minimization of prod_{i=3}^R (a_i + 1) over positive tuples with
// a_1 <= Delta, a_i <= a_{i-1}(Delta-1), sum a_i = Q - 1.

struct ClaimParameters {
  std::uint64_t delta = 0;
  std::size_t R = 0;
  std::uint64_t Q = 0;
};

/// Throws ParameterError unless Delta > 2, R > 3, Q > Delta^2 + R - 1.
void check_claim_parameters(const ClaimParameters& params);

bool is_feasible_tuple(std::span<const std::uint64_t> a,
                       const ClaimParameters& params);
BigInt tuple_objective(std::span<const std::uint64_t> a);

/// Smallest I in [0, R-2] for which properties (i)-(iii) hold, if any.
/// "Increasing" is read as non-decreasing.
std::optional<std::size_t> claim_properties_index(
    std::span<const std::uint64_t> a, std::uint64_t delta);

struct ClaimWitness {
  std::vector<std::uint64_t> tuple;
  std::size_t index = 0;  // I
};

struct OracleResult {
  BigInt min_value;
  std::vector<std::vector<std::uint64_t>> minimizers;  // lexicographic order
  /// Minimizer meeting the claimed properties: smallest I, then the
  /// lexicographically greatest tuple.
  std::optional<ClaimWitness> witness;
  std::size_t feasible_count = 0;
};

OracleResult min_product_oracle(const ClaimParameters& params,
                                std::size_t budget = 50'000'000);

struct ClaimReport {
  bool holds = false;
  BigInt min_value;
  std::optional<ClaimWitness> witness;
  std::size_t minimizer_count = 0;
  std::size_t minimizers_with_properties = 0;
};

ClaimReport verify_claim_minimum(const ClaimParameters& params,
                                 std::size_t budget = 50'000'000);

}  // namespace coarsecolor
