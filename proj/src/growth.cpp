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

#include "coarsecolor/growth.hpp"

#include <algorithm>
#include <sstream>


namespace coarsecolor {

namespace {

BigInt pow_big(std::uint64_t base, std::size_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace

GrowthFormula path_formula() {
  return {"path", 2,
          [](std::size_t r) -> BigInt { return r == 0 ? BigInt(1) : BigInt(2); },
          [](std::size_t r) -> BigInt { return BigInt(2 * r + 1); }};
}

GrowthFormula regular_tree_formula(std::size_t d) {
  if (d < 3) throw ParameterError("regular tree formula needs d >= 3");
  return {"tree" + std::to_string(d), d,
          [d](std::size_t r) -> BigInt {
            return r == 0 ? BigInt(1) : BigInt(d) * pow_big(d - 1, r - 1);
          },
          [d](std::size_t r) -> BigInt {
            return 1 + BigInt(d) * (pow_big(d - 1, r) - 1) / (d - 2);
          }};
}

GrowthFormula grid_formula() {
  return {"grid", 4,
          [](std::size_t r) -> BigInt { return r == 0 ? BigInt(1) : BigInt(4 * r); },
          [](std::size_t r) -> BigInt {
            BigInt rr(r);
            return 2 * rr * rr + 2 * rr + 1;
          }};
}

GrowthFormula formula_by_name(const std::string& name) {
  if (name == "path") return path_formula();
  if (name == "grid") return grid_formula();
  if (name.rfind("tree", 0) == 0 && name.size() > 4) {
    std::size_t d = 0;
    try {
      d = std::stoul(name.substr(4));
    } catch (const std::exception&) {
      throw ParameterError("unknown growth formula: " + name);
    }
    return regular_tree_formula(d);
  }
  throw ParameterError("unknown growth formula: " + name);
}

std::size_t source_max_degree(const GrowthSource& source) {
  if (const auto* f = std::get_if<GrowthFormula>(&source)) return f->max_degree;
  const auto& gs = std::get<GraphGrowthSource>(source);
  return gs.metric->graph().max_degree();
}

std::vector<GrowthSeries> growth_series(const GrowthSource& source,
                                        std::size_t r_max) {
  std::vector<GrowthSeries> out;
  if (const auto* f = std::get_if<GrowthFormula>(&source)) {
    GrowthSeries s;
    for (std::size_t r = 0; r <= r_max; ++r) {
      s.sigma.push_back(f->sigma(r));
      s.beta.push_back(f->beta(r));
    }
    out.push_back(std::move(s));
    return out;
  }
  const auto& gs = std::get<GraphGrowthSource>(source);
  const Graph& g = gs.metric->graph();
  std::vector<Vertex> points = gs.points;
  if (points.empty()) {
    points.resize(g.vertex_count());
    for (Vertex v = 0; v < points.size(); ++v) points[v] = v;
  }
  std::vector<std::int32_t> to_boundary;
  if (!gs.boundary.empty()) {
    to_boundary = bfs_distances(g, std::span<const Vertex>(gs.boundary));
  }
  for (Vertex x : points) {
    if (!to_boundary.empty()) {
      std::int32_t reach = to_boundary[x];
      if (reach != kUnreachable && static_cast<std::size_t>(reach) < r_max) {
        std::ostringstream msg;
        msg << "vertex " << x << " is " << reach
            << " from the truncation boundary; radius " << r_max
            << " is required";
        throw InsufficientData(msg.str());
      }
    }
    auto p = gs.metric->growth_profile(x, r_max);
    GrowthSeries s;
    s.point = x;
    for (std::size_t r = 0; r <= r_max; ++r) {
      s.sigma.emplace_back(p.sigma[r]);
      s.beta.emplace_back(p.beta[r]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool ProdSpheresReport::holds_statement() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.holds_statement; });
}

bool ProdSpheresReport::holds_proof() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.holds_proof; });
}

ProdSpheresReport prodspheres_check(const GrowthSource& source, std::size_t R) {
  if (R < 3) throw ParameterError("prodspheres needs R >= 3");
  const std::size_t delta = source_max_degree(source);
  if (delta < 1) throw ParameterError("prodspheres needs max degree >= 1");
  ProdSpheresReport report;
  report.R = R;
  for (auto& s : growth_series(source, 4 * R + 1)) {
    ProdSpheresEntry e;
    e.point = s.point;
    e.lhs = 1;
    for (std::size_t r = 3; r <= R; ++r) e.lhs *= s.sigma[r] + 1;
    const BigInt& ball = s.beta[4 * R + 1];
    e.rhs_statement = BigInt(delta - 1) * (ball + 1) * (ball + 1);
    e.rhs_proof = BigInt(delta - 1) * ball * ball;
    e.holds_statement = e.lhs > e.rhs_statement;
    e.holds_proof = e.lhs > e.rhs_proof;
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool ball_exceeds_root_exponential(const BigInt& beta, std::size_t r) {
  // beta >= 2^(sqrt(r)/4)  <=>  b := beta^4 >= 2^sqrt(r).
  if (beta < 1) return false;
  const BigInt b = boost::multiprecision::pow(beta, 4);
  const std::size_t floor_log = boost::multiprecision::msb(b);  // 2^k <= b
  const std::size_t root = static_cast<std::size_t>(
      boost::multiprecision::sqrt(BigInt(r)).convert_to<std::uint64_t>());
  if (root * root == r) return b >= pow_big(2, root);
  // sqrt(r) is irrational here.
  if (r <= floor_log * floor_log) return true;
  if (r >= (floor_log + 1) * (floor_log + 1)) return false;
  // floor_log < sqrt(r) < floor_log + 1. Bracket log2(b) by binary digits
  // computed with outward-rounded fixed-point squaring, then compare the
  // bracket's square with r. Equality is impossible (2^sqrt(r) is
  // transcendental), so refining always terminates.
  for (std::size_t m = 64; m <= (std::size_t{1} << 14); m *= 2) {
    const std::size_t P = 2 * m + 64;
    BigInt lo = (b << P) >> floor_log;  // x = b / 2^k in [1, 2), scaled by 2^P
    BigInt hi = lo + 1;
    const BigInt two = BigInt(1) << (P + 1);
    const BigInt unit = BigInt(1) << P;
    BigInt digits = 0;
    bool decided = true;
    for (std::size_t i = 0; i < m; ++i) {
      lo = (lo * lo) >> P;
      hi = (hi * hi + unit - 1) >> P;
      digits <<= 1;
      if (lo >= two) {
        digits |= 1;
        lo >>= 1;
        hi = (hi + 1) >> 1;
      } else if (hi >= two) {
        decided = false;
        break;
      }
    }
    if (!decided) continue;
    // log2(b) lies in [lower, lower + 1] / 2^m.
    const BigInt lower = (BigInt(floor_log) << m) + digits;
    const BigInt scaled_r = BigInt(r) << (2 * m);
    if (lower * lower >= scaled_r) return true;
    if ((lower + 1) * (lower + 1) < scaled_r) return false;
  }
  throw std::runtime_error("root-exponential comparison did not resolve");
}

bool HypothesisReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
    return !e.first_failing_radius.has_value();
  });
}

HypothesisReport hypothesis_lb_check(const GrowthSource& source,
                                     std::span<const std::size_t> radii) {
  HypothesisReport report;
  report.radii.assign(radii.begin(), radii.end());
  if (radii.empty()) return report;
  std::vector<std::size_t> sorted(radii.begin(), radii.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t r_max = sorted.back();
  if (const auto* f = std::get_if<GrowthFormula>(&source)) {
    // Formula balls are evaluated pointwise; no need for the whole series.
    HypothesisEntry e;
    for (std::size_t r : radii) {
      bool ok = ball_exceeds_root_exponential(f->beta(r), r);
      e.pass.push_back(ok);
    }
    for (std::size_t r : sorted) {
      if (!ball_exceeds_root_exponential(f->beta(r), r)) {
        e.first_failing_radius = r;
        break;
      }
    }
    report.entries.push_back(std::move(e));
    return report;
  }
  for (auto& s : growth_series(source, r_max)) {
    HypothesisEntry e;
    e.point = s.point;
    for (std::size_t r : radii) {
      e.pass.push_back(ball_exceeds_root_exponential(s.beta[r], r));
    }
    for (std::size_t r : sorted) {
      if (!ball_exceeds_root_exponential(s.beta[r], r)) {
        e.first_failing_radius = r;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

LinearBoundReport linear_bound_check(const GrowthSource& source,
                                     const Rational& epsilon, std::size_t r_lo,
                                     std::size_t r_hi) {
  if (r_lo > r_hi) throw ParameterError("empty radius range");
  if (epsilon <= 0) throw ParameterError("epsilon must be positive");
  LinearBoundReport report{epsilon, r_lo, r_hi, std::nullopt};
  const BigInt num = boost::multiprecision::numerator(epsilon);
  const BigInt den = boost::multiprecision::denominator(epsilon);
  std::vector<bool> holds(r_hi - r_lo + 1, true);
  auto record = [&](std::size_t r, const BigInt& beta) {
    // eps * beta > r  <=>  num * beta > den * r (den > 0).
    if (!(num * beta > den * BigInt(r))) holds[r - r_lo] = false;
  };
  if (const auto* f = std::get_if<GrowthFormula>(&source)) {
    for (std::size_t r = r_lo; r <= r_hi; ++r) record(r, f->beta(r));
  } else {
    for (auto& s : growth_series(source, r_hi)) {
      for (std::size_t r = r_lo; r <= r_hi; ++r) record(r, s.beta[r]);
    }
  }
  for (std::size_t r = r_hi + 1; r-- > r_lo;) {
    if (!holds[r - r_lo]) break;
    report.holds_from = r;
  }
  return report;
}

void check_claim_parameters(const ClaimParameters& p) {
  if (p.delta <= 2) throw ParameterError("requires Delta > 2");
  if (p.R <= 3) throw ParameterError("requires R > 3");
  if (p.Q <= p.delta * p.delta + p.R - 1) {
    std::ostringstream msg;
    msg << "requires Q > Delta^2 + R - 1 = " << (p.delta * p.delta + p.R - 1);
    throw ParameterError(msg.str());
  }
}

bool is_feasible_tuple(std::span<const std::uint64_t> a,
                       const ClaimParameters& p) {
  if (a.size() != p.R || a.empty()) return false;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) return false;
    if (i == 0 && a[i] > p.delta) return false;
    if (i > 0 && a[i] > a[i - 1] * (p.delta - 1)) return false;
    sum += a[i];
  }
  return sum == p.Q - 1;
}

BigInt tuple_objective(std::span<const std::uint64_t> a) {
  BigInt value = 1;
  for (std::size_t i = 2; i < a.size(); ++i) value *= a[i] + 1;
  return value;
}

std::optional<std::size_t> claim_properties_index(
    std::span<const std::uint64_t> a, std::uint64_t delta) {
  const std::size_t R = a.size();
  if (R < 2) return std::nullopt;
  // (i)
  if (a[0] != delta || a[1] != delta * (delta - 1)) return std::nullopt;
  const std::uint64_t cap = delta * (delta - 1);
  // a_j is a[j-1]; the run a_2..a_{2+I} covers a[1..1+I].
  for (std::size_t I = 0; I + 2 <= R; ++I) {
    bool ok = true;
    for (std::size_t j = 2; j <= 1 + I && ok; ++j) {
      if (a[j] < a[j - 1]) ok = false;  // (ii) non-decreasing run
    }
    for (std::size_t j = 2 + I; j < R && ok; ++j) {
      if (a[j] >= cap) ok = false;  // (ii) tail below Delta(Delta-1)
    }
    for (std::size_t j = 2; j <= 1 + I && ok; ++j) {
      // (iii) a_i + 1 > (a_{i-1} - 1)(Delta - 1) for 3 <= i <= 2+I
      if (!(a[j] + 1 > (a[j - 1] - 1) * (delta - 1))) ok = false;
    }
    if (ok) return I;
  }
  return std::nullopt;
}

OracleResult min_product_oracle(const ClaimParameters& p, std::size_t budget) {
  check_claim_parameters(p);
  OracleResult result;
  const std::uint64_t total = p.Q - 1;
  std::vector<std::uint64_t> a(p.R, 0);
  bool have_min = false;
  std::size_t steps = 0;
  // Coordinates are chosen left to right; every later coordinate needs at
  // least 1, which bounds the current one by the remaining sum.
  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (++steps > budget) {
      throw ParameterError("claim oracle exceeded its enumeration budget");
    }
    const std::size_t left_after = p.R - i - 1;
    if (i + 1 == p.R) {
      const std::uint64_t hi = i == 0 ? p.delta : a[i - 1] * (p.delta - 1);
      if (remaining < 1 || remaining > hi) return;
      a[i] = remaining;
      ++result.feasible_count;
      BigInt value = tuple_objective(a);
      if (!have_min || value < result.min_value) {
        have_min = true;
        result.min_value = value;
        result.minimizers.clear();
      }
      if (value == result.min_value) result.minimizers.push_back(a);
      return;
    }
    std::uint64_t hi = i == 0 ? p.delta : a[i - 1] * (p.delta - 1);
    if (remaining < left_after) return;
    hi = std::min<std::uint64_t>(hi, remaining - left_after);
    for (std::uint64_t v = 1; v <= hi; ++v) {
      a[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
  if (!have_min) throw ParameterError("no feasible tuple for these parameters");
  // Smallest I first, then the lexicographically greatest tuple (the tail
  // in descending order).
  for (auto it = result.minimizers.rbegin(); it != result.minimizers.rend(); ++it) {
    if (auto I = claim_properties_index(*it, p.delta)) {
      if (!result.witness || *I < result.witness->index) {
        result.witness = ClaimWitness{*it, *I};
      }
    }
  }
  return result;
}

ClaimReport verify_claim_minimum(const ClaimParameters& p, std::size_t budget) {
  OracleResult oracle = min_product_oracle(p, budget);
  ClaimReport report;
  report.min_value = oracle.min_value;
  report.witness = oracle.witness;
  report.holds = oracle.witness.has_value();
  report.minimizer_count = oracle.minimizers.size();
  for (const auto& m : oracle.minimizers) {
    if (claim_properties_index(m, p.delta)) ++report.minimizers_with_properties;
  }
  return report;
}

}  // namespace coarsecolor
