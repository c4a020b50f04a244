/* Copyright 2026 The setint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file balance.hpp
 * @brief Sign balancing min_{a_i = +-1} ||sum a_i x_i||, infratype constant
 *        estimates, and point selection a_i in A_i approximating targets
 *        b_i in conv A_i with ||sum (a_i - b_i)|| <= C1 (sum d_i^p)^(1/p).
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "setint/errors.hpp"
#include "setint/multifunction.hpp"
#include "setint/partition.hpp"
#include "setint/random.hpp"
#include "setint/setops.hpp"
#include "setint/spaces.hpp"

namespace setint {

inline constexpr std::size_t kMaxExactSigns = 24;
inline constexpr double kMaxSelectionCombos = 1e6;

struct SignBalance {
  std::vector<int> signs;
  double value = 0.0;
};

namespace detail {

inline void check_family(const std::vector<Vector>& xs, const SpaceDescriptor& space) {
  if (xs.empty()) throw invalid_argument("sign balancing needs at least one vector");
  for (const auto& x : xs) check_dim(space, x.size(), "sign balancing");
}

inline double signed_norm(const std::vector<Vector>& xs, const std::vector<int>& signs, const SpaceDescriptor& space) {
  Vector s(space.dim(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) s[j] += signs[i] * xs[i][j];
  return norm_unchecked(space.norm(), s);
}

}  // namespace detail

/// Global minimum over the 2^(n-1) sign patterns with the first sign fixed to +1,
/// walked in Gray-code order. The returned value is recomputed from scratch.
inline SignBalance sign_balance_exact(const std::vector<Vector>& xs, const SpaceDescriptor& space) {
  detail::check_family(xs, space);
  const std::size_t n = xs.size();
  if (n > kMaxExactSigns)
    throw resource_limit("sign_balance_exact: " + std::to_string(n) + " vectors exceed the limit of " +
                         std::to_string(kMaxExactSigns) + "; use the greedy balancer");
  const std::size_t d = space.dim();
  std::vector<int> signs(n, 1);
  Vector sum(d, 0.0);
  for (const auto& x : xs)
    for (std::size_t j = 0; j < d; ++j) sum[j] += x[j];
  double best = detail::norm_unchecked(space.norm(), sum);
  std::vector<int> best_signs = signs;
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < patterns; ++g) {
    // Bit flipped between gray(g-1) and gray(g); sign index is bit + 1.
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    signs[i] = -signs[i];
    const double f = 2.0 * signs[i];
    for (std::size_t j = 0; j < d; ++j) sum[j] += f * xs[i][j];
    const double v = detail::norm_unchecked(space.norm(), sum);
    if (v < best) {
      best = v;
      best_signs = signs;
    }
  }
  return {best_signs, detail::signed_norm(xs, best_signs, space)};
}

/// Vectors in decreasing norm order; each sign minimizes the running sum's norm.
inline SignBalance sign_balance_greedy(const std::vector<Vector>& xs, const SpaceDescriptor& space) {
  detail::check_family(xs, space);
  const std::size_t n = xs.size(), d = space.dim();
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = detail::norm_unchecked(space.norm(), xs[i]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  std::vector<int> signs(n, 1);
  Vector sum(d, 0.0), plus(d), minus(d);
  for (std::size_t i : order) {
    for (std::size_t j = 0; j < d; ++j) {
      plus[j] = sum[j] + xs[i][j];
      minus[j] = sum[j] - xs[i][j];
    }
    if (detail::norm_unchecked(space.norm(), minus) < detail::norm_unchecked(space.norm(), plus)) {
      signs[i] = -1;
      sum.swap(minus);
    } else {
      sum.swap(plus);
    }
  }
  return {signs, detail::signed_norm(xs, signs, space)};
}

/// min_signs ||sum a_i x_i|| / (sum ||x_i||^p)^(1/p).
inline double infratype_ratio(const std::vector<Vector>& xs, double p, const SpaceDescriptor& space) {
  if (!(p > 0.0)) throw invalid_argument("infratype_ratio: p must be positive");
  detail::check_family(xs, space);
  double den = 0.0;
  for (const auto& x : xs) den += std::pow(detail::norm_unchecked(space.norm(), x), p);
  if (!(den > 0.0)) throw invalid_argument("infratype_ratio: family of zero vectors");
  return sign_balance_exact(xs, space).value / std::pow(den, 1.0 / p);
}

/**
 * Lower estimate of the best infratype-p constant of the space: the largest
 * ratio over structured probes ({e_1, ..., e_k} for k = 1 .. min(dim, nMax))
 * followed by `trials` seeded Gaussian families. Trial t draws its size
 * uniformly in [2, nMax], then size * dim normals row by row; zero vectors are
 * dropped.
 */
inline double estimate_infratype_constant(const SpaceDescriptor& space, double p, std::size_t trials,
                                          std::size_t n_max, std::uint64_t seed) {
  if (trials < 1) throw invalid_argument("estimate_infratype_constant: trials must be >= 1");
  if (n_max < 2 || n_max > kMaxExactSigns)
    throw invalid_argument("estimate_infratype_constant: nMax must lie in [2, 24]");
  const std::size_t d = space.dim();
  double best = 0.0;
  for (std::size_t k = 1; k <= std::min(d, n_max); ++k) {
    std::vector<Vector> xs(k, Vector(d, 0.0));
    for (std::size_t i = 0; i < k; ++i) xs[i][i] = 1.0;
    best = std::max(best, infratype_ratio(xs, p, space));
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(2, static_cast<std::int64_t>(n_max)));
    std::vector<Vector> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector x(d);
      for (auto& c : x) c = rng.normal();
      if (detail::norm_unchecked(space.norm(), x) > 0.0) xs.push_back(std::move(x));
    }
    if (!xs.empty()) best = std::max(best, infratype_ratio(xs, p, space));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Selection
// ---------------------------------------------------------------------------

inline constexpr double kTargetTolerance = 1e-9;

/// Sets A_1..A_n with targets b_i in conv A_i and diameters d_i.
struct SelectionProblem {
  std::vector<PointSet> sets;
  std::vector<Vector> targets;
  std::vector<double> diameters;
};

/// Validates the targets against the hulls and fills the diameters.
inline SelectionProblem make_selection_problem(std::vector<PointSet> sets, std::vector<Vector> targets,
                                               double hull_tol = 1e-10) {
  if (sets.empty()) throw invalid_argument("selection: no sets");
  if (sets.size() != targets.size()) throw invalid_argument("selection: one target per set is required");
  const auto& space = sets.front().space();
  SelectionProblem prob;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].dim() != space.dim() || sets[i].space().norm() != space.norm())
      throw invalid_argument("selection: sets live in different spaces");
    detail::check_dim(space, targets[i].size(), "selection target");
    const auto h = dist_point_to_hull(space, targets[i], sets[i], hull_tol);
    if (h.value > kTargetTolerance)
      throw invalid_argument("selection: target " + std::to_string(i) + " lies outside the hull of its set (distance " +
                             std::to_string(h.value) + ")");
    prob.diameters.push_back(sets[i].diameter());
  }
  prob.sets = std::move(sets);
  prob.targets = std::move(targets);
  return prob;
}

enum class SelectMode { Greedy, Exhaustive };

struct Selection {
  std::vector<std::size_t> choice;  // index into sets[i]
  std::vector<Vector> points;
  double deviation = 0.0;  // ||sum (a_i - b_i)||
};

namespace detail {

inline Selection finish_selection(const SelectionProblem& prob, std::vector<std::size_t> choice) {
  const auto& space = prob.sets.front().space();
  Selection s;
  Vector r(space.dim(), 0.0);
  for (std::size_t i = 0; i < choice.size(); ++i) {
    auto a = prob.sets[i].point(choice[i]);
    s.points.emplace_back(a.begin(), a.end());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += a[j] - prob.targets[i][j];
  }
  s.choice = std::move(choice);
  s.deviation = norm_unchecked(space.norm(), r);
  return s;
}

}  // namespace detail

/**
 * Greedy: in order, a_i minimizes ||r + a_i - b_i|| for the running deviation r.
 * In L2 some a_i has <a_i - b_i, r> <= 0, so ||r||^2 grows by at most d_i^2 per
 * step and the deviation never exceeds (sum d_i^2)^(1/2).
 * Exhaustive: true minimum over all prod |A_i| <= 10^6 combinations.
 */
inline Selection select_points(const SelectionProblem& prob, SelectMode mode) {
  if (prob.sets.empty()) throw invalid_argument("selection: no sets");
  const auto& space = prob.sets.front().space();
  const std::size_t n = prob.sets.size(), d = space.dim();
  const Norm nrm = space.norm();
  if (mode == SelectMode::Greedy) {
    std::vector<std::size_t> choice(n);
    Vector r(d, 0.0), trial(d);
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < prob.sets[i].size(); ++k) {
        auto a = prob.sets[i].point(k);
        for (std::size_t j = 0; j < d; ++j) trial[j] = r[j] + a[j] - prob.targets[i][j];
        const double v = detail::norm_unchecked(nrm, trial);
        if (v < best) {
          best = v;
          choice[i] = k;
        }
      }
      auto a = prob.sets[i].point(choice[i]);
      for (std::size_t j = 0; j < d; ++j) r[j] += a[j] - prob.targets[i][j];
    }
    return detail::finish_selection(prob, std::move(choice));
  }

  double combos = 1.0;
  for (const auto& s : prob.sets) combos *= static_cast<double>(s.size());
  if (combos > kMaxSelectionCombos)
    throw resource_limit("select_points: " + std::to_string(static_cast<long long>(combos)) +
                         " combinations exceed the exhaustive limit of 10^6");
  std::vector<std::size_t> choice(n), best_choice(n);
  std::vector<Vector> partial(n + 1, Vector(d, 0.0));
  double best = std::numeric_limits<double>::infinity();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const double v = detail::norm_unchecked(nrm, partial[n]);
      if (v < best) {
        best = v;
        best_choice = choice;
      }
      return;
    }
    for (std::size_t k = 0; k < prob.sets[i].size(); ++k) {
      auto a = prob.sets[i].point(k);
      for (std::size_t j = 0; j < d; ++j) partial[i + 1][j] = partial[i][j] + a[j] - prob.targets[i][j];
      choice[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return detail::finish_selection(prob, std::move(best_choice));
}

/// C1 (sum d_i^p)^(1/p) for the problem's diameters.
inline double selection_bound(const SelectionProblem& prob, double p, double C) {
  double s = 0.0;
  for (double di : prob.diameters) s += std::pow(di, p);
  return c1_constant(p, C) * std::pow(s, 1.0 / p);
}

/// (sum d_i^2)^(1/2), the L2 greedy guarantee.
inline double greedy_l2_bound(const SelectionProblem& prob) {
  double s = 0.0;
  for (double di : prob.diameters) s += di * di;
  return std::sqrt(s);
}

struct PowerCheck {
  double lhs = 0.0;  // sum d_i^p
  double rhs = 0.0;  // (max d_i)^(p-1)
  bool holds = false;
};

/// For positive d_i summing to 1: sum d_i^p <= (max d_i)^(p-1).
inline PowerCheck lemma_d_power_check(const std::vector<double>& ds, double p) {
  if (ds.empty()) throw invalid_argument("lemma_d_power_check: empty family");
  if (!(p > 1.0)) throw invalid_argument("lemma_d_power_check: p must exceed 1");
  double sum = 0.0, mx = 0.0;
  for (double x : ds) {
    if (!(x > 0.0)) throw invalid_argument("lemma_d_power_check: entries must be positive");
    sum += x;
    mx = std::max(mx, x);
  }
  if (std::abs(sum - 1.0) > 1e-12) throw invalid_argument("lemma_d_power_check: entries must sum to 1");
  PowerCheck c;
  for (double x : ds) c.lhs += std::pow(x, p);
  c.rhs = std::pow(mx, p - 1.0);
  c.holds = c.lhs <= c.rhs * (1.0 + 1e-12);
  return c;
}

// ---------------------------------------------------------------------------
// Hull gap of a finite Riemann sum
// ---------------------------------------------------------------------------

struct HullGapEstimate {
  double one_sided = 0.0;  // max over sampled b in conv S of an upper bound on dist(b, S)
  double sup_diam = 0.0;   // M, measured
  double bound = 0.0;      // C1 M d(T)^(1/2)
  std::size_t samples = 0;
};

/**
 * Estimates sup_{b in conv S(F, T)} dist(b, S(F, T)) for finite-valued F in L2.
 * Every b in the hull sum is sum |Delta_i| b_i with b_i in conv F(t_i); the
 * greedy selection a_i in F(t_i) gives sum |Delta_i| a_i in S with
 * ||b - sum |Delta_i| a_i|| = deviation, an upper bound on dist(b, S).
 * The first sample takes b_i = centroid, later ones Dirichlet(1) weights.
 * S itself is never materialized.
 */
inline HullGapEstimate hull_gap_estimate(const Multifunction& F, const TaggedPartition& T, std::size_t samples,
                                         std::uint64_t seed, std::size_t bound_samples = 1000) {
  if (F.space().norm() != Norm::L2) throw unsupported_operation("hull_gap_estimate is implemented for L2 only");
  if (samples < 1) throw invalid_argument("hull_gap_estimate: samples must be >= 1");
  const std::size_t d = F.space().dim();
  HullGapEstimate out;
  out.samples = samples;
  out.sup_diam = measure_bounds(F, bound_samples, seed).sup_diam;
  out.bound = c1_constant(2.0, 1.0) * out.sup_diam * std::sqrt(T.mesh());

  std::vector<PointSet> sets;
  sets.reserve(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) sets.push_back(scale(T.length(i), F.eval(T.tags()[i])));

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < samples; ++s) {
    SelectionProblem prob;
    prob.sets = sets;
    for (const auto& A : sets) {
      std::vector<double> w(A.size());
      if (s == 0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(A.size()));
      } else {
        double tot = 0.0;
        for (auto& x : w) {
          double u = rng.uniform();
          while (u <= 0.0) u = rng.uniform();
          x = -std::log(u);
          tot += x;
        }
        for (auto& x : w) x /= tot;
      }
      Vector b(d, 0.0);
      for (std::size_t k = 0; k < A.size(); ++k)
        for (std::size_t j = 0; j < d; ++j) b[j] += w[k] * A.point(k)[j];
      prob.targets.push_back(std::move(b));
      prob.diameters.push_back(A.diameter());
    }
    out.one_sided = std::max(out.one_sided, select_points(prob, SelectMode::Greedy).deviation);
  }
  return out;
}

}  // namespace setint
