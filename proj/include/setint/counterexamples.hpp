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
 * @file counterexamples.hpp
 * @brief Two explicit constructions.
 *
 * Hilbert example: f(t) = e_t in l2([0,1]). Orthonormality makes
 * ||S(f, T)|| = (sum |Delta_i|^2)^(1/2) <= sqrt(d(T)), so no infinite-dimensional
 * vector is ever built.
 *
 * l1 example: F(t) = {e_1, ..., e_N} in l1^N. conv F(t) is the probability
 * simplex, so conv F integrates to it. Over m equal intervals every element of
 * S(F, T) is an average (1/m) sum c_j e_j with integer counts summing to m
 * (a SparseAverage), and the witness y = (1/K) sum over a block of K coordinates
 * stays far from all of them:
 *
 *     dist_1(y, S) = 2 r (K - r) / (m K),   r = m mod K,
 *
 * attained by spreading the m atoms as evenly as possible over the block
 * (separable convex objective; atoms outside the block only add mass).
 * For m <= K this is 2 (K - m) / K. With m = 2^(n-1) - 1 and K = 2^n - 1 it
 * equals 2^n / (2^n - 1) > 1.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "setint/errors.hpp"
#include "setint/multifunction.hpp"
#include "setint/partition.hpp"
#include "setint/random.hpp"
#include "setint/spaces.hpp"

namespace setint {

// ---------------------------------------------------------------------------
// Hilbert-space example
// ---------------------------------------------------------------------------

/// ||sum |Delta_i| e_{t_i}|| in l2([0,1]). Coefficients of coinciding tags are
/// merged before squaring. With distinct_tags = true the tags must be distinct.
inline double hilbert_example_sum_norm(const TaggedPartition& T, bool distinct_tags) {
  std::map<double, double> coeff;
  for (std::size_t i = 0; i < T.size(); ++i) coeff[T.tags()[i]] += T.length(i);
  if (distinct_tags && coeff.size() != T.size())
    throw invalid_argument("hilbert_example_sum_norm: tags are not distinct");
  double s = 0.0;
  for (const auto& [t, c] : coeff) s += c * c;
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// l1 example
// ---------------------------------------------------------------------------

struct L1CounterexampleConfig {
  int n = 3;           // partition exponent: m = 2^(n-1) - 1 equal intervals
  std::size_t N = 8;   // truncation dimension

  std::size_t intervals() const { return (std::size_t{1} << (n - 1)) - 1; }
  std::size_t witness_size() const { return (std::size_t{1} << n) - 1; }

  /// First (0-based) witness coordinate: the block e_{2^n} .. e_{2^(n+1)-1}
  /// when it fits in l1^N, otherwise the first 2^n - 1 coordinates. By the
  /// symmetry of F the distance does not depend on where the block sits.
  std::size_t witness_begin() const {
    const std::size_t hi = (std::size_t{1} << (n + 1)) - 1;
    return N >= hi ? (std::size_t{1} << n) - 1 : 0;
  }

  void validate() const {
    if (n < 2 || n > 30) throw invalid_argument("counterexample: n must lie in [2, 30]");
    if (N < witness_size())
      throw invalid_argument("counterexample: N = " + std::to_string(N) + " is too small for the witness (needs " +
                             std::to_string(witness_size()) + ")");
  }
};

/// (1/m) sum_j counts[j] e_j, an element of the Riemann sum over m equal intervals.
struct SparseAverage {
  std::size_t m = 1;
  std::map<std::size_t, std::size_t> counts;  // 0-based coordinate -> atoms
};

/// l1 distance from the block-uniform witness (K coordinates from `begin`) to s.
inline double sparse_l1_distance(std::size_t begin, std::size_t K, const SparseAverage& s) {
  const double y = 1.0 / static_cast<double>(K);
  double d = 0.0;
  std::size_t touched = 0;
  for (const auto& [j, c] : s.counts) {
    const double v = static_cast<double>(c) / static_cast<double>(s.m);
    if (j >= begin && j < begin + K) {
      d += std::abs(y - v);
      ++touched;
    } else {
      d += v;
    }
  }
  d += static_cast<double>(K - touched) * y;
  return d;
}

/// Closed-form dist_1(y, S) for m equal intervals and a K-coordinate witness.
inline double witness_distance(std::size_t m, std::size_t K) {
  if (m < 1 || K < 1) throw invalid_argument("witness_distance: m and K must be positive");
  const std::size_t r = m % K;
  return 2.0 * static_cast<double>(r) * static_cast<double>(K - r) /
         (static_cast<double>(m) * static_cast<double>(K));
}

/// The element of S attaining witness_distance: counts q or q + 1 on the block.
inline SparseAverage nearest_sparse_average(std::size_t m, std::size_t K, std::size_t begin) {
  SparseAverage s;
  s.m = m;
  const std::size_t q = m / K, r = m % K;
  for (std::size_t j = 0; j < K; ++j) {
    const std::size_t c = q + (j < r ? 1 : 0);
    if (c > 0) s.counts[begin + j] = c;
  }
  return s;
}

/// Largest closed-form witness distance over block sizes K <= N.
inline double best_witness_distance(std::size_t m, std::size_t N) {
  double best = 0.0;
  for (std::size_t K = 1; K <= N; ++K) best = std::max(best, witness_distance(m, K));
  return best;
}

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

/// Number of distinct points of S(F, T) over m equal intervals in l1^N.
inline double sparse_sum_cardinality(std::size_t m, std::size_t N) { return binomial(N + m - 1, m); }

/// Exact dist_1(y, S) by enumerating every count vector over N coordinates.
inline double witness_distance_bruteforce(std::size_t m, std::size_t K, std::size_t N, std::size_t begin = 0) {
  if (K > N || begin + K > N) throw invalid_argument("witness_distance_bruteforce: witness block outside l1^N");
  if (sparse_sum_cardinality(m, N) > 1e6)
    throw resource_limit("witness_distance_bruteforce: more than 10^6 count vectors");
  std::vector<std::size_t> c(N, 0);
  const double y = 1.0 / static_cast<double>(K);
  double best = std::numeric_limits<double>::infinity();
  // Depth-first over coordinates, remaining atoms to place.
  auto rec = [&](auto&& self, std::size_t j, std::size_t left) -> void {
    if (j + 1 == N) {
      c[j] = left;
      double d = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double target = (i >= begin && i < begin + K) ? y : 0.0;
        d += std::abs(target - static_cast<double>(c[i]) / static_cast<double>(m));
      }
      best = std::min(best, d);
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      c[j] = a;
      self(self, j + 1, left - a);
    }
  };
  rec(rec, 0, m);
  return best;
}

/// F(t) = {e_1, ..., e_N} in l1^N with bound_m = 1 and diam_bound = 2.
inline Multifunction l1_counterexample_eval(const L1CounterexampleConfig& cfg) {
  cfg.validate();
  return Multifunction(SpaceDescriptor(cfg.N, Norm::L1), body::CounterexampleL1{cfg.n, cfg.N}, 1.0,
                       cfg.N > 1 ? 2.0 : 0.0);
}

/// Certified lower bound on rho_H(S_n, simplex): dist_1(y_n, S_n) in closed form.
inline double l1_counterexample_lower_bound(const L1CounterexampleConfig& cfg) {
  cfg.validate();
  return witness_distance(cfg.intervals(), cfg.witness_size());
}

/// Same quantity by exhaustive enumeration (independent oracle).
inline double l1_counterexample_bruteforce(const L1CounterexampleConfig& cfg) {
  cfg.validate();
  return witness_distance_bruteforce(cfg.intervals(), cfg.witness_size(), cfg.N, cfg.witness_begin());
}

/// Witness vector y_n in l1^N.
inline Vector l1_witness(const L1CounterexampleConfig& cfg) {
  cfg.validate();
  Vector y(cfg.N, 0.0);
  const double v = 1.0 / static_cast<double>(cfg.witness_size());
  for (std::size_t j = 0; j < cfg.witness_size(); ++j) y[cfg.witness_begin() + j] = v;
  return y;
}

/// Reverse orthogonality constant: if G is eps-orthogonal to E then
/// ||e + g|| >= (1 - eps) / (2 - eps) ||g||.
inline double reverse_orthogonality_constant(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw invalid_argument("eps must lie in [0, 1)");
  return (1.0 - eps) / (2.0 - eps);
}

/// Constants of the general-space lower-bound chain for a given eps:
/// ||x|| >= (1-eps) ||sum x_k|| >= (1-eps) * rev(eps) ||x_{n+1}||, then the
/// factor 1/2 from ||T^{-1}|| < 2 and at least half the witness mass.
struct LowerBoundChain {
  double orthogonal = 0.0;  // 1 - eps
  double reverse = 0.0;     // (1 - eps) / (2 - eps)
  double combined = 0.0;    // product of the two
  double after_operator = 0.0;
  double final_bound = 0.0;
};

inline LowerBoundChain general_lower_bound_chain(double eps) {
  LowerBoundChain c;
  c.orthogonal = 1.0 - eps;
  c.reverse = reverse_orthogonality_constant(eps);
  c.combined = c.orthogonal * c.reverse;
  c.after_operator = 0.5 * c.combined;
  c.final_bound = 0.5 * c.after_operator;
  return c;
}

struct CoordinateRange {
  std::size_t begin = 0;  // inclusive, 0-based
  std::size_t end = 0;    // exclusive
};

struct OrthogonalityCheck {
  double eps_hat = 0.0;           // smallest eps with ||e + g|| >= (1 - eps)||e|| on the samples
  double reverse_constant = 0.0;  // (1 - eps_hat) / (2 - eps_hat)
  bool forward_holds = true;
  bool reverse_holds = true;
};

/// Samples random pairs e (supported on blockE) and g (supported on blockG) in
/// l1 and checks both orthogonality inequalities.
inline OrthogonalityCheck eps_orthogonality_check(CoordinateRange blockE, CoordinateRange blockG,
                                                  std::size_t samples, std::uint64_t seed) {
  if (blockE.end <= blockE.begin || blockG.end <= blockG.begin)
    throw invalid_argument("eps_orthogonality_check: empty coordinate range");
  if (blockE.begin < blockG.end && blockG.begin < blockE.end)
    throw invalid_argument("eps_orthogonality_check: coordinate ranges overlap");
  const std::size_t N = std::max(blockE.end, blockG.end);
  const SpaceDescriptor l1(N, Norm::L1);
  Rng rng(seed);
  OrthogonalityCheck out;
  std::vector<std::pair<Vector, Vector>> pairs;
  pairs.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector e(N, 0.0), g(N, 0.0);
    for (std::size_t j = blockE.begin; j < blockE.end; ++j) e[j] = rng.normal();
    for (std::size_t j = blockG.begin; j < blockG.end; ++j) g[j] = rng.normal();
    Vector sum(N);
    for (std::size_t j = 0; j < N; ++j) sum[j] = e[j] + g[j];
    const double ne = norm(l1, e), nsum = norm(l1, sum);
    if (ne > 0.0) out.eps_hat = std::max(out.eps_hat, 1.0 - nsum / ne);
    pairs.emplace_back(std::move(e), std::move(g));
  }
  out.eps_hat = std::max(0.0, out.eps_hat);
  out.reverse_constant = reverse_orthogonality_constant(out.eps_hat);
  for (const auto& [e, g] : pairs) {
    Vector sum(N);
    for (std::size_t j = 0; j < N; ++j) sum[j] = e[j] + g[j];
    const double nsum = norm(l1, sum);
    if (nsum < (1.0 - out.eps_hat) * norm(l1, e)) out.forward_holds = false;
    if (nsum < out.reverse_constant * norm(l1, g)) out.reverse_holds = false;
  }
  return out;
}

}  // namespace setint
