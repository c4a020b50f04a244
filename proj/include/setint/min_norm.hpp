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
 * @file min_norm.hpp
 * @brief Euclidean minimum-norm point of the convex hull of a finite point set.
 *
 * Conditional-gradient iteration in the Gilbert family with Wolfe's corrective
 * minor cycles: each major step adds the generator minimizing <y, p> (the
 * linear-minimization oracle), each minor cycle moves y to the affine minimizer
 * of the active corral and drops generators whose weights would turn negative.
 *
 * Certificate: with f(y) = |y|^2 / 2 the Frank-Wolfe gap
 *
 *     g(y) = max_k <y, y - p_k>  >=  f(y) - f*
 *
 * gives  |y|^2 - 2g <= dist^2 <= |y|^2,  so |y| overestimates the exact distance
 * by at most |y| - sqrt(max(0, |y|^2 - 2g)).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace setint::detail {

struct MinNormResult {
  double value = 0.0;     // |y|, an upper bound on the exact distance
  double gap = 0.0;       // value - exact <= gap
  bool converged = false;
};

// Solves the (k+1) x (k+1) system in place by Gaussian elimination with partial
// pivoting. Returns false when a pivot underflows (affinely dependent corral).
inline bool solve_dense(std::vector<double>& M, std::vector<double>& rhs, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(M[r * n + c]) > std::abs(M[piv * n + c])) piv = r;
    if (std::abs(M[piv * n + c]) < 1e-300) return false;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M[c * n + j], M[piv * n + j]);
      std::swap(rhs[c], rhs[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = M[r * n + c] / M[c * n + c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) M[r * n + j] -= f * M[c * n + j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    double s = rhs[c];
    for (std::size_t j = c + 1; j < n; ++j) s -= M[c * n + j] * rhs[j];
    rhs[c] = s / M[c * n + c];
  }
  return true;
}

/// `pts` holds m points of dimension d (row-major), already translated so the
/// query sits at the origin.
inline MinNormResult min_norm_point(std::span<const double> pts, std::size_t m, std::size_t d,
                                    double tol, std::size_t max_major = 0) {
  auto P = [&](std::size_t k) { return pts.subspan(k * d, d); };
  auto dot = [d](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
  };

  if (max_major == 0) max_major = 50 * (m + d) + 1000;

  // Start from the generator nearest the origin.
  std::size_t k0 = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    const double n2 = dot(P(k), P(k));
    if (n2 < best) {
      best = n2;
      k0 = k;
    }
  }

  std::vector<std::size_t> corral{k0};
  std::vector<double> w{1.0};
  std::vector<double> y(P(k0).begin(), P(k0).end());
  std::vector<double> diff(d);

  auto recompute_y = [&]() {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < corral.size(); ++i) {
      auto p = P(corral[i]);
      for (std::size_t j = 0; j < d; ++j) y[j] += w[i] * p[j];
    }
  };

  auto certify = [&](double gap_fw) {
    MinNormResult r;
    const double v = std::sqrt(dot(y, y));
    const double lower = std::sqrt(std::max(0.0, v * v - 2.0 * std::max(0.0, gap_fw)));
    r.value = v;
    r.gap = v - lower;
    return r;
  };

  MinNormResult last;
  for (std::size_t major = 0; major < max_major; ++major) {
    // Linear-minimization oracle and Frank-Wolfe gap.
    std::size_t kmin = 0;
    double gmax = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
      auto p = P(k);
      for (std::size_t j = 0; j < d; ++j) diff[j] = y[j] - p[j];
      const double g = dot(y, diff);
      if (g > gmax) {
        gmax = g;
        kmin = k;
      }
    }
    last = certify(gmax);
    if (last.gap <= tol || last.value <= 1e-300) {
      last.converged = true;
      return last;
    }
    if (std::find(corral.begin(), corral.end(), kmin) != corral.end()) {
      // Oracle returned a corral member: numerical stall at the affine optimum.
      last.converged = last.gap <= tol;
      return last;
    }
    corral.push_back(kmin);
    w.push_back(0.0);

    // Minor cycles.
    for (std::size_t minor = 0; minor <= d + 2; ++minor) {
      const std::size_t s = corral.size();
      const std::size_t n = s + 1;
      std::vector<double> M(n * n, 0.0), rhs(n, 0.0);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i; j < s; ++j) {
          const double v = dot(P(corral[i]), P(corral[j]));
          M[i * n + j] = v;
          M[j * n + i] = v;
        }
        M[i * n + s] = 1.0;
        M[s * n + i] = 1.0;
      }
      rhs[s] = 1.0;
      if (!solve_dense(M, rhs, n)) {
        // Dependent corral: fall back to a Gilbert line-search step toward the newcomer.
        auto p = P(corral.back());
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          const double e = y[j] - p[j];
          num += y[j] * e;
          den += e * e;
        }
        const double lambda = den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
        for (std::size_t i = 0; i + 1 < s; ++i) w[i] *= (1.0 - lambda);
        w.back() = lambda;
        break;
      }
      std::span<const double> alpha(rhs.data(), s);
      const bool interior = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > 1e-14; });
      if (interior) {
        w.assign(alpha.begin(), alpha.end());
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < s; ++i)
        if (alpha[i] <= 1e-14) theta = std::min(theta, w[i] / (w[i] - alpha[i]));
      for (std::size_t i = 0; i < s; ++i) w[i] = theta * alpha[i] + (1.0 - theta) * w[i];
      // Remove vanishing weights (at least one goes).
      std::size_t drop = 0;
      double wmin = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < s; ++i)
        if (w[i] < wmin) {
          wmin = w[i];
          drop = i;
        }
      std::vector<std::size_t> nc;
      std::vector<double> nw;
      for (std::size_t i = 0; i < s; ++i) {
        if (i == drop || w[i] <= 1e-15) continue;
        nc.push_back(corral[i]);
        nw.push_back(w[i]);
      }
      if (nc.empty()) {
        nc.push_back(corral[drop]);
        nw.push_back(1.0);
      }
      corral = std::move(nc);
      w = std::move(nw);
      double tot = 0.0;
      for (double x : w) tot += x;
      for (double& x : w) x /= tot;
      if (corral.size() == 1) break;
    }
    recompute_y();
  }
  last.converged = last.gap <= tol;
  return last;
}

}  // namespace setint::detail
