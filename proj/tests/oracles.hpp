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

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond the Vector alias.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "setint/setint.hpp"

namespace oracle {

using setint::Norm;
using setint::Vector;
using Cloud = std::vector<Vector>;

inline double norm(Norm n, const Vector& v) {
  double s = 0.0;
  switch (n) {
    case Norm::L1:
      for (double x : v) s += std::fabs(x);
      return s;
    case Norm::L2:
      for (double x : v) s += x * x;
      return std::sqrt(s);
    case Norm::Linf:
      for (double x : v) s = std::max(s, std::fabs(x));
      return s;
  }
  return 0.0;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline double dist(Norm n, const Vector& a, const Vector& b) { return norm(n, sub(a, b)); }

inline double point_to_cloud(Norm n, const Vector& x, const Cloud& A) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : A) best = std::min(best, dist(n, x, a));
  return best;
}

inline double one_sided(Norm n, const Cloud& A, const Cloud& B) {
  double worst = 0.0;
  for (const auto& b : B) worst = std::max(worst, point_to_cloud(n, b, A));
  return worst;
}

inline double hausdorff(Norm n, const Cloud& A, const Cloud& B) {
  return std::max(one_sided(n, A, B), one_sided(n, B, A));
}

/// Every sum a_1 + ... + a_k with a_i in sets[i], scaled per set.
inline Cloud all_sums(const std::vector<Cloud>& sets, const std::vector<double>& weights) {
  Cloud out{Vector(sets.front().front().size(), 0.0)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Cloud next;
    for (const auto& s : out)
      for (const auto& a : sets[i]) {
        Vector v = s;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += weights[i] * a[j];
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

/// Distance from x to segment [a, b] in any of the three norms, exactly:
/// the objective is piecewise linear (L1, Linf) or quadratic (L2) in t.
inline double point_to_segment(Norm n, const Vector& x, const Vector& a, const Vector& b) {
  const std::size_t d = x.size();
  auto at = [&](double t) {
    Vector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = a[i] + t * (b[i] - a[i]);
    return dist(n, x, p);
  };
  std::vector<double> ts{0.0, 1.0};
  if (n == Norm::L2) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      num += (x[i] - a[i]) * (b[i] - a[i]);
      den += (b[i] - a[i]) * (b[i] - a[i]);
    }
    if (den > 0.0) ts.push_back(num / den);
  } else {
    // Kinks where one coordinate residual vanishes or two residuals tie in magnitude.
    std::vector<std::pair<double, double>> lin;  // residual_i(t) = c + s t
    for (std::size_t i = 0; i < d; ++i) lin.emplace_back(x[i] - a[i], -(b[i] - a[i]));
    for (const auto& [c, s] : lin)
      if (s != 0.0) ts.push_back(-c / s);
    if (n == Norm::Linf)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          for (double sg : {1.0, -1.0}) {
            const double den = lin[i].second - sg * lin[j].second;
            if (den != 0.0) ts.push_back((sg * lin[j].first - lin[i].first) / den);
          }
  }
  double best = std::numeric_limits<double>::infinity();
  for (double t : ts)
    if (t >= 0.0 && t <= 1.0) best = std::min(best, at(t));
  return best;
}

/// x inside the triangle (a, b, c) in the plane.
inline bool in_triangle(const Vector& x, const Vector& a, const Vector& b, const Vector& c) {
  auto cross = [](const Vector& o, const Vector& p, const Vector& q) {
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
  };
  const double d1 = cross(a, b, x), d2 = cross(b, c, x), d3 = cross(c, a, x);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

/// Distance from x to conv A for planar A: 0 inside some triangle of A,
/// otherwise the nearest segment between two points of A.
inline double point_to_hull_2d(Norm n, const Vector& x, const Cloud& A) {
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      for (std::size_t k = j + 1; k < A.size(); ++k)
        if (in_triangle(x, A[i], A[j], A[k])) {
          // Degenerate (collinear) triangles only contain their segment.
          const double area = std::fabs((A[j][0] - A[i][0]) * (A[k][1] - A[i][1]) -
                                        (A[j][1] - A[i][1]) * (A[k][0] - A[i][0]));
          if (area > 1e-14) return 0.0;
        }
  double best = point_to_cloud(n, x, A);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) best = std::min(best, point_to_segment(n, x, A[i], A[j]));
  return best;
}

/// Euclidean distance to conv A by enumerating every affinely independent
/// subset of at most d + 1 points and projecting onto its affine hull.
inline double point_to_hull_l2(const Vector& x, const Cloud& A) {
  const std::size_t d = x.size(), m = A.size();
  double best = point_to_cloud(Norm::L2, x, A);
  const std::size_t kmax = std::min(d + 1, m);
  std::vector<std::size_t> idx;
  auto consider = [&]() {
    const std::size_t k = idx.size();
    if (k < 2) return;
    // Minimize ||A[i0] + sum_j w_j (A[ij] - A[i0]) - x||: normal equations.
    std::vector<Vector> D;
    for (std::size_t j = 1; j < k; ++j) D.push_back(sub(A[idx[j]], A[idx[0]]));
    const Vector r = sub(x, A[idx[0]]);
    const std::size_t q = k - 1;
    std::vector<double> G(q * q), h(q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        double s = 0.0;
        for (std::size_t t = 0; t < d; ++t) s += D[i][t] * D[j][t];
        G[i * q + j] = s;
      }
      double s = 0.0;
      for (std::size_t t = 0; t < d; ++t) s += D[i][t] * r[t];
      h[i] = s;
    }
    // Gaussian elimination with partial pivoting.
    for (std::size_t c = 0; c < q; ++c) {
      std::size_t piv = c;
      for (std::size_t i = c + 1; i < q; ++i)
        if (std::fabs(G[i * q + c]) > std::fabs(G[piv * q + c])) piv = i;
      if (std::fabs(G[piv * q + c]) < 1e-12) return;
      for (std::size_t j = 0; j < q; ++j) std::swap(G[c * q + j], G[piv * q + j]);
      std::swap(h[c], h[piv]);
      for (std::size_t i = c + 1; i < q; ++i) {
        const double f = G[i * q + c] / G[c * q + c];
        for (std::size_t j = c; j < q; ++j) G[i * q + j] -= f * G[c * q + j];
        h[i] -= f * h[c];
      }
    }
    std::vector<double> w(q);
    for (std::size_t c = q; c-- > 0;) {
      double s = h[c];
      for (std::size_t j = c + 1; j < q; ++j) s -= G[c * q + j] * w[j];
      w[c] = s / G[c * q + c];
    }
    double w0 = 1.0;
    for (double v : w) {
      if (v < -1e-12) return;
      w0 -= v;
    }
    if (w0 < -1e-12) return;
    Vector p = A[idx[0]];
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t t = 0; t < d; ++t) p[t] += w[j] * D[j][t];
    best = std::min(best, dist(Norm::L2, x, p));
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    consider();
    if (idx.size() == kmax) return;
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

inline Cloud random_cloud(std::mt19937_64& g, std::size_t n, std::size_t d, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Cloud c(n, Vector(d));
  for (auto& p : c)
    for (auto& x : p) x = u(g);
  return c;
}

}  // namespace oracle
