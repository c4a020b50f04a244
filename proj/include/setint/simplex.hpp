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

// Dense two-phase tableau simplex for small standard-form programs
//
//     minimize c^T x   subject to   A x = b,  x >= 0.
//
// Bland's rule throughout, so the method terminates on degenerate problems.
// Sized for desk-scale hull queries: a few hundred rows, a few thousand columns.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace setint::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
  Status status = Status::IterationLimit;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x;
};

/// Row-major constraint matrix with `rows` x `cols` entries.
struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> A;
  std::vector<double> b;
  std::vector<double> c;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  // Right-hand side column.
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Objective row lives at index `rows_`.
  double& obj(std::size_t c) { return at(rows_, c); }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = cols_ + 1;
    double* prow = &t_[pr * w];
    const double inv = 1.0 / prow[pc];
    for (std::size_t j = 0; j < w; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &t_[r * w];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) row[j] -= f * prow[j];
      row[pc] = 0.0;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
};

constexpr double kPivotEps = 1e-11;

// Runs simplex iterations on the tableau's objective row. Columns with
// allowed[j] == false never enter. Returns Optimal, Unbounded or IterationLimit.
inline Status iterate(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& allowed,
                      std::size_t max_iters) {
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  for (std::size_t it = 0; it < max_iters; ++it) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (allowed[j] && t.obj(j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == n) return Status::Optimal;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t.at(r, enter);
      if (a > kPivotEps) {
        const double ratio = t.rhs(r) / a;
        // Bland tie-break: smallest basic variable index.
        if (ratio < best - 1e-14 || (std::abs(ratio - best) <= 1e-14 && leave < m && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) return Status::Unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
  }
  return Status::IterationLimit;
}

}  // namespace detail

inline Result solve(const Problem& prob, std::size_t max_iters = 200000) {
  const std::size_t m = prob.rows;
  const std::size_t n = prob.cols;
  Result res;

  // Phase 1 on [A | I] with artificials, rows flipped so b >= 0.
  detail::Tableau t(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = prob.b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * prob.A[r * n + j];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * prob.b[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  // Reduced costs of the phase-1 objective (sum of artificials).
  for (std::size_t j = 0; j <= n + m; ++j) {
    double s = 0.0;
    if (j < n || j == n + m)
      for (std::size_t r = 0; r < m; ++r) s += t.at(r, j);
    t.obj(j) = -s;
  }
  std::vector<bool> allowed(n + m, true);
  auto st = detail::iterate(t, basis, allowed, max_iters);
  if (st == Status::IterationLimit) return res;
  if (-t.obj(n + m) > 1e-9) {
    res.status = Status::Infeasible;
    return res;
  }

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.at(r, j)) > 1e-9) {
        t.pivot(r, j);
        basis[r] = j;
        break;
      }
    }
  }
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;

  // Phase 2 reduced costs.
  for (std::size_t j = 0; j <= n + m; ++j) {
    double s = (j < n) ? prob.c[j] : 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t bv = basis[r];
      const double cb = bv < n ? prob.c[bv] : 0.0;
      s -= cb * t.at(r, j);
    }
    t.obj(j) = s;
  }
  st = detail::iterate(t, basis, allowed, max_iters);
  if (st != Status::Optimal) {
    res.status = st;
    return res;
  }

  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) res.x[basis[r]] = std::max(0.0, t.rhs(r));
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += prob.c[j] * res.x[j];
  res.objective = obj;
  res.status = Status::Optimal;
  return res;
}

}  // namespace setint::lp
