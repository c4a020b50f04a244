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
 * @file integrate.hpp
 * @brief Set-valued Riemann sums S(F, T) = sum |Delta_i| F(t_i) with a pruning
 *        ledger, convergence reports along partition schedules, and the
 *        experiments built on them (convexity of the limit, pushforward by a
 *        linear map, finite-rank splitting, halved partitions).
 *
 * Pruning error is additive: rho_H(A + C, B + C) <= rho_H(A, B), so pruning
 * every partial sum by delta costs at most delta per step.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "setint/counterexamples.hpp"
#include "setint/errors.hpp"
#include "setint/multifunction.hpp"
#include "setint/parallel.hpp"
#include "setint/partition.hpp"
#include "setint/setops.hpp"
#include "setint/spaces.hpp"

namespace setint {

inline constexpr std::size_t kDefaultCardinalityCap = 200000;

/**
 * Left-to-right accumulation of scale(|Delta_i|, value(t_i)) with a greedy
 * delta-net after each addition. `value` maps a tag to a PointSet.
 *
 * With `hull` set, runs of consecutive intervals whose values are the same
 * generator set G are merged into one summand (sum of lengths) * G: under hull
 * semantics conv(a G + b G) = (a + b) conv G exactly, so the represented hull
 * is unchanged while the generator count stays bounded.
 *
 * err_bound = delta * (number of additions where the net discarded a point)
 * <= n * delta; additions that only merged exact duplicates cost nothing.
 */
template <class ValueFn>
PrunedSet riemann_sum_of(const SpaceDescriptor& space, const TaggedPartition& T, ValueFn&& value, bool hull,
                         double delta_step, std::size_t cap = kDefaultCardinalityCap) {
  if (delta_step < 0.0) throw invalid_argument("riemann_sum: delta_step must be >= 0");
  std::optional<PointSet> acc;
  double err = 0.0;

  auto add = [&](const PointSet& summand) {
    if (summand.dim() != space.dim()) throw invalid_argument("riemann_sum: value has the wrong dimension");
    PrunedSet p = acc ? minkowski_net(*acc, summand, delta_step, cap) : prune(summand, delta_step);
    if (p.base.size() > cap)
      throw resource_limit("Riemann sum exceeds the cardinality cap of " + std::to_string(cap) +
                           " points; increase the pruning delta");
    err += p.err_bound;
    acc = std::move(p.base);
  };

  if (!hull) {
    for (std::size_t i = 0; i < T.size(); ++i) add(scale(T.length(i), value(T.tags()[i])));
  } else {
    std::optional<PointSet> run;
    double weight = 0.0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      PointSet v = value(T.tags()[i]);
      const bool same = run && run->size() == v.size() &&
                        std::equal(run->coords().begin(), run->coords().end(), v.coords().begin());
      if (same) {
        weight += T.length(i);
        continue;
      }
      if (run) add(scale(weight, *run));
      run = std::move(v);
      weight = T.length(i);
    }
    add(scale(weight, *run));
  }
  return {std::move(*acc), err};
}

inline PrunedSet riemann_sum(const Multifunction& F, const TaggedPartition& T, double delta_step,
                             std::size_t cap = kDefaultCardinalityCap) {
  return riemann_sum_of(
      F.space(), T, [&](double t) { return F.eval(t); }, F.hull_semantics(), delta_step, cap);
}

// ---------------------------------------------------------------------------
// Convergence reports
// ---------------------------------------------------------------------------

enum class Verdict { Converged, Diverged, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::Diverged: return "diverged";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ReportRow {
  double mesh = 0.0;
  std::optional<double> distance;  // absent for the first row in Cauchy mode
  double prune_error = 0.0;
  double cardinality = 0.0;        // may exceed size_t range for closed-form rows
  double ms = 0.0;
};

struct ConvergenceReport {
  enum class Mode { Candidate, Cauchy, Witness, Pushforward };

  Mode mode = Mode::Candidate;
  bool hull_semantics = false;
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<PrunedSet> limit;
  std::optional<double> rate;         // log-log slope of distance against mesh
  std::optional<double> lower_bound;  // certified, when diverged
  std::optional<Vector> witness;
  double tol = 0.0;
  double hull_tol = 0.0;
};

inline const char* to_string(ConvergenceReport::Mode m) {
  switch (m) {
    case ConvergenceReport::Mode::Candidate: return "candidate";
    case ConvergenceReport::Mode::Cauchy: return "cauchy";
    case ConvergenceReport::Mode::Witness: return "witness";
    case ConvergenceReport::Mode::Pushforward: return "pushforward";
  }
  return "?";
}

struct IntegrateOptions {
  double tol = 1e-6;
  double hull_tol = 1e-8;
  double delta_step = 1e-4;
  std::size_t cap = kDefaultCardinalityCap;
  std::size_t workers = 1;
  bool timing = false;  // wall times are left at 0 unless requested, so reports are reproducible
};

/// Least-squares slope of log(y) against log(x) over pairs with x, y > 0.
inline std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nullopt;
  const double den = static_cast<double>(n) * sxx - sx * sx;
  if (std::abs(den) < 1e-300) return std::nullopt;
  return (static_cast<double>(n) * sxy - sx * sy) / den;
}

namespace detail {

inline void check_schedule(const std::vector<TaggedPartition>& schedule) {
  if (schedule.empty()) throw invalid_argument("integrate: empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (!(schedule[i].mesh() < schedule[i - 1].mesh()))
      throw invalid_argument("integrate: schedule meshes must decrease strictly");
}

inline double set_distance(const PointSet& A, const PointSet& B, bool hull, double hull_tol) {
  return hull ? hausdorff_hulls(A, B, hull_tol) : hausdorff(A, B);
}

template <class Fn>
double timed(bool enabled, Fn&& fn) {
  if (!enabled) {
    fn();
    return 0.0;
  }
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline void fill_rate(ConvergenceReport& rep) {
  std::vector<double> x, y;
  for (const auto& r : rep.rows)
    if (r.distance) {
      x.push_back(r.mesh);
      y.push_back(*r.distance);
    }
  rep.rate = loglog_slope(x, y);
}

// Rows for F = CounterexampleL1: S(F, T) over m equal intervals is never
// materialized; the distance column holds the certified witness lower bound
// on rho_H(S, simplex).
inline ConvergenceReport integrate_witness(const Multifunction& F, const body::CounterexampleL1& cx,
                                           const std::vector<TaggedPartition>& schedule,
                                           const IntegrateOptions& opt) {
  ConvergenceReport rep;
  rep.mode = ConvergenceReport::Mode::Witness;
  rep.tol = opt.tol;
  rep.hull_tol = opt.hull_tol;
  (void)F;
  for (const auto& T : schedule) {
    if (!T.is_uniform())
      throw invalid_argument("counterexample_l1 integration needs uniform partitions");
    ReportRow row;
    row.mesh = T.mesh();
    row.ms = timed(opt.timing, [&] { row.distance = best_witness_distance(T.size(), cx.N); });
    row.cardinality = sparse_sum_cardinality(T.size(), cx.N);
    rep.rows.push_back(row);
  }
  const std::size_t tail = std::min<std::size_t>(3, rep.rows.size());
  double lb = std::numeric_limits<double>::infinity();
  for (std::size_t i = rep.rows.size() - tail; i < rep.rows.size(); ++i) lb = std::min(lb, *rep.rows[i].distance);
  if (lb > opt.tol) {
    rep.verdict = Verdict::Diverged;
    rep.lower_bound = lb;
    // Witness for the finest row: uniform on the best block.
    const std::size_t m = schedule.back().size();
    std::size_t bestK = 1;
    for (std::size_t K = 1; K <= cx.N; ++K)
      if (witness_distance(m, K) > witness_distance(m, bestK)) bestK = K;
    Vector y(cx.N, 0.0);
    for (std::size_t j = 0; j < bestK; ++j) y[j] = 1.0 / static_cast<double>(bestK);
    rep.witness = std::move(y);
  }
  return rep;
}

}  // namespace detail

/**
 * Riemann sums along a schedule of partitions with strictly decreasing mesh.
 *
 * With a candidate, each row reports rho_H(S(F, T_k), candidate) (hull distances
 * when F has hull semantics); the verdict is converged when the last distance
 * plus its pruning ledger (plus solver tolerance for hull distances) is below
 * tol. Divergence needs a witness: a fixed candidate point whose distance to
 * every sum in the last three rows, minus the row's ledger, exceeds tol.
 *
 * Without a candidate (Cauchy mode), rows report the distance between
 * consecutive sums; converged when the last three such distances are below tol/2.
 * This is a heuristic and never declares divergence.
 */
inline ConvergenceReport integrate(const Multifunction& F, const std::vector<TaggedPartition>& schedule,
                                   const std::optional<PointSet>& candidate, const IntegrateOptions& opt = {}) {
  detail::check_schedule(schedule);
  if (auto* cx = std::get_if<body::CounterexampleL1>(&F.body()))
    return detail::integrate_witness(F, *cx, schedule, opt);

  const bool hull = F.hull_semantics();
  ConvergenceReport rep;
  rep.hull_semantics = hull;
  rep.tol = opt.tol;
  rep.hull_tol = opt.hull_tol;
  rep.mode = candidate ? ConvergenceReport::Mode::Candidate : ConvergenceReport::Mode::Cauchy;
  if (candidate && (candidate->dim() != F.space().dim() || candidate->space().norm() != F.space().norm()))
    throw invalid_argument("integrate: candidate lives in a different space");

  const std::size_t n = schedule.size();
  std::vector<std::optional<PrunedSet>> sums(n);
  std::vector<ReportRow> rows(n);
  parallel_for(n, opt.workers, [&](std::size_t k) {
    rows[k].mesh = schedule[k].mesh();
    rows[k].ms = detail::timed(opt.timing, [&] { sums[k] = riemann_sum(F, schedule[k], opt.delta_step, opt.cap); });
    rows[k].prune_error = sums[k]->err_bound;
    rows[k].cardinality = static_cast<double>(sums[k]->base.size());
  });

  const double solver_slack = hull ? opt.hull_tol : 0.0;
  if (candidate) {
    parallel_for(n, opt.workers, [&](std::size_t k) {
      double ms = detail::timed(opt.timing, [&] {
        rows[k].distance = detail::set_distance(sums[k]->base, *candidate, hull, opt.hull_tol);
      });
      rows[k].ms += ms;
    });
    rep.rows = std::move(rows);
    const auto& last = rep.rows.back();
    if (*last.distance + last.prune_error + solver_slack < opt.tol) {
      rep.verdict = Verdict::Converged;
    } else {
      // Witness search over candidate points across the schedule tail.
      const std::size_t tail = std::min<std::size_t>(3, n);
      double best_lb = -std::numeric_limits<double>::infinity();
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < candidate->size(); ++c) {
        auto x = candidate->point(c);
        double lb = std::numeric_limits<double>::infinity();
        for (std::size_t k = n - tail; k < n; ++k) {
          const auto& S = sums[k]->base;
          const double d = hull ? dist_point_to_hull(F.space(), x, S, opt.hull_tol).value - opt.hull_tol
                                : dist_point_to_set(F.space(), x, S);
          lb = std::min(lb, d - sums[k]->err_bound);
        }
        if (lb > best_lb) {
          best_lb = lb;
          best_c = c;
        }
      }
      if (best_lb > opt.tol) {
        rep.verdict = Verdict::Diverged;
        rep.lower_bound = best_lb;
        auto w = candidate->point(best_c);
        rep.witness = Vector(w.begin(), w.end());
      }
    }
  } else {
    parallel_for(n > 0 ? n - 1 : 0, opt.workers, [&](std::size_t k) {
      double ms = detail::timed(opt.timing, [&] {
        rows[k + 1].distance = detail::set_distance(sums[k]->base, sums[k + 1]->base, hull, opt.hull_tol);
      });
      rows[k + 1].ms += ms;
    });
    rep.rows = std::move(rows);
    if (n >= 4) {
      bool ok = true;
      for (std::size_t k = n - 3; k < n; ++k) ok = ok && *rep.rows[k].distance < opt.tol / 2.0;
      if (ok) rep.verdict = Verdict::Converged;
    }
  }
  rep.limit = std::move(sums.back());
  detail::fill_rate(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

struct ConvexityResult {
  double finite_distance = 0.0;  // rho_H(L, L/2 + L/2) as finite sets
  double hull_distance = 0.0;    // rho_H(conv L, conv(L/2 + L/2))
};

/// Distance of a limit set from its own midpoint set L/2 + L/2.
inline ConvexityResult convexity_check(const PointSet& limit, double tol,
                                       std::size_t cap = 4 * kDefaultCardinalityCap) {
  const auto half = scale(0.5, limit);
  const auto mid = minkowski_pruned(half, half, 0.0, cap);
  return {hausdorff(limit, mid), hausdorff_hulls(limit, mid, tol)};
}

inline ConvexityResult convexity_check(const PrunedSet& limit, double tol,
                                       std::size_t cap = 4 * kDefaultCardinalityCap) {
  return convexity_check(limit.base, tol, cap);
}

/// Upper bound on the operator norm of P (row-major, target.dim() x source.dim()):
/// ||P|| <= || (||P e_j||_target)_j ||_{dual of source}.
inline double operator_norm_bound(const std::vector<double>& P, const SpaceDescriptor& source,
                                  const SpaceDescriptor& target) {
  const std::size_t n = source.dim(), m = target.dim();
  if (P.size() != n * m) throw invalid_argument("operator_norm_bound: matrix shape does not match the spaces");
  Vector colnorms(n);
  Vector col(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) col[i] = P[i * n + j];
    colnorms[j] = detail::norm_unchecked(target.norm(), col);
  }
  return detail::norm_unchecked(dual_norm(source.norm()), colnorms);
}

/**
 * Compares P(S(F, T)) with S(P o F, T) on every partition of the schedule.
 * Without pruning the two sets coincide; with pruning each row's distance must
 * stay within ||P|| * ledger(S(F, T)) + ledger(S(P o F, T)), reported as the
 * row's prune_error. Verdict converged when every row is within its budget + tol.
 */
inline ConvergenceReport pushforward_check(const Multifunction& F, const std::vector<double>& P,
                                           const SpaceDescriptor& target,
                                           const std::vector<TaggedPartition>& schedule,
                                           const IntegrateOptions& opt = {}) {
  if (schedule.empty()) throw invalid_argument("pushforward_check: empty schedule");
  if (P.size() != target.dim() * F.space().dim())
    throw invalid_argument("pushforward_check: matrix shape does not match the spaces");
  const double pnorm = operator_norm_bound(P, F.space(), target);
  const bool hull = F.hull_semantics();
  ConvergenceReport rep;
  rep.mode = ConvergenceReport::Mode::Pushforward;
  rep.hull_semantics = hull;
  rep.tol = opt.tol;
  rep.hull_tol = opt.hull_tol;
  std::vector<ReportRow> rows(schedule.size());
  std::vector<std::optional<PrunedSet>> pushed(schedule.size());
  parallel_for(schedule.size(), opt.workers, [&](std::size_t k) {
    const auto& T = schedule[k];
    rows[k].mesh = T.mesh();
    rows[k].ms = detail::timed(opt.timing, [&] {
      const auto direct = riemann_sum(F, T, opt.delta_step, opt.cap);
      const auto image = apply_linear(P, target, direct.base);
      pushed[k] = riemann_sum_of(
          target, T, [&](double t) { return apply_linear(P, target, F.eval(t)); }, hull, opt.delta_step, opt.cap);
      rows[k].distance = detail::set_distance(image, pushed[k]->base, hull, opt.hull_tol);
      rows[k].prune_error = pnorm * direct.err_bound + pushed[k]->err_bound;
      rows[k].cardinality = static_cast<double>(pushed[k]->base.size());
    });
  });
  rep.rows = std::move(rows);
  const double slack = hull ? opt.hull_tol : 0.0;
  bool ok = true;
  for (const auto& r : rep.rows) ok = ok && *r.distance <= r.prune_error + opt.tol + slack;
  rep.verdict = ok ? Verdict::Converged : Verdict::Diverged;
  rep.limit = std::move(pushed.back());
  return rep;
}

struct SplittingResult {
  double eps_p = 0.0;  // rho_H(P S, P A)
  double eps_q = 0.0;  // rho_H(conv Q S, conv Q A) (+ solver tolerance)
  double eps_a = 0.0;  // max over a in A of ||Q a||
  double eps = 0.0;    // max of the three
  double distance = 0.0;  // rho_H(S, A)
  double bound = 0.0;     // 4 eps
  bool satisfied = false;
};

/**
 * Finite-rank splitting estimate for a projection P with Q = I - P: for finite
 * S and A,
 *
 *     rho_H(S, A) <= eps_P + (eps_Q + eps_A) + eps_A <= 4 max(eps_P, eps_Q, eps_A).
 *
 * S is the (pruned) Riemann sum of F over T; the estimate holds for the
 * represented set itself.
 */
inline SplittingResult splitting_check(const Multifunction& F, const std::vector<double>& P, const TaggedPartition& T,
                                       const PointSet& A, double delta_step, double hull_tol) {
  const auto& space = F.space();
  const std::size_t d = space.dim();
  if (P.size() != d * d) throw invalid_argument("splitting_check: P must be a square matrix on F's space");
  if (A.dim() != d) throw invalid_argument("splitting_check: candidate lives in a different space");
  std::vector<double> Q(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) Q[i * d + j] = (i == j ? 1.0 : 0.0) - P[i * d + j];
  const auto S = riemann_sum(F, T, delta_step).base;
  SplittingResult r;
  r.eps_p = hausdorff(apply_linear(P, space, S), apply_linear(P, space, A));
  r.eps_q = hausdorff_hulls(apply_linear(Q, space, S), apply_linear(Q, space, A), hull_tol) + hull_tol;
  r.eps_a = apply_linear(Q, space, A).max_norm();
  r.eps = std::max({r.eps_p, r.eps_q, r.eps_a});
  r.distance = hausdorff(S, A);
  r.bound = 4.0 * r.eps;
  r.satisfied = r.distance <= r.bound * (1.0 + 1e-12) + 1e-15;
  return r;
}

struct HalvedIdentityResult {
  double distance = 0.0;  // rho_H(S(F, fine), S(F, a)/2 + S(F, b)/2)
  double ledger = 0.0;    // err(fine) + err(a)/2 + err(b)/2
};

inline HalvedIdentityResult halved_identity_check(const Multifunction& F, const std::vector<double>& breakpoints,
                                                  std::uint64_t seed, double delta_step, double hull_tol = 1e-8) {
  const auto hp = halve_with_tags(breakpoints, seed);
  const auto fine = riemann_sum(F, hp.fine, delta_step);
  const auto sa = riemann_sum(F, hp.a, delta_step);
  const auto sb = riemann_sum(F, hp.b, delta_step);
  const auto mid = minkowski(scale(0.5, sa.base), scale(0.5, sb.base));
  HalvedIdentityResult r;
  r.distance = detail::set_distance(fine.base, mid, F.hull_semantics(), hull_tol);
  r.ledger = fine.err_bound + 0.5 * sa.err_bound + 0.5 * sb.err_bound;
  return r;
}

/// Schedule of uniform partitions with the given interval counts.
inline std::vector<TaggedPartition> uniform_schedule(const std::vector<std::size_t>& counts, TagRule rule) {
  std::vector<TaggedPartition> out;
  out.reserve(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    TagRule r = rule;
    r.seed = rule.seed + k;
    out.push_back(uniform_partition(counts[k], r));
  }
  return out;
}

}  // namespace setint
