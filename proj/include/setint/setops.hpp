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
 * @file setops.hpp
 * @brief Finite point clouds standing for bounded sets: Minkowski arithmetic,
 *        Hausdorff distances, hull distances and greedy delta-net pruning.
 *
 * A PointSet stands for itself (finite-set semantics) or, when a caller asks for
 * hull distances, for the convex hull of its points. Hulls are never enumerated;
 * every hull query goes through a point-to-hull distance oracle.
 *
 * Two points are equal when they agree within kPointTolerance in every
 * coordinate. Point sets never hold two equal points, and a distance between a
 * point and an equal point is reported as 0.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setint/errors.hpp"
#include "setint/min_norm.hpp"
#include "setint/simplex.hpp"
#include "setint/spaces.hpp"

namespace setint {

inline constexpr double kPointTolerance = 1e-12;

namespace detail {

inline bool points_equal(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kPointTolerance) return false;
  return true;
}

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

/**
 * Greedy net builder. A candidate is kept iff no kept point is equal to it and
 * (for radius > 0) no kept point lies within `radius` in the space's norm.
 * Candidates are decided in arrival order, so the result is deterministic.
 *
 * Near-neighbour search uses a hashed grid whose cells are at least twice the
 * search radius (in the max norm; every supported norm dominates it), offset
 * by an irrational shift so round coordinates rarely sit on cell walls. When a
 * query would touch too many cells it falls back to a linear scan.
 */
class NetBuilder {
 public:
  NetBuilder(const SpaceDescriptor& space, double radius)
      : space_(space),
        dim_(space.dim()),
        radius_(radius),
        search_(std::max(radius, kPointTolerance)),
        cell_(std::max(2.0 * search_, 1e-6)),
        offset_(0.31830988618379067 * cell_) {}

  /// Returns true if the point was kept.
  bool add(std::span<const double> p) {
    if (!neighbours(p)) return false;
    const auto idx = static_cast<std::uint32_t>(count_);
    coords_.insert(coords_.end(), p.begin(), p.end());
    ++count_;
    grid_[home_hash(p)].push_back(idx);
    return true;
  }

  std::size_t size() const { return count_; }
  /// True once a candidate was dropped for lying within the radius of a
  /// different kept point (as opposed to being an exact duplicate).
  bool lossy() const { return lossy_; }
  std::vector<double> take() && { return std::move(coords_); }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::span<const double> kept(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }

  bool covers(std::span<const double> q, std::span<const double> p) {
    if (points_equal(q, p)) return true;
    if (radius_ > 0.0 && detail::distance_unchecked(space_.norm(), q, p) <= radius_) {
      lossy_ = true;
      return true;
    }
    return false;
  }

  std::int64_t cell_of(double x) const {
    const double c = std::floor((x + offset_) / cell_);
    return static_cast<std::int64_t>(std::clamp(c, -4.0e18, 4.0e18));
  }

  std::uint64_t home_hash(std::span<const double> p) const {
    std::uint64_t h = 0x12345678ULL;
    for (double x : p) h = mix64(h, static_cast<std::uint64_t>(cell_of(x)));
    return h;
  }

  // True when p is not covered by any kept point.
  bool neighbours(std::span<const double> p) {
    if (count_ == 0) return true;
    // For each coordinate: home cell plus at most one neighbour within the search radius.
    alt_.assign(dim_, 0);
    std::size_t ambiguous = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      const double x = p[i] + offset_;
      const std::int64_t c = cell_of(p[i]);
      const double lo = static_cast<double>(c) * cell_;
      if (x - lo <= search_) {
        alt_[i] = -1;
        ++ambiguous;
      } else if (lo + cell_ - x <= search_) {
        alt_[i] = +1;
        ++ambiguous;
      }
    }
    if (ambiguous > 10 || (std::size_t{1} << ambiguous) > count_) {
      for (std::size_t k = 0; k < count_; ++k)
        if (covers(kept(k), p)) return false;
      return true;
    }
    std::vector<std::size_t> amb_idx;
    for (std::size_t i = 0; i < dim_; ++i)
      if (alt_[i] != 0) amb_idx.push_back(i);
    const std::size_t combos = std::size_t{1} << ambiguous;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::uint64_t h = 0x12345678ULL;
      std::size_t a = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        std::int64_t c = cell_of(p[i]);
        if (a < amb_idx.size() && amb_idx[a] == i) {
          if (mask & (std::size_t{1} << a)) c += alt_[i];
          ++a;
        }
        h = mix64(h, static_cast<std::uint64_t>(c));
      }
      auto it = grid_.find(h);
      if (it == grid_.end()) continue;
      for (auto k : it->second)
        if (covers(kept(k), p)) return false;
    }
    return true;
  }

  SpaceDescriptor space_;
  std::size_t dim_;
  double radius_;
  double search_;
  double cell_;
  double offset_;
  std::vector<double> coords_;
  std::size_t count_ = 0;
  bool lossy_ = false;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid_;
  std::vector<int> alt_;
};

}  // namespace detail

/// Nonempty finite set of distinct points in a normed space.
class PointSet {
 public:
  PointSet(const SpaceDescriptor& space, const std::vector<Vector>& points) : space_(space) {
    if (points.empty()) throw invalid_argument("PointSet must be nonempty");
    detail::NetBuilder net(space_, 0.0);
    for (const auto& p : points) {
      detail::check_dim(space_, p.size(), "PointSet");
      if (!all_finite(p)) throw invalid_argument("PointSet: non-finite coordinate");
      net.add(p);
    }
    size_ = net.size();
    coords_ = std::move(net).take();
  }

  /// Adopts coordinates already known to be distinct and finite (row-major).
  static PointSet from_distinct(const SpaceDescriptor& space, std::vector<double> coords) {
    if (coords.empty() || coords.size() % space.dim() != 0)
      throw invalid_argument("PointSet: coordinate buffer is empty or ragged");
    PointSet s(space);
    s.size_ = coords.size() / space.dim();
    s.coords_ = std::move(coords);
    return s;
  }

  /// Deduplicates a row-major buffer.
  static PointSet from_flat(const SpaceDescriptor& space, std::span<const double> coords) {
    const std::size_t d = space.dim();
    if (coords.empty() || coords.size() % d != 0)
      throw invalid_argument("PointSet: coordinate buffer is empty or ragged");
    detail::NetBuilder net(space, 0.0);
    for (std::size_t i = 0; i < coords.size(); i += d) {
      auto p = coords.subspan(i, d);
      if (!all_finite(p)) throw invalid_argument("PointSet: non-finite coordinate");
      net.add(p);
    }
    PointSet s(space);
    s.size_ = net.size();
    s.coords_ = std::move(net).take();
    return s;
  }

  const SpaceDescriptor& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  std::size_t size() const noexcept { return size_; }
  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim(), dim()}; }
  std::span<const double> coords() const noexcept { return coords_; }

  std::vector<Vector> points() const {
    std::vector<Vector> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.emplace_back(point(i).begin(), point(i).end());
    return out;
  }

  /// Largest pairwise distance.
  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i + 1; j < size_; ++j)
        d = std::max(d, detail::distance_unchecked(space_.norm(), point(i), point(j)));
    return d;
  }

  /// Largest norm of a member.
  double max_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size_; ++i) m = std::max(m, detail::norm_unchecked(space_.norm(), point(i)));
    return m;
  }

 private:
  explicit PointSet(const SpaceDescriptor& space) : space_(space) {}

  SpaceDescriptor space_;
  std::vector<double> coords_;
  std::size_t size_ = 0;
};

/// A point set together with a certified Hausdorff bound to the exact set it
/// approximates.
struct PrunedSet {
  PointSet base;
  double err_bound = 0.0;
};

namespace detail {

inline void check_same_space(const PointSet& A, const PointSet& B, const char* what) {
  if (A.dim() != B.dim() || A.space().norm() != B.space().norm())
    throw invalid_argument(std::string(what) + ": operands live in different spaces");
}

}  // namespace detail

inline PointSet scale(double lambda, const PointSet& A) {
  std::vector<double> c(A.coords().begin(), A.coords().end());
  for (double& x : c) x *= lambda;
  return PointSet::from_flat(A.space(), c);
}

/// Minkowski sum {a + b}, deduplicated; with delta > 0 the sums are streamed
/// through a greedy delta-net (pairs visited with A outer, B inner). The
/// error bound is delta if the net discarded any non-duplicate sum, else 0.
/// Throws resource_limit when more than `cap` points survive.
inline PrunedSet minkowski_net(const PointSet& A, const PointSet& B, double delta,
                               std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  detail::check_same_space(A, B, "minkowski");
  if (delta < 0.0) throw invalid_argument("minkowski: delta must be >= 0");
  const std::size_t d = A.dim();
  detail::NetBuilder net(A.space(), delta);
  std::vector<double> s(d);
  for (std::size_t i = 0; i < A.size(); ++i) {
    auto a = A.point(i);
    for (std::size_t j = 0; j < B.size(); ++j) {
      auto b = B.point(j);
      for (std::size_t k = 0; k < d; ++k) s[k] = a[k] + b[k];
      net.add(s);
      if (net.size() > cap)
        throw resource_limit("Minkowski sum exceeds the cardinality cap of " + std::to_string(cap) +
                             " points; increase the pruning delta");
    }
  }
  const double err = net.lossy() ? delta : 0.0;
  return {PointSet::from_distinct(A.space(), std::move(net).take()), err};
}

inline PointSet minkowski_pruned(const PointSet& A, const PointSet& B, double delta,
                                 std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  return minkowski_net(A, B, delta, cap).base;
}

inline PointSet minkowski(const PointSet& A, const PointSet& B) { return minkowski_pruned(A, B, 0.0); }

/// Greedy delta-net in input order: a point is kept iff it is more than delta
/// from every point kept before it. The error bound is delta when some point
/// was dropped, else 0.
inline PrunedSet prune(const PointSet& A, double delta) {
  if (delta < 0.0) throw invalid_argument("prune: delta must be >= 0");
  if (delta == 0.0 || A.size() == 1) return {A, 0.0};
  detail::NetBuilder net(A.space(), delta);
  for (std::size_t i = 0; i < A.size(); ++i) net.add(A.point(i));
  const double err = net.lossy() ? delta : 0.0;
  return {PointSet::from_distinct(A.space(), std::move(net).take()), err};
}

/// rho~(A, B) = sup over b in B of dist(b, A).
inline double one_sided_hausdorff(const PointSet& A, const PointSet& B) {
  detail::check_same_space(A, B, "one_sided_hausdorff");
  const Norm nrm = A.space().norm();
  double worst = 0.0;
  for (std::size_t j = 0; j < B.size(); ++j) {
    auto b = B.point(j);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < A.size(); ++i) {
      auto a = A.point(i);
      if (detail::points_equal(a, b)) {
        best = 0.0;
        break;
      }
      best = std::min(best, detail::distance_unchecked(nrm, a, b));
      // b cannot raise the running maximum any more.
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

inline double hausdorff(const PointSet& A, const PointSet& B) {
  return std::max(one_sided_hausdorff(A, B), one_sided_hausdorff(B, A));
}

/// Distance from x to the nearest point of a finite set.
inline double dist_point_to_set(const SpaceDescriptor& space, std::span<const double> x, const PointSet& A) {
  detail::check_dim(space, x.size(), "dist_point_to_set");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (detail::points_equal(A.point(i), x)) return 0.0;
    best = std::min(best, detail::distance_unchecked(space.norm(), A.point(i), x));
  }
  return best;
}

struct HullDistance {
  double value = 0.0;
  double gap = 0.0;  // |value - exact| <= gap
};

namespace detail {

inline HullDistance hull_distance_l2(std::span<const double> x, const PointSet& A, double tol) {
  const std::size_t d = A.dim();
  const std::size_t m = A.size();
  std::vector<double> shifted(m * d);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < d; ++j) shifted[k * d + j] = A.point(k)[j] - x[j];
  const auto r = min_norm_point(shifted, m, d, tol);
  if (!r.converged)
    throw solver_failure("dist_point_to_hull: min-norm iteration did not reach the requested gap", r.value,
                         r.gap);
  return {r.value, r.gap};
}

// L1: minimize sum(u + v) s.t. sum_k lambda_k a_k - u + v = x, sum lambda = 1.
// Linf: minimize t s.t. sum_k lambda_k a_k - u + v = x, u_j + v_j + s_j - t = 0, sum lambda = 1.
inline HullDistance hull_distance_lp(Norm nrm, std::span<const double> x, const PointSet& A) {
  const std::size_t d = A.dim();
  const std::size_t m = A.size();
  lp::Problem prob;
  if (nrm == Norm::L1) {
    prob.rows = d + 1;
    prob.cols = m + 2 * d;
  } else {
    prob.rows = 2 * d + 1;
    prob.cols = m + 3 * d + 1;
  }
  prob.A.assign(prob.rows * prob.cols, 0.0);
  prob.b.assign(prob.rows, 0.0);
  prob.c.assign(prob.cols, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return prob.A[r * prob.cols + c]; };
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < m; ++k) at(j, k) = A.point(k)[j];
    at(j, m + j) = -1.0;      // u_j
    at(j, m + d + j) = 1.0;   // v_j
    prob.b[j] = x[j];
  }
  if (nrm == Norm::L1) {
    for (std::size_t k = 0; k < m; ++k) at(d, k) = 1.0;
    prob.b[d] = 1.0;
    for (std::size_t j = 0; j < 2 * d; ++j) prob.c[m + j] = 1.0;
  } else {
    const std::size_t tcol = m + 3 * d;
    for (std::size_t j = 0; j < d; ++j) {
      at(d + j, m + j) = 1.0;
      at(d + j, m + d + j) = 1.0;
      at(d + j, m + 2 * d + j) = 1.0;  // slack
      at(d + j, tcol) = -1.0;
    }
    for (std::size_t k = 0; k < m; ++k) at(2 * d, k) = 1.0;
    prob.b[2 * d] = 1.0;
    prob.c[tcol] = 1.0;
  }
  const auto res = lp::solve(prob);
  if (res.status != lp::Status::Optimal)
    throw solver_failure("dist_point_to_hull: simplex did not reach an optimal basis",
                         std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity());
  return {std::max(0.0, res.objective), 0.0};
}

}  // namespace detail

/**
 * Distance from x to conv A with a certificate |value - exact| <= gap <= tol.
 * L2 uses the min-norm-point iteration; L1 and Linf solve an exact linear
 * program (gap 0 up to rounding). Values within kPointTolerance of zero are
 * reported as 0 with the discarded amount folded into the gap.
 */
inline HullDistance dist_point_to_hull(const SpaceDescriptor& space, std::span<const double> x,
                                       const PointSet& A, double tol) {
  if (!(tol > 0.0)) throw invalid_argument("dist_point_to_hull: tol must be positive");
  detail::check_dim(space, x.size(), "dist_point_to_hull");
  detail::check_dim(space, A.dim(), "dist_point_to_hull");
  for (std::size_t i = 0; i < A.size(); ++i)
    if (detail::points_equal(A.point(i), x)) return {0.0, 0.0};
  if (A.size() == 1) return {detail::distance_unchecked(space.norm(), A.point(0), x), 0.0};

  HullDistance r = space.norm() == Norm::L2 ? detail::hull_distance_l2(x, A, tol)
                                            : detail::hull_distance_lp(space.norm(), x, A);
  if (r.value <= kPointTolerance) return {0.0, r.value + r.gap};
  return r;
}

/// rho_H(conv A, conv B) up to tol. The supremum of a convex function over a
/// hull is attained at a generator, so only generators are queried.
inline double hausdorff_hulls(const PointSet& A, const PointSet& B, double tol) {
  detail::check_same_space(A, B, "hausdorff_hulls");
  const auto& space = A.space();
  double worst = 0.0;
  auto sweep = [&](const PointSet& from, const PointSet& into) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      auto x = from.point(i);
      // dist(x, conv into) <= dist(x, into): skip generators that cannot raise the max.
      if (dist_point_to_set(space, x, into) <= worst) continue;
      worst = std::max(worst, dist_point_to_hull(space, x, into, tol).value);
    }
  };
  sweep(A, B);
  sweep(B, A);
  return worst;
}

/// Union of two point sets in the same space.
inline PointSet set_union(const PointSet& A, const PointSet& B) {
  detail::check_same_space(A, B, "set_union");
  std::vector<double> c(A.coords().begin(), A.coords().end());
  c.insert(c.end(), B.coords().begin(), B.coords().end());
  return PointSet::from_flat(A.space(), c);
}

/// Image of A under the linear map `P` (row-major, target.dim() x A.dim()).
inline PointSet apply_linear(const std::vector<double>& P, const SpaceDescriptor& target, const PointSet& A) {
  const std::size_t n = A.dim();
  const std::size_t m = target.dim();
  if (P.size() != m * n) throw invalid_argument("apply_linear: matrix shape does not match the spaces");
  std::vector<double> out(A.size() * m, 0.0);
  for (std::size_t k = 0; k < A.size(); ++k) {
    auto a = A.point(k);
    for (std::size_t r = 0; r < m; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += P[r * n + c] * a[c];
      out[k * m + r] = s;
    }
  }
  return PointSet::from_flat(target, out);
}

}  // namespace setint
