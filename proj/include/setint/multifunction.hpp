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
 * @file multifunction.hpp
 * @brief Closed DSL of set-valued maps F: [0, 1] -> finite subsets of a normed space.
 *
 * Bodies:
 *   - Constant(A)                        F(t) = A
 *   - PiecewiseConstant(breaks, sets)    F(t) = sets[i] on [x_{i-1}, x_i), last piece closed
 *   - MovingFinite(curves)               F(t) = { g_k(t) }, g_k polynomial with vector coefficients
 *   - ConvexHullOf(inner)                same generators as inner, read with hull semantics
 *   - CounterexampleL1(n, N)             F(t) = { e_1, ..., e_N } in l1^N
 *
 * Every multifunction carries declared bounds: ||a|| <= bound_m and
 * diam F(t) <= diam_bound for all t. They are checked by sampling
 * (verify_bounds), never inferred.
 */

#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "setint/errors.hpp"
#include "setint/random.hpp"
#include "setint/setops.hpp"
#include "setint/spaces.hpp"

namespace setint {

class Multifunction;

namespace body {

struct Constant {
  PointSet value;
};

struct PiecewiseConstant {
  std::vector<double> breaks;  // interior breakpoints, strictly increasing in (0, 1)
  std::vector<PointSet> sets;  // breaks.size() + 1 values
};

struct MovingFinite {
  // curves[k][j] is the coefficient vector of t^j in curve k.
  std::vector<std::vector<Vector>> curves;
};

struct ConvexHullOf {
  std::shared_ptr<const Multifunction> inner;
};

struct CounterexampleL1 {
  int n = 2;
  std::size_t N = 3;
};

}  // namespace body

using Body = std::variant<body::Constant, body::PiecewiseConstant, body::MovingFinite, body::ConvexHullOf,
                          body::CounterexampleL1>;

class Multifunction {
 public:
  Multifunction(SpaceDescriptor space, Body b, double bound_m, double diam_bound)
      : space_(std::move(space)), body_(std::move(b)), bound_m_(bound_m), diam_bound_(diam_bound) {
    if (!(bound_m_ >= 0.0) || !(diam_bound_ >= 0.0))
      throw invalid_argument("multifunction bounds must be nonnegative");
    validate();
  }

  const SpaceDescriptor& space() const noexcept { return space_; }
  const Body& body() const noexcept { return body_; }
  double bound_m() const noexcept { return bound_m_; }
  double diam_bound() const noexcept { return diam_bound_; }

  /// True when the values are read as convex hulls of their generators.
  bool hull_semantics() const { return std::holds_alternative<body::ConvexHullOf>(body_); }

  /// Generators of F(t).
  PointSet eval(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw invalid_argument("eval: t must lie in [0, 1]");
    return std::visit([&](const auto& b) { return eval_body(b, t); }, body_);
  }

  std::string kind() const {
    struct {
      std::string operator()(const body::Constant&) const { return "constant"; }
      std::string operator()(const body::PiecewiseConstant&) const { return "piecewise_constant"; }
      std::string operator()(const body::MovingFinite&) const { return "moving_finite"; }
      std::string operator()(const body::ConvexHullOf&) const { return "convex_hull"; }
      std::string operator()(const body::CounterexampleL1&) const { return "counterexample_l1"; }
    } v;
    return std::visit(v, body_);
  }

 private:
  void check_set(const PointSet& s) const {
    if (s.dim() != space_.dim() || s.space().norm() != space_.norm())
      throw invalid_argument("multifunction value lives in a different space");
  }

  void validate() const {
    if (auto* c = std::get_if<body::Constant>(&body_)) {
      check_set(c->value);
    } else if (auto* pc = std::get_if<body::PiecewiseConstant>(&body_)) {
      if (pc->sets.size() != pc->breaks.size() + 1)
        throw invalid_argument("piecewise_constant needs one more set than interior breakpoints");
      double prev = 0.0;
      for (double b : pc->breaks) {
        if (!(b > prev && b < 1.0))
          throw invalid_argument("piecewise_constant breakpoints must increase strictly inside (0, 1)");
        prev = b;
      }
      for (const auto& s : pc->sets) check_set(s);
    } else if (auto* mf = std::get_if<body::MovingFinite>(&body_)) {
      if (mf->curves.empty()) throw invalid_argument("moving_finite needs at least one curve");
      for (const auto& curve : mf->curves) {
        if (curve.empty()) throw invalid_argument("moving_finite curve without coefficients");
        for (const auto& c : curve) {
          detail::check_dim(space_, c.size(), "moving_finite coefficient");
          if (!all_finite(c)) throw invalid_argument("moving_finite: non-finite coefficient");
        }
      }
    } else if (auto* h = std::get_if<body::ConvexHullOf>(&body_)) {
      if (!h->inner) throw invalid_argument("convex_hull without inner multifunction");
      if (h->inner->space().dim() != space_.dim() || h->inner->space().norm() != space_.norm())
        throw invalid_argument("convex_hull inner multifunction lives in a different space");
    } else if (auto* cx = std::get_if<body::CounterexampleL1>(&body_)) {
      if (space_.norm() != Norm::L1 || space_.dim() != cx->N)
        throw invalid_argument("counterexample_l1 lives in l1^N");
    }
  }

  PointSet eval_body(const body::Constant& b, double) const { return b.value; }

  PointSet eval_body(const body::PiecewiseConstant& b, double t) const {
    std::size_t i = 0;
    while (i < b.breaks.size() && t >= b.breaks[i]) ++i;
    return b.sets[i];
  }

  PointSet eval_body(const body::MovingFinite& b, double t) const {
    const std::size_t d = space_.dim();
    std::vector<double> pts(b.curves.size() * d, 0.0);
    for (std::size_t k = 0; k < b.curves.size(); ++k) {
      // Horner, highest degree first.
      const auto& coeffs = b.curves[k];
      for (std::size_t j = coeffs.size(); j-- > 0;)
        for (std::size_t i = 0; i < d; ++i) pts[k * d + i] = pts[k * d + i] * t + coeffs[j][i];
    }
    return PointSet::from_flat(space_, pts);
  }

  PointSet eval_body(const body::ConvexHullOf& b, double t) const { return b.inner->eval(t); }

  PointSet eval_body(const body::CounterexampleL1& b, double) const {
    std::vector<double> pts(b.N * b.N, 0.0);
    for (std::size_t j = 0; j < b.N; ++j) pts[j * b.N + j] = 1.0;
    return PointSet::from_distinct(space_, std::move(pts));
  }

  SpaceDescriptor space_;
  Body body_;
  double bound_m_;
  double diam_bound_;
};

inline PointSet eval(const Multifunction& F, double t) { return F.eval(t); }

/// conv F: same generators, hull semantics. Bounds carry over (the hull has the
/// same norm bound and diameter as its generators).
inline Multifunction convex_hull_of(const Multifunction& F) {
  return Multifunction(F.space(), body::ConvexHullOf{std::make_shared<const Multifunction>(F)}, F.bound_m(),
                       F.diam_bound());
}

struct MeasuredBounds {
  double sup_norm = 0.0;
  double sup_diam = 0.0;
};

/// Sup of member norms and of diameters over `samples` random t plus t = 0 and 1.
inline MeasuredBounds measure_bounds(const Multifunction& F, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  MeasuredBounds mb;
  auto probe = [&](double t) {
    const auto v = F.eval(t);
    mb.sup_norm = std::max(mb.sup_norm, v.max_norm());
    mb.sup_diam = std::max(mb.sup_diam, v.diameter());
  };
  probe(0.0);
  probe(1.0);
  for (std::size_t i = 0; i < samples; ++i) probe(rng.uniform());
  return mb;
}

/// Throws invalid_argument when a sampled value breaks the declared bounds.
inline void verify_bounds(const Multifunction& F, std::size_t samples, std::uint64_t seed) {
  const auto mb = measure_bounds(F, samples, seed);
  const double slack = 1e-12 * (1.0 + F.bound_m());
  if (mb.sup_norm > F.bound_m() + slack)
    throw invalid_argument("multifunction violates its declared norm bound: sampled " +
                           std::to_string(mb.sup_norm) + " > " + std::to_string(F.bound_m()));
  if (mb.sup_diam > F.diam_bound() + slack)
    throw invalid_argument("multifunction violates its declared diameter bound: sampled " +
                           std::to_string(mb.sup_diam) + " > " + std::to_string(F.diam_bound()));
}

}  // namespace setint
