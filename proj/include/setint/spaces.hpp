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
 * @file spaces.hpp
 * @brief Finite-dimensional normed spaces R^n with the l1, l2 or l-infinity norm.
 *
 * A space may carry a declared infratype (p, C): for every finite family x_1..x_n
 *
 *     min over signs a_i = +-1 of || sum a_i x_i ||  <=  C (sum ||x_i||^p)^(1/p).
 *
 * The declaration is trusted input. The balance module estimates lower bounds
 * for the best constant empirically; nothing here certifies an upper bound.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setint/errors.hpp"

namespace setint {

using Vector = std::vector<double>;

enum class Norm { L1, L2, Linf };

inline std::string_view to_string(Norm n) {
  switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "?";
}

inline Norm parse_norm(std::string_view s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  if (s == "linf") return Norm::Linf;
  throw invalid_argument("unknown norm '" + std::string(s) + "' (expected l1, l2 or linf)");
}

struct Infratype {
  double p;
  double C;

  bool operator==(const Infratype&) const = default;
};

class SpaceDescriptor {
 public:
  SpaceDescriptor(std::size_t dim, Norm norm, std::optional<Infratype> infratype = std::nullopt)
      : dim_(dim), norm_(norm), infratype_(infratype) {
    if (dim_ < 1) throw invalid_argument("space dimension must be >= 1");
    if (infratype_) {
      const auto [p, C] = *infratype_;
      if (!(p > 1.0 && p <= 2.0))
        throw invalid_argument("infratype exponent p must lie in (1, 2]");
      if (!(C > 0.0) || !std::isfinite(C))
        throw invalid_argument("infratype constant C must be a positive finite number");
    }
  }

  /// Euclidean space with its valid declaration (p, C) = (2, 1).
  static SpaceDescriptor euclidean(std::size_t dim) {
    return SpaceDescriptor(dim, Norm::L2, Infratype{2.0, 1.0});
  }

  std::size_t dim() const noexcept { return dim_; }
  Norm norm() const noexcept { return norm_; }
  const std::optional<Infratype>& infratype() const noexcept { return infratype_; }

  bool operator==(const SpaceDescriptor&) const = default;

 private:
  std::size_t dim_;
  Norm norm_;
  std::optional<Infratype> infratype_;
};

namespace detail {

inline double norm_unchecked(Norm n, std::span<const double> v) {
  switch (n) {
    case Norm::L1: {
      double s = 0.0;
      for (double x : v) s += std::abs(x);
      return s;
    }
    case Norm::L2: {
      // Scaled accumulation so huge or tiny coordinates neither overflow nor underflow.
      double scale = 0.0;
      for (double x : v) scale = std::max(scale, std::abs(x));
      if (scale == 0.0) return 0.0;
      double s = 0.0;
      for (double x : v) {
        const double y = x / scale;
        s += y * y;
      }
      return scale * std::sqrt(s);
    }
    case Norm::Linf: {
      double m = 0.0;
      for (double x : v) m = std::max(m, std::abs(x));
      return m;
    }
  }
  return 0.0;
}

inline double distance_unchecked(Norm n, std::span<const double> a, std::span<const double> b) {
  const std::size_t d = a.size();
  switch (n) {
    case Norm::L1: {
      double s = 0.0;
      for (std::size_t i = 0; i < d; ++i) s += std::abs(a[i] - b[i]);
      return s;
    }
    case Norm::L2: {
      double s = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double t = a[i] - b[i];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case Norm::Linf: {
      double m = 0.0;
      for (std::size_t i = 0; i < d; ++i) m = std::max(m, std::abs(a[i] - b[i]));
      return m;
    }
  }
  return 0.0;
}

inline void check_dim(const SpaceDescriptor& space, std::size_t n, const char* what) {
  if (n != space.dim())
    throw invalid_argument(std::string(what) + ": dimension " + std::to_string(n) +
                           " does not match space dimension " + std::to_string(space.dim()));
}

}  // namespace detail

inline double norm(const SpaceDescriptor& space, std::span<const double> v) {
  detail::check_dim(space, v.size(), "norm");
  return detail::norm_unchecked(space.norm(), v);
}

inline double distance(const SpaceDescriptor& space, std::span<const double> a,
                       std::span<const double> b) {
  detail::check_dim(space, a.size(), "distance");
  detail::check_dim(space, b.size(), "distance");
  return detail::distance_unchecked(space.norm(), a, b);
}

/// Selection constant C1 = 2C / (2^(1-1/p) - 1) for the declared infratype (p, C).
inline double c1_constant(double p, double C) {
  if (!(p > 1.0)) throw invalid_argument("c1_constant: p must exceed 1");
  if (!(C > 0.0)) throw invalid_argument("c1_constant: C must be positive");
  return 2.0 * C / (std::pow(2.0, 1.0 - 1.0 / p) - 1.0);
}

inline double c1_constant(const SpaceDescriptor& space) {
  if (!space.infratype())
    throw unsupported_operation("c1_constant: space has no declared infratype");
  return c1_constant(space.infratype()->p, space.infratype()->C);
}

/// Norm of the dual space, used for operator-norm bounds.
inline Norm dual_norm(Norm n) {
  switch (n) {
    case Norm::L1: return Norm::Linf;
    case Norm::L2: return Norm::L2;
    case Norm::Linf: return Norm::L1;
  }
  return n;
}

inline bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace setint
