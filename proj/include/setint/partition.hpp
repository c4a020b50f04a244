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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "setint/errors.hpp"
#include "setint/random.hpp"

namespace setint {

/// Tagged partition 0 = x_0 < x_1 < ... < x_n = 1 with tags t_i in [x_{i-1}, x_i].
class TaggedPartition {
 public:
  TaggedPartition(std::vector<double> breakpoints, std::vector<double> tags)
      : breaks_(std::move(breakpoints)), tags_(std::move(tags)) {
    if (breaks_.size() < 2) throw invalid_argument("partition needs at least one interval");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
      throw invalid_argument("partition must start at 0 and end at 1");
    if (tags_.size() + 1 != breaks_.size())
      throw invalid_argument("partition needs exactly one tag per interval");
    for (std::size_t i = 1; i < breaks_.size(); ++i) {
      if (!(breaks_[i] > breaks_[i - 1])) throw invalid_argument("breakpoints must be strictly increasing");
      const double t = tags_[i - 1];
      if (!(t >= breaks_[i - 1] && t <= breaks_[i]))
        throw invalid_argument("tag " + std::to_string(i) + " lies outside its interval");
    }
  }

  std::size_t size() const noexcept { return tags_.size(); }
  const std::vector<double>& breakpoints() const noexcept { return breaks_; }
  const std::vector<double>& tags() const noexcept { return tags_; }

  double length(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

  std::vector<double> lengths() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = length(i);
    return out;
  }

  /// d(T) = max |Delta_i|.
  double mesh() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, length(i));
    return m;
  }

  /// True when every interval has the same length as the first (to 1e-12).
  bool is_uniform() const {
    const double l0 = length(0);
    for (std::size_t i = 1; i < size(); ++i)
      if (std::abs(length(i) - l0) > 1e-12) return false;
    return true;
  }

 private:
  std::vector<double> breaks_;
  std::vector<double> tags_;
};

struct TagRule {
  enum class Kind { Left, Right, Mid, Random };
  Kind kind = Kind::Mid;
  std::uint64_t seed = 0;

  static TagRule left() { return {Kind::Left, 0}; }
  static TagRule right() { return {Kind::Right, 0}; }
  static TagRule mid() { return {Kind::Mid, 0}; }
  static TagRule random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

inline TagRule parse_tag_rule(std::string_view s, std::uint64_t seed) {
  if (s == "left") return TagRule::left();
  if (s == "right") return TagRule::right();
  if (s == "mid") return TagRule::mid();
  if (s == "random") return TagRule::random(seed);
  throw invalid_argument("unknown tag rule '" + std::string(s) + "' (expected left, right, mid or random)");
}

namespace detail {

inline std::vector<double> place_tags(const std::vector<double>& x, const TagRule& rule) {
  const std::size_t n = x.size() - 1;
  std::vector<double> tags(n);
  Rng rng(rule.seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = x[i], b = x[i + 1];
    switch (rule.kind) {
      case TagRule::Kind::Left: tags[i] = a; break;
      case TagRule::Kind::Right: tags[i] = b; break;
      case TagRule::Kind::Mid: tags[i] = 0.5 * (a + b); break;
      case TagRule::Kind::Random: tags[i] = std::min(b, rng.uniform(a, b)); break;
    }
  }
  return tags;
}

}  // namespace detail

/// n equal intervals, breakpoints i/n, tags per `rule`.
inline TaggedPartition uniform_partition(std::size_t n, TagRule rule = TagRule::mid()) {
  if (n < 1) throw invalid_argument("uniform_partition: n must be >= 1");
  std::vector<double> x(n + 1);
  for (std::size_t i = 0; i <= n; ++i) x[i] = static_cast<double>(i) / static_cast<double>(n);
  x.back() = 1.0;
  return {x, detail::place_tags(x, rule)};
}

/// n intervals with uniformly random interior breakpoints (seeded).
inline TaggedPartition random_partition(std::size_t n, std::uint64_t seed, TagRule rule) {
  if (n < 1) throw invalid_argument("random_partition: n must be >= 1");
  Rng rng(seed);
  std::vector<double> x;
  x.reserve(n + 1);
  x.push_back(0.0);
  for (std::size_t i = 1; i < n; ++i) x.push_back(rng.uniform());
  x.push_back(1.0);
  std::sort(x.begin() + 1, x.end() - 1);
  // Collapse repeats (probability ~0 but keeps the invariant airtight).
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.back() != 1.0) x.push_back(1.0);
  return {x, detail::place_tags(x, rule)};
}

/// The fine partition (every interval halved, one tag per half), and the two
/// coarse partitions reusing the odd / even tags on the original intervals.
/// S(F, fine) = S(F, a)/2 + S(F, b)/2 holds as a Minkowski identity.
struct HalvedPartitions {
  TaggedPartition fine;
  TaggedPartition a;
  TaggedPartition b;
};

inline HalvedPartitions halve_with_tags(const std::vector<double>& breakpoints, std::uint64_t seed) {
  if (breakpoints.size() < 2) throw invalid_argument("halve_with_tags: need at least one interval");
  // Validates the breakpoints through a throwaway tagged partition.
  (void)TaggedPartition(breakpoints, detail::place_tags(breakpoints, TagRule::left()));
  Rng rng(seed);
  const std::size_t n = breakpoints.size() - 1;
  std::vector<double> fx, ft, ta(n), tb(n);
  fx.reserve(2 * n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double l = breakpoints[k], r = breakpoints[k + 1];
    const double mid = 0.5 * l + 0.5 * r;
    const double t1 = std::min(mid, rng.uniform(l, mid));
    const double t2 = std::min(r, rng.uniform(mid, r));
    fx.push_back(l);
    fx.push_back(mid);
    ft.push_back(t1);
    ft.push_back(t2);
    ta[k] = t1;
    tb[k] = t2;
  }
  fx.push_back(1.0);
  return {TaggedPartition(fx, ft), TaggedPartition(breakpoints, ta), TaggedPartition(breakpoints, tb)};
}

}  // namespace setint
