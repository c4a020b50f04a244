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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "setint/setops.hpp"
#include "setint/simplex.hpp"

using namespace setint;

namespace {

PointSet make(const SpaceDescriptor& s, const oracle::Cloud& c) { return PointSet(s, c); }

constexpr Norm kNorms[] = {Norm::L1, Norm::L2, Norm::Linf};

}  // namespace

TEST(PointSet, DeduplicatesAndValidates) {
  const SpaceDescriptor s(2, Norm::L2);
  const PointSet A(s, {{0, 0}, {1, 0}, {0, 0}, {1, 1e-14}});
  EXPECT_EQ(A.size(), 2u);
  EXPECT_THROW(PointSet(s, {}), invalid_argument);
  EXPECT_THROW(PointSet(s, {{0, 0, 0}}), invalid_argument);
  EXPECT_THROW(PointSet(s, {{0, NAN}}), invalid_argument);
  EXPECT_THROW(PointSet::from_flat(s, std::vector<double>{1, 2, 3}), invalid_argument);
}

TEST(PointSet, DiameterAndMaxNorm) {
  const SpaceDescriptor s(2, Norm::L1);
  const PointSet A(s, {{0, 0}, {1, 0}, {0, 2}});
  EXPECT_DOUBLE_EQ(A.diameter(), 3.0);
  EXPECT_DOUBLE_EQ(A.max_norm(), 2.0);
}

TEST(Hausdorff, MatchesBruteForce) {
  std::mt19937_64 g(1);
  for (Norm n : kNorms) {
    const SpaceDescriptor s(3, n);
    for (int t = 0; t < 100; ++t) {
      const auto a = oracle::random_cloud(g, 1 + t % 7, 3), b = oracle::random_cloud(g, 1 + t % 5, 3);
      const auto A = make(s, a), B = make(s, b);
      EXPECT_NEAR(hausdorff(A, B), oracle::hausdorff(n, a, b), 1e-14);
      EXPECT_NEAR(one_sided_hausdorff(A, B), oracle::one_sided(n, a, b), 1e-14);
    }
  }
}

TEST(Hausdorff, SmallExamples) {
  const SpaceDescriptor s(1, Norm::L2);
  const PointSet A(s, {{0}, {1}}), B(s, {{0}}), C(s, {{0}, {0.5}, {1}});
  EXPECT_DOUBLE_EQ(hausdorff(A, B), 1.0);
  EXPECT_DOUBLE_EQ(one_sided_hausdorff(A, B), 0.0);
  EXPECT_DOUBLE_EQ(one_sided_hausdorff(A, C), 0.5);
  EXPECT_DOUBLE_EQ(hausdorff(A, A), 0.0);
}

TEST(Hausdorff, MixedSpacesThrow) {
  const PointSet A(SpaceDescriptor(2, Norm::L2), {{0, 0}});
  const PointSet B(SpaceDescriptor(2, Norm::L1), {{0, 0}});
  const PointSet C(SpaceDescriptor(3, Norm::L2), {{0, 0, 0}});
  EXPECT_THROW(hausdorff(A, B), invalid_argument);
  EXPECT_THROW(hausdorff(A, C), invalid_argument);
  EXPECT_THROW(minkowski(A, C), invalid_argument);
}

TEST(Minkowski, TwoPointSets) {
  const SpaceDescriptor s(1, Norm::L2);
  const PointSet A(s, {{0}, {1}});
  const auto S = minkowski(A, A);
  EXPECT_EQ(S.size(), 3u);
  EXPECT_EQ(hausdorff(S, PointSet(s, {{0}, {1}, {2}})), 0.0);
}

TEST(Minkowski, MatchesAllPairSums) {
  std::mt19937_64 g(2);
  const SpaceDescriptor s(2, Norm::L2);
  for (int t = 0; t < 30; ++t) {
    const auto a = oracle::random_cloud(g, 4, 2), b = oracle::random_cloud(g, 6, 2);
    const auto S = minkowski(make(s, a), make(s, b));
    const auto ref = oracle::all_sums({a, b}, {1.0, 1.0});
    EXPECT_EQ(S.size(), ref.size());
    EXPECT_LT(oracle::hausdorff(Norm::L2, S.points(), ref), 1e-14);
  }
}

TEST(Minkowski, CapRaisesResourceLimit) {
  std::mt19937_64 g(3);
  const SpaceDescriptor s(2, Norm::L2);
  const auto A = make(s, oracle::random_cloud(g, 30, 2));
  EXPECT_THROW(minkowski_pruned(A, A, 0.0, 100), resource_limit);
}

// prune: kept points are delta-separated and cover the input within delta.
TEST(Prune, NetProperties) {
  std::mt19937_64 g(4);
  for (Norm n : kNorms) {
    const SpaceDescriptor s(3, n);
    for (double delta : {0.05, 0.2, 0.7}) {
      const auto a = oracle::random_cloud(g, 400, 3);
      const auto P = prune(make(s, a), delta);
      const auto kept = P.base.points();
      EXPECT_LE(oracle::one_sided(n, kept, a), delta + 1e-15);
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) EXPECT_GT(oracle::dist(n, kept[i], kept[j]), delta);
      EXPECT_LE(hausdorff(P.base, make(s, a)), P.err_bound + 1e-15);
      EXPECT_EQ(P.err_bound, kept.size() < a.size() ? delta : 0.0);
    }
  }
}

TEST(Prune, NoLossMeansNoLedger) {
  const SpaceDescriptor s(1, Norm::L2);
  const PointSet A(s, {{0}, {1}, {2}});
  const auto P = prune(A, 0.5);
  EXPECT_EQ(P.base.size(), 3u);
  EXPECT_EQ(P.err_bound, 0.0);
  EXPECT_EQ(prune(A, 1.0).err_bound, 1.0);
  EXPECT_THROW(prune(A, -1.0), invalid_argument);
}

TEST(Prune, GridAgreesWithLinearScan) {
  // Points on a lattice exercise cell walls; compare against a naive greedy net.
  const SpaceDescriptor s(2, Norm::Linf);
  oracle::Cloud a;
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) a.push_back({i * 0.05, j * 0.05});
  const double delta = 0.1;
  const auto P = prune(make(s, a), delta).base.points();
  oracle::Cloud naive;
  for (const auto& p : a)
    if (naive.empty() || oracle::point_to_cloud(Norm::Linf, p, naive) > delta) naive.push_back(p);
  ASSERT_EQ(P.size(), naive.size());
  for (std::size_t i = 0; i < P.size(); ++i) EXPECT_EQ(P[i], naive[i]);
}

TEST(Simplex, SmallPrograms) {
  // min -x - y s.t. x + y + s = 4, x + 3y + t = 6.
  lp::Problem p;
  p.rows = 2;
  p.cols = 4;
  p.A = {1, 1, 1, 0, 1, 3, 0, 1};
  p.b = {4, 6};
  p.c = {-1, -1, 0, 0};
  auto r = lp::solve(p);
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_NEAR(r.objective, -4.0, 1e-12);

  // Infeasible: x = -1 with x >= 0.
  lp::Problem q;
  q.rows = 1;
  q.cols = 1;
  q.A = {1};
  q.b = {-1};
  q.c = {0};
  EXPECT_EQ(lp::solve(q).status, lp::Status::Infeasible);

  // Unbounded: min -x s.t. x - y = 0.
  lp::Problem u;
  u.rows = 1;
  u.cols = 2;
  u.A = {1, -1};
  u.b = {0};
  u.c = {-1, 0};
  EXPECT_EQ(lp::solve(u).status, lp::Status::Unbounded);
}

TEST(HullDistance, SimplexExamples) {
  const SpaceDescriptor l2(2, Norm::L2), l1(2, Norm::L1), li(2, Norm::Linf);
  const oracle::Cloud sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(dist_point_to_hull(l2, Vector{0.5, 0.5}, make(l2, sq), 1e-10).value, 0.0);
  EXPECT_NEAR(dist_point_to_hull(l2, Vector{2, 2}, make(l2, sq), 1e-10).value, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(dist_point_to_hull(l1, Vector{2, 2}, make(l1, sq), 1e-10).value, 2.0, 1e-12);
  EXPECT_NEAR(dist_point_to_hull(li, Vector{2, 3}, make(li, sq), 1e-10).value, 2.0, 1e-12);
  EXPECT_THROW(dist_point_to_hull(l2, Vector{0, 0}, make(l2, sq), 0.0), invalid_argument);
}

TEST(HullDistance, PlanarOracleAllNorms) {
  std::mt19937_64 g(6);
  for (Norm n : kNorms) {
    const SpaceDescriptor s(2, n);
    for (int t = 0; t < 200; ++t) {
      const auto a = oracle::random_cloud(g, 1 + t % 6, 2);
      const auto x = oracle::random_cloud(g, 1, 2, 1.5)[0];
      const auto h = dist_point_to_hull(s, x, make(s, a), 1e-10);
      EXPECT_NEAR(h.value, oracle::point_to_hull_2d(n, x, a), 1e-9) << "norm " << to_string(n) << " trial " << t;
      EXPECT_LE(h.gap, 1e-10 + 1e-12);
    }
  }
}

TEST(HullDistance, EuclideanOracleInThreeDimensions) {
  std::mt19937_64 g(7);
  const SpaceDescriptor s(3, Norm::L2);
  for (int t = 0; t < 150; ++t) {
    const auto a = oracle::random_cloud(g, 2 + t % 7, 3);
    const auto x = oracle::random_cloud(g, 1, 3, 1.5)[0];
    EXPECT_NEAR(dist_point_to_hull(s, x, make(s, a), 1e-10).value, oracle::point_to_hull_l2(x, a), 1e-8);
  }
}

TEST(HullDistance, HighDimensionalSimplexBarycenter) {
  // Barycenter of the simplex in l1^64 lies in the hull; a vertex of the
  // scaled simplex lies at l1 distance 1 from it.
  const std::size_t N = 64;
  for (Norm n : kNorms) {
    const SpaceDescriptor s(N, n);
    std::vector<Vector> e(N, Vector(N, 0.0));
    for (std::size_t j = 0; j < N; ++j) e[j][j] = 1.0;
    const PointSet E(s, e);
    Vector bary(N, 1.0 / N);
    EXPECT_NEAR(dist_point_to_hull(s, bary, E, 1e-10).value, 0.0, 1e-9);
  }
  const SpaceDescriptor l1(N, Norm::L1);
  std::vector<Vector> e(N, Vector(N, 0.0));
  for (std::size_t j = 0; j < N; ++j) e[j][j] = 1.0;
  Vector x(N, 0.0);
  x[0] = 2.0;
  EXPECT_NEAR(dist_point_to_hull(l1, x, PointSet(l1, e), 1e-10).value, 1.0, 1e-12);
}

// conv U, conv V are no farther apart than U, V.
TEST(HausdorffHulls, NeverExceedsFiniteDistance) {
  std::mt19937_64 g(8);
  for (Norm n : kNorms) {
    const SpaceDescriptor s(3, n);
    for (int t = 0; t < 100; ++t) {
      const auto U = make(s, oracle::random_cloud(g, 1 + t % 6, 3));
      const auto V = make(s, oracle::random_cloud(g, 1 + t % 4, 3));
      EXPECT_LE(hausdorff_hulls(U, V, 1e-8), hausdorff(U, V) + 2e-8);
      EXPECT_EQ(hausdorff_hulls(U, U, 1e-8), 0.0);
    }
  }
}

TEST(HausdorffHulls, InteriorPointsDoNotCount) {
  const SpaceDescriptor s(2, Norm::L2);
  const PointSet sq(s, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const PointSet sq_mid(s, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0.5, 0.5}, {0.2, 0.7}});
  EXPECT_EQ(hausdorff_hulls(sq, sq_mid, 1e-10), 0.0);
  EXPECT_GT(hausdorff(sq, sq_mid), 0.4);
}

TEST(LinearMaps, ImageAndUnion) {
  const SpaceDescriptor s2(2, Norm::L2), s1(1, Norm::L2);
  const PointSet A(s2, {{1, 2}, {3, 4}});
  const auto P = apply_linear({1, 1}, s1, A);
  EXPECT_EQ(hausdorff(P, PointSet(s1, {{3}, {7}})), 0.0);
  const auto Z = apply_linear({0, 0}, s1, A);
  EXPECT_EQ(Z.size(), 1u);
  EXPECT_THROW(apply_linear({1, 1, 1}, s1, A), invalid_argument);
  const auto U = set_union(A, PointSet(s2, {{1, 2}, {5, 6}}));
  EXPECT_EQ(U.size(), 3u);
  EXPECT_EQ(scale(2.0, A).point(1)[1], 8.0);
}

TEST(PointToSet, NearestPoint) {
  const SpaceDescriptor s(2, Norm::L1);
  const PointSet A(s, {{0, 0}, {2, 2}});
  EXPECT_DOUBLE_EQ(dist_point_to_set(s, Vector{1, 0.5}, A), 1.5);
  EXPECT_EQ(dist_point_to_set(s, Vector{2, 2}, A), 0.0);
}
