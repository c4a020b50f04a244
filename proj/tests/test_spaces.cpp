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
#include "setint/spaces.hpp"

using namespace setint;

TEST(Spaces, NormsOfSmallVectors) {
  const SpaceDescriptor l1(2, Norm::L1), l2(2, Norm::L2), li(2, Norm::Linf);
  const Vector v{3.0, -4.0};
  EXPECT_DOUBLE_EQ(norm(l1, v), 7.0);
  EXPECT_DOUBLE_EQ(norm(l2, v), 5.0);
  EXPECT_DOUBLE_EQ(norm(li, v), 4.0);
  EXPECT_DOUBLE_EQ(distance(l2, Vector{1, 1}, Vector{4, 5}), 5.0);
}

TEST(Spaces, ScaledEuclideanNormAvoidsOverflow) {
  const SpaceDescriptor l2(2, Norm::L2);
  EXPECT_DOUBLE_EQ(norm(l2, Vector{3e200, 4e200}), 5e200);
  EXPECT_DOUBLE_EQ(norm(l2, Vector{3e-200, 4e-200}), 5e-200);
}

TEST(Spaces, ParseAndPrintNorms) {
  for (Norm n : {Norm::L1, Norm::L2, Norm::Linf}) EXPECT_EQ(parse_norm(to_string(n)), n);
  EXPECT_THROW(parse_norm("l3"), invalid_argument);
}

TEST(Spaces, DescriptorValidation) {
  EXPECT_THROW(SpaceDescriptor(0, Norm::L2), invalid_argument);
  EXPECT_THROW(SpaceDescriptor(2, Norm::L2, Infratype{1.0, 1.0}), invalid_argument);
  EXPECT_THROW(SpaceDescriptor(2, Norm::L2, Infratype{2.5, 1.0}), invalid_argument);
  EXPECT_THROW(SpaceDescriptor(2, Norm::L2, Infratype{2.0, 0.0}), invalid_argument);
  EXPECT_NO_THROW(SpaceDescriptor(2, Norm::L1, Infratype{1.5, 3.0}));
  const auto e = SpaceDescriptor::euclidean(3);
  EXPECT_EQ(e.norm(), Norm::L2);
  EXPECT_EQ(*e.infratype(), (Infratype{2.0, 1.0}));
}

TEST(Spaces, DimensionMismatchThrows) {
  const SpaceDescriptor s(3, Norm::L1);
  EXPECT_THROW(norm(s, Vector{1, 2}), invalid_argument);
  EXPECT_THROW(distance(s, Vector{1, 2, 3}, Vector{1, 2}), invalid_argument);
}

TEST(Spaces, SelectionConstant) {
  EXPECT_NEAR(c1_constant(2.0, 1.0), 2.0 / (std::sqrt(2.0) - 1.0), 1e-12);
  EXPECT_NEAR(c1_constant(SpaceDescriptor::euclidean(4)), 4.82842712474619, 1e-12);
  EXPECT_THROW(c1_constant(SpaceDescriptor(2, Norm::L1)), unsupported_operation);
  // C1 scales linearly in C and blows up as p -> 1.
  EXPECT_NEAR(c1_constant(2.0, 3.0), 3.0 * c1_constant(2.0, 1.0), 1e-12);
  EXPECT_GT(c1_constant(1.01, 1.0), 100.0);
}

TEST(Spaces, DualNorms) {
  EXPECT_EQ(dual_norm(Norm::L1), Norm::Linf);
  EXPECT_EQ(dual_norm(Norm::Linf), Norm::L1);
  EXPECT_EQ(dual_norm(Norm::L2), Norm::L2);
}

// Norm axioms and agreement with the reference implementation on random vectors.
TEST(Spaces, NormAxiomsOnRandomVectors) {
  std::mt19937_64 g(11);
  std::normal_distribution<double> nd;
  for (Norm n : {Norm::L1, Norm::L2, Norm::Linf}) {
    const SpaceDescriptor s(5, n);
    for (int trial = 0; trial < 500; ++trial) {
      Vector a(5), b(5);
      for (auto& x : a) x = nd(g);
      for (auto& x : b) x = nd(g);
      const double lam = nd(g);
      Vector sum(5), scaled(5);
      for (int i = 0; i < 5; ++i) {
        sum[i] = a[i] + b[i];
        scaled[i] = lam * a[i];
      }
      EXPECT_NEAR(norm(s, a), oracle::norm(n, a), 1e-12);
      EXPECT_LE(norm(s, sum), norm(s, a) + norm(s, b) + 1e-12);
      EXPECT_NEAR(norm(s, scaled), std::abs(lam) * norm(s, a), 1e-12);
      EXPECT_NEAR(distance(s, a, b), distance(s, b, a), 0.0);
    }
  }
}

// Holder: |<x, y>| <= ||x|| ||y||_dual.
TEST(Spaces, DualPairingBound) {
  std::mt19937_64 g(5);
  std::normal_distribution<double> nd;
  for (Norm n : {Norm::L1, Norm::L2, Norm::Linf}) {
    const SpaceDescriptor s(4, n), sd(4, dual_norm(n));
    for (int trial = 0; trial < 200; ++trial) {
      Vector x(4), y(4);
      for (auto& v : x) v = nd(g);
      for (auto& v : y) v = nd(g);
      double ip = 0.0;
      for (int i = 0; i < 4; ++i) ip += x[i] * y[i];
      EXPECT_LE(std::abs(ip), norm(s, x) * norm(sd, y) + 1e-12);
    }
  }
}
