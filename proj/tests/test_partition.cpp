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
#include <memory>

#include "setint/multifunction.hpp"
#include "setint/partition.hpp"

using namespace setint;

TEST(Partition, UniformTags) {
  const auto T1 = uniform_partition(1, TagRule::left());
  EXPECT_EQ(T1.breakpoints(), (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(T1.tags(), (std::vector<double>{0.0}));
  const auto T4 = uniform_partition(4, TagRule::mid());
  EXPECT_EQ(T4.tags(), (std::vector<double>{0.125, 0.375, 0.625, 0.875}));
  EXPECT_DOUBLE_EQ(T4.mesh(), 0.25);
  EXPECT_TRUE(T4.is_uniform());
  EXPECT_EQ(uniform_partition(3, TagRule::right()).tags().back(), 1.0);
  EXPECT_THROW(uniform_partition(0), invalid_argument);
}

TEST(Partition, Validation) {
  EXPECT_THROW(TaggedPartition({0.0}, {}), invalid_argument);
  EXPECT_THROW(TaggedPartition({0.1, 1.0}, {0.5}), invalid_argument);
  EXPECT_THROW(TaggedPartition({0.0, 0.5, 0.5, 1.0}, {0.2, 0.5, 0.7}), invalid_argument);
  EXPECT_THROW(TaggedPartition({0.0, 0.5, 1.0}, {0.6, 0.7}), invalid_argument);
  EXPECT_THROW(TaggedPartition({0.0, 0.5, 1.0}, {0.2}), invalid_argument);
  EXPECT_THROW(parse_tag_rule("middle", 0), invalid_argument);
}

// Every generated partition telescopes to 1 and contains its tags.
TEST(Partition, RandomPartitionInvariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (auto rule : {TagRule::left(), TagRule::right(), TagRule::mid(), TagRule::random(seed)}) {
      const auto T = random_partition(1 + seed % 37, seed, rule);
      double total = 0.0;
      for (double l : T.lengths()) total += l;
      EXPECT_NEAR(total, 1.0, 1e-12);
      for (std::size_t i = 0; i < T.size(); ++i) {
        EXPECT_GE(T.tags()[i], T.breakpoints()[i]);
        EXPECT_LE(T.tags()[i], T.breakpoints()[i + 1]);
      }
      EXPECT_GT(T.mesh(), 0.0);
      EXPECT_LE(T.mesh(), 1.0);
    }
  }
}

TEST(Partition, RandomTagsAreSeeded) {
  const auto a = uniform_partition(16, TagRule::random(9)), b = uniform_partition(16, TagRule::random(9));
  const auto c = uniform_partition(16, TagRule::random(10));
  EXPECT_EQ(a.tags(), b.tags());
  EXPECT_NE(a.tags(), c.tags());
}

TEST(Halving, StructureOfTheThreePartitions) {
  const auto hp = halve_with_tags({0.0, 1.0}, 3);
  EXPECT_EQ(hp.fine.breakpoints(), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_LE(hp.fine.tags()[0], 0.5);
  EXPECT_GE(hp.fine.tags()[1], 0.5);
  EXPECT_EQ(hp.a.tags()[0], hp.fine.tags()[0]);
  EXPECT_EQ(hp.b.tags()[0], hp.fine.tags()[1]);

  const auto base = random_partition(9, 4, TagRule::mid());
  const auto h = halve_with_tags(base.breakpoints(), 5);
  ASSERT_EQ(h.fine.size(), 2 * base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    EXPECT_EQ(h.a.tags()[k], h.fine.tags()[2 * k]);
    EXPECT_EQ(h.b.tags()[k], h.fine.tags()[2 * k + 1]);
    EXPECT_NEAR(h.fine.length(2 * k) + h.fine.length(2 * k + 1), base.length(k), 1e-15);
  }
  EXPECT_THROW(halve_with_tags({0.0}, 1), invalid_argument);
}

TEST(Multifunction, ConstantAndOutOfRange) {
  const SpaceDescriptor s(2, Norm::L2);
  const PointSet A(s, {{0, 0}, {1, 0}});
  const Multifunction F(s, body::Constant{A}, 1.0, 1.0);
  for (double t : {0.0, 0.3, 1.0}) EXPECT_EQ(hausdorff(F.eval(t), A), 0.0);
  EXPECT_THROW(F.eval(-0.1), invalid_argument);
  EXPECT_THROW(F.eval(1.5), invalid_argument);
  EXPECT_EQ(F.kind(), "constant");
  EXPECT_FALSE(F.hull_semantics());
  EXPECT_THROW(Multifunction(s, body::Constant{A}, -1.0, 1.0), invalid_argument);
}

TEST(Multifunction, PiecewiseConstantConvention) {
  const SpaceDescriptor s(1, Norm::L2);
  body::PiecewiseConstant pc{{0.5}, {PointSet(s, {{0}}), PointSet(s, {{1}})}};
  const Multifunction F(s, pc, 1.0, 0.0);
  EXPECT_EQ(F.eval(0.49).point(0)[0], 0.0);
  EXPECT_EQ(F.eval(0.5).point(0)[0], 1.0);
  EXPECT_EQ(F.eval(1.0).point(0)[0], 1.0);
  EXPECT_THROW(Multifunction(s, body::PiecewiseConstant{{0.5}, {PointSet(s, {{0}})}}, 1, 0), invalid_argument);
  EXPECT_THROW(Multifunction(s, body::PiecewiseConstant{{1.0}, {PointSet(s, {{0}}), PointSet(s, {{0}})}}, 1, 0),
               invalid_argument);
}

TEST(Multifunction, MovingFiniteEvaluatesPolynomials) {
  const SpaceDescriptor s(3, Norm::L2);
  // g(t) = t e1; h(t) = e2 + t^2 e3.
  body::MovingFinite mf{{{{0, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}}};
  const Multifunction F(s, mf, 2.0, 2.0);
  const auto v = F.eval(0.5);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.points()[0], (Vector{0.5, 0, 0}));
  EXPECT_EQ(v.points()[1], (Vector{0, 1, 0.25}));
  EXPECT_THROW(Multifunction(s, body::MovingFinite{{{{0, 0}}}}, 1, 1), invalid_argument);
}

TEST(Multifunction, ConvexHullKeepsGenerators) {
  const SpaceDescriptor s(2, Norm::L1);
  const Multifunction F(s, body::Constant{PointSet(s, {{1, 0}, {0, 1}})}, 1.0, 2.0);
  const auto H = convex_hull_of(F);
  EXPECT_TRUE(H.hull_semantics());
  EXPECT_EQ(H.kind(), "convex_hull");
  EXPECT_EQ(hausdorff(H.eval(0.7), F.eval(0.7)), 0.0);
  EXPECT_EQ(H.bound_m(), 1.0);
}

TEST(Multifunction, DeclaredBoundsAreVerified) {
  const SpaceDescriptor s(2, Norm::L2);
  body::MovingFinite mf{{{{0, 0}, {2, 0}}}};  // g(t) = 2t e1, norm up to 2
  EXPECT_NO_THROW(verify_bounds(Multifunction(s, mf, 2.0, 0.0), 1000, 1));
  EXPECT_THROW(verify_bounds(Multifunction(s, mf, 1.5, 0.0), 1000, 1), invalid_argument);
  const Multifunction G(s, body::Constant{PointSet(s, {{0, 0}, {3, 4}})}, 5.0, 4.0);
  EXPECT_THROW(verify_bounds(G, 10, 1), invalid_argument);
  const auto mb = measure_bounds(G, 10, 1);
  EXPECT_DOUBLE_EQ(mb.sup_norm, 5.0);
  EXPECT_DOUBLE_EQ(mb.sup_diam, 5.0);
}
