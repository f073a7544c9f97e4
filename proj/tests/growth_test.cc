// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperrec/growth.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hyperrec/errors.h"

namespace hyperrec {
namespace {

std::uint64_t containment_sum(const TreeState& state) {
  const auto c = state.containment();
  return std::accumulate(c.begin(), c.end(), std::uint64_t{0});
}

TreeState figure_one_history(bool record_edges = false) {
  TreeState state = init_tree(3, record_edges);
  DrawSource draws = DrawSource::injected({{0, 1}, {3, 2}});
  grow(state, draws);
  grow(state, draws);
  return state;
}

TEST(InitTree, Originators) {
  const TreeState state = init_tree(3);
  EXPECT_EQ(state.age(), 0u);
  EXPECT_EQ(state.vertex_count(), 3u);
  for (auto c : state.containment()) EXPECT_EQ(c, 1u);
  EXPECT_EQ(global_profile(init_tree(2), 3).level(1), 2u);
  for (int theta = 2; theta <= 7; ++theta) {
    EXPECT_EQ(init_tree(theta).vertex_count(), static_cast<std::uint64_t>(theta));
  }
}

TEST(InitTree, RecordsTheOriginalEdge) {
  const TreeState state = init_tree(4, true);
  ASSERT_EQ(state.edges().size(), 1u);
  EXPECT_EQ(state.edges()[0], (std::vector<std::uint64_t>{0, 1, 2, 3}));
}

TEST(InitTree, RejectsSmallTheta) {
  EXPECT_THROW(init_tree(1), ParameterError);
  EXPECT_THROW(init_tree(0), ParameterError);
}

TEST(Grow, FigureOneHistory) {
  const TreeState state = figure_one_history(true);
  EXPECT_EQ(state.age(), 2u);
  EXPECT_EQ(state.vertex_count(), 5u);
  const LevelCounts x = global_profile(state, 4);
  EXPECT_EQ(x.level(1), 1u);
  EXPECT_EQ(x.level(2), 4u);
  EXPECT_EQ(x.level(3), 0u);
  EXPECT_EQ(x.level(4), 0u);
  EXPECT_EQ(x.overflow, 0u);
  EXPECT_EQ(containment_of(state, 1), 2u);
  EXPECT_EQ(containment_of(state, 2), 1u);
  EXPECT_EQ(containment_of(state, 0), 2u);
  ASSERT_EQ(state.edges().size(), 3u);
  EXPECT_EQ(state.edges()[2], (std::vector<std::uint64_t>{2, 3, 4}));
}

TEST(Grow, NewVertexStartsAtLevelOne) {
  for (int theta = 2; theta <= 5; ++theta) {
    TreeState state = init_tree(theta);
    DrawSource draws = DrawSource::seeded(11);
    for (std::uint64_t j = 1; j <= 20; ++j) {
      grow(state, draws);
      EXPECT_EQ(containment_of(state, j), 1u);
    }
  }
}

TEST(Grow, ConservesContainmentMass) {
  for (int theta : {2, 3, 5, 12}) {
    TreeState state = init_tree(theta);
    DrawSource draws = DrawSource::seeded(5);
    for (std::uint64_t j = 1; j <= 200; ++j) {
      const std::uint64_t before = containment_sum(state);
      grow(state, draws);
      EXPECT_EQ(containment_sum(state) - before, static_cast<std::uint64_t>(theta));
      EXPECT_EQ(containment_sum(state), theta * (state.age() + 1));
      EXPECT_EQ(state.vertex_count(), state.age() + theta);
    }
  }
}

TEST(Grow, ProfileIdentities) {
  for (int theta : {2, 3, 4, 10}) {
    TreeState state = init_tree(theta);
    DrawSource draws = DrawSource::seeded(99);
    for (int j = 0; j < 300; ++j) grow(state, draws);
    const std::uint64_t top = 400;
    const LevelCounts x = global_profile(state, top);
    std::uint64_t vertices = x.overflow;
    std::uint64_t mass = 0;
    for (std::uint64_t i = 1; i <= top; ++i) {
      vertices += x.level(i);
      mass += i * x.level(i);
    }
    EXPECT_EQ(x.overflow, 0u);
    EXPECT_EQ(vertices, state.age() + theta);
    EXPECT_EQ(mass, theta * (state.age() + 1));
  }
}

TEST(Grow, OverflowBucketCollectsHighLevels) {
  TreeState state = init_tree(3);
  DrawSource draws = DrawSource::seeded(3);
  for (int j = 0; j < 100; ++j) grow(state, draws);
  const LevelCounts x = global_profile(state, 2);
  EXPECT_EQ(x.level(1) + x.level(2) + x.overflow, state.vertex_count());
  EXPECT_THROW(global_profile(state, 0), ParameterError);
}

TEST(Grow, RecordedEdgesMatchContainment) {
  for (int theta : {2, 3, 11}) {
    TreeState state = init_tree(theta, true);
    DrawSource draws = DrawSource::seeded(17);
    for (int j = 0; j < 60; ++j) grow(state, draws);
    ASSERT_EQ(state.edges().size(), state.age() + 1);
    std::vector<std::uint64_t> seen(state.vertex_count(), 0);
    for (const auto& edge : state.edges()) {
      EXPECT_EQ(edge.size(), static_cast<std::size_t>(theta));
      for (auto v : edge) ++seen[v];
    }
    for (std::uint64_t v = 0; v < state.vertex_count(); ++v) {
      EXPECT_EQ(seen[v], state.containment()[v]);
    }
  }
}

TEST(Grow, SeededRunsAreIdentical) {
  for (int theta : {3, 12}) {
    TreeState a = init_tree(theta);
    TreeState b = init_tree(theta);
    DrawSource da = DrawSource::seeded(2024);
    DrawSource db = DrawSource::seeded(2024);
    for (int j = 0; j < 500; ++j) {
      grow(a, da);
      grow(b, db);
      ASSERT_TRUE(std::equal(a.containment().begin(), a.containment().end(),
                             b.containment().begin(), b.containment().end()));
    }
  }
}

TEST(Grow, MalformedInjectionThrows) {
  {
    TreeState state = init_tree(3);
    DrawSource draws = DrawSource::injected({{0, 0}});
    EXPECT_THROW(grow(state, draws), InjectionError);
  }
  {
    TreeState state = init_tree(3);
    DrawSource draws = DrawSource::injected({{0, 3}});
    EXPECT_THROW(grow(state, draws), InjectionError);
  }
  {
    TreeState state = init_tree(3);
    DrawSource draws = DrawSource::injected({{0}});
    EXPECT_THROW(grow(state, draws), InjectionError);
  }
  {
    TreeState state = init_tree(3);
    DrawSource draws = DrawSource::injected({{0, 1}});
    grow(state, draws);
    EXPECT_THROW(grow(state, draws), InjectionError);
  }
}

TEST(ContainmentOf, RangeChecked) {
  const TreeState state = figure_one_history();
  EXPECT_THROW(containment_of(state, 3), RangeError);
}

TEST(IndicatorProb, Values) {
  EXPECT_EQ(indicator_prob(2, 2), make_rational(1, 3));
  EXPECT_EQ(indicator_prob(3, 1), make_rational(2, 3));
  for (int theta = 2; theta <= 6; ++theta) {
    for (std::uint64_t n = 1; n < 50; ++n) {
      EXPECT_LT(indicator_prob(theta, n + 1), indicator_prob(theta, n));
    }
  }
  EXPECT_THROW(indicator_prob(3, 0), DomainError);
}

}  // namespace
}  // namespace hyperrec
