// Copyright 2026 The lincol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lincol/exact.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "oracles.h"

namespace lincol {
namespace {

TEST(ExactLc, KnownValues) {
  EXPECT_EQ(exact_lc(fixtures::k(2, 3)), 4);
  EXPECT_EQ(exact_lc(fixtures::k(3, 3)), 5);
  EXPECT_EQ(exact_lc(fixtures::make(FamilyTag::kCycle, 5).graph), 3);
  EXPECT_EQ(exact_lc(fixtures::make(FamilyTag::kCycle, 4).graph), 3);
  EXPECT_EQ(exact_lc(fixtures::make(FamilyTag::kStar, 6).graph), 4);
  EXPECT_EQ(exact_lc(fixtures::make(FamilyTag::kPath, 5).graph), 2);
  EXPECT_EQ(exact_lc(Graph(3)), 1);
  EXPECT_EQ(exact_lc(Graph()), 0);
}

TEST(ExactLc, AgreesWithEnumerationOracle) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_gnm(n, static_cast<int>(rng() % (2 * n + 1)), rng);
    ASSERT_EQ(exact_lc(g), oracle::enumerate_lc(g)) << "trial " << t;
  }
}

TEST(ExactLc, MonotoneUnderSubgraphs) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_gnm(8, 9, rng);
    const int before = exact_lc(g);
    Vertex u = static_cast<Vertex>(rng() % 8);
    Vertex v = static_cast<Vertex>(rng() % 8);
    if (u == v || g.adjacent(u, v)) continue;
    g.add_edge(u, v);
    EXPECT_GE(exact_lc(g), before);
  }
}

TEST(ExactLc, BudgetIsEnforced) {
  EXPECT_THROW((SearchBudget{0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((SearchBudget{10, 0.0}.validate()), std::invalid_argument);
  try {
    exact_lc(fixtures::make(FamilyTag::kPetersen).graph, SearchBudget{5, 10.0});
    FAIL() << "expected BudgetExhausted";
  } catch (const BudgetExhausted& e) {
    EXPECT_GE(e.lower(), 1);
    EXPECT_GE(e.nodes(), 5);
  }
}

TEST(ListFeasible, SmallExamples) {
  Graph edge = fixtures::make(FamilyTag::kPath, 2).graph;
  EXPECT_FALSE(list_feasible(edge, ListAssignment({{1}, {1}})));
  auto col = list_feasible(edge, ListAssignment({{1}, {1, 2}}));
  ASSERT_TRUE(col);
  EXPECT_EQ(col->color, (std::vector<Color>{1, 2}));
  Graph c4 = fixtures::make(FamilyTag::kCycle, 4).graph;
  EXPECT_FALSE(list_feasible(c4, ListAssignment::uniform(4, 2)));
  EXPECT_TRUE(list_feasible(c4, ListAssignment::uniform(4, 3)));
}

TEST(ListFeasible, AgreesWithEnumerationAndReverifies) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_gnm(n, static_cast<int>(rng() % (2 * n + 1)), rng);
    std::vector<std::vector<Color>> raw(n);
    for (auto& l : raw) {
      for (Color c = 1; c <= 4; ++c) {
        if (rng() % 2) l.push_back(c);
      }
      if (l.empty()) l.push_back(1 + static_cast<Color>(rng() % 4));
    }
    ListAssignment lists(raw);
    auto col = list_feasible(g, lists);
    ASSERT_EQ(col.has_value(), oracle::enumerate_list_feasible(g, raw)) << "trial " << t;
    if (col) EXPECT_FALSE(verify_list(g, lists, *col));
  }
}

TEST(Choosability, FindsBadListsWhenTheyExist) {
  auto v = choosability_at_least(fixtures::k(2, 3), 3, 6);
  ASSERT_TRUE(v.bad_lists);
  EXPECT_FALSE(list_feasible(fixtures::k(2, 3), *v.bad_lists));
  EXPECT_EQ(v.bad_lists->min_size(), 3);

  auto edge = choosability_at_least(fixtures::make(FamilyTag::kPath, 2).graph, 1);
  EXPECT_TRUE(edge.bad_lists);
}

TEST(Choosability, PathIsTwoChoosable) {
  auto v = choosability_at_least(fixtures::make(FamilyTag::kPath, 3).graph, 2);
  EXPECT_FALSE(v.bad_lists);
  EXPECT_GT(v.assignments_checked, 0);
  EXPECT_THROW(choosability_at_least(fixtures::make(FamilyTag::kPath, 3).graph, 3, 2), std::invalid_argument);
}

}  // namespace
}  // namespace lincol
