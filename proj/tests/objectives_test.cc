// Copyright 2026 The Authors.
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


#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pssm/pssm.hpp"
#include "test_util.hpp"

namespace pssm {
namespace {

using testing::Iota;

TEST(ManhattanTest, Values) {
  EXPECT_EQ(Manhattan({0, 0}, {3, 4}), 7.0);
  EXPECT_EQ(Manhattan({1.5, -2}, {1.5, -2}), 0.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> c(-100, 100);
  for (int i = 0; i < 10000; ++i) {
    const Point2 a{c(rng), c(rng)}, b{c(rng), c(rng)};
    ASSERT_EQ(Manhattan(a, b), Manhattan(b, a));
  }
}

TEST(KMediansTest, HandEvaluation) {
  const KMediansObjective f({{0, 0}}, {{3, 4}}, 10.0);
  const std::vector<Element> s = {0};
  EXPECT_NEAR(f.Evaluate(s), 0.3, 1e-15);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  EXPECT_EQ(f.Cost(s), 7.0);
}

TEST(KMediansTest, EmptySetIsZero) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> c(0, 5);
  std::vector<Point2> clients(40), cands(9);
  for (auto& p : clients) p = {c(rng), c(rng)};
  for (auto& p : cands) p = {c(rng), c(rng)};
  const KMediansObjective f(clients, cands, DefaultNormalizer(clients, cands));
  EXPECT_EQ(f.Evaluate({}), 0.0);
}

TEST(KMediansTest, CostIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(0, 10);
  std::vector<Point2> clients(100), cands(25);
  for (auto& p : clients) p = {c(rng), c(rng)};
  for (auto& p : cands) p = {c(rng), c(rng)};
  const double g = DefaultNormalizer(clients, cands);
  const KMediansObjective f(clients, cands, g);
  std::bernoulli_distribution coin(0.2);
  for (int t = 0; t < 100; ++t) {
    std::vector<Element> s;
    for (Element e : Iota(25)) {
      if (coin(rng)) s.push_back(e);
    }
    EXPECT_NEAR(f.Cost(s), g * 100 - g * f.Evaluate(s), 1e-9 * g * 100);
  }
}

TEST(KMediansTest, NormalizerTooSmallIsRejected) {
  EXPECT_THROW(KMediansObjective({{0, 0}}, {{3, 4}}, 6.9), ParameterError);
  EXPECT_THROW(KMediansObjective({{0, 0}}, {{3, 4}}, 0.0), ParameterError);
}

TEST(KMediansTest, DefaultNormalizerIsBoxDiameter) {
  const std::vector<Point2> clients = {{0, 0}, {2, 1}};
  const std::vector<Point2> cands = {{-1, 3}};
  EXPECT_EQ(DefaultNormalizer(clients, cands), 3.0 + 3.0);
}

TEST(KMediansTest, IncrementalMarginalsMatchEvaluate) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> c(0, 10);
  std::vector<Point2> clients(60), cands(30);
  for (auto& p : clients) p = {c(rng), c(rng)};
  for (auto& p : cands) p = {c(rng), c(rng)};
  const KMediansObjective f(clients, cands, DefaultNormalizer(clients, cands));
  std::vector<Element> order = Iota(30);
  for (int t = 0; t < 100; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    auto cursor = f.NewCursor();
    const std::size_t size = rng() % 8;
    for (std::size_t i = 0; i < size; ++i) cursor->Add(order[i]);
    const Element e = order[size];
    const double direct = ComputeMarginalGain(f, e, cursor->elements()).value;
    EXPECT_NEAR(cursor->Marginal(e), direct, 1e-9 * std::max(1.0, direct));
    EXPECT_NEAR(cursor->value(), f.Evaluate(cursor->elements()), 1e-9);
  }
}

TEST(KMediansTest, SubmodularMonotoneAndSensitivity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(0, 10);
  std::vector<Point2> clients(50);
  for (auto& p : clients) p = {c(rng), c(rng)};
  const auto grid = MakeGrid(PointCloud(clients).bounding_box(), 5).points();
  const double g = DefaultNormalizer(clients, grid);
  const KMediansObjective f(clients, grid, g);
  const auto ground = Iota(grid.size());
  EXPECT_TRUE(CheckSubmodularMonotone(f, ground, 10000, rng).ok());
  const double probe = SensitivityProbe(
      [&](const std::vector<Point2>& pts) {
        return std::make_unique<KMediansObjective>(pts, grid, g);
      },
      clients, ground, 200, rng);
  EXPECT_LE(probe, 1.0 + 1e-9);
}

TEST(CoverageTest, DirectCounts) {
  // D = {a, a, b} with a = 0, b = 1.
  const CoverageObjective f({0, 0, 1}, {{0}, {1}, {0, 1}}, 2);
  const std::vector<Element> only_a = {0};
  EXPECT_EQ(f.Evaluate(only_a), 2.0);
  EXPECT_EQ(f.Evaluate({}), 0.0);
  const std::vector<Element> full = {2};
  EXPECT_EQ(f.Evaluate(full), 3.0);
}

TEST(CoverageTest, CursorCountsItemsOnce) {
  const CoverageObjective f({0, 0, 1, 2}, {{0, 0, 1}, {1, 2}}, 3);
  auto cursor = f.NewCursor();
  EXPECT_EQ(cursor->Marginal(0), 3.0);
  cursor->Add(0);
  EXPECT_EQ(cursor->Marginal(1), 1.0);
  cursor->Add(1);
  EXPECT_EQ(cursor->value(), 4.0);
}

TEST(CoverageTest, RejectsOutOfRangeItems) {
  EXPECT_THROW(CoverageObjective({3}, {{0}}, 2), ParameterError);
  EXPECT_THROW(CoverageObjective({0}, {{5}}, 2), ParameterError);
}

TEST(CoverageTest, OracleOverSingletons) {
  const CoverageObjective f = CoverageOracle({4, 4, 1});
  EXPECT_EQ(f.universe_size(), 5u);
  const std::vector<Element> s = {4};
  EXPECT_EQ(f.Evaluate(s), 2.0);
}

TEST(CoverageTest, SubmodularMonotoneAndSensitivity) {
  std::mt19937_64 rng(6);
  const CoverageObjective f = testing::RandomCoverage(15, 3, 12, 40, rng);
  const auto ground = Iota(15);
  EXPECT_TRUE(CheckSubmodularMonotone(f, ground, 10000, rng).ok());
}

TEST(HardInstanceTest, MultiplicityAndOptimum) {
  std::mt19937_64 rng(7);
  const HardCoverageInstance inst = GenerateHardInstance(64, 4, 1.0, 0.01, 1.0, rng);
  EXPECT_EQ(inst.multiplicity, 3u);
  EXPECT_EQ(inst.records.size(), 12u);
  EXPECT_EQ(inst.optimum, 12.0);
  EXPECT_EQ(inst.target.size(), 4u);
  EXPECT_TRUE(std::is_sorted(inst.target.begin(), inst.target.end()));
  const CoverageObjective f = inst.Objective();
  std::vector<Element> target(inst.target.begin(), inst.target.end());
  EXPECT_EQ(f.Evaluate(target), 12.0);
  // Everything covers at most the total mass.
  const auto ground = Iota(64);
  EXPECT_EQ(f.Evaluate(ground), 12.0);
  // The statement regime needs n >= k (e - 1) / 0.01, far above 12.
  EXPECT_FALSE(inst.warnings.empty());
}

TEST(HardInstanceTest, RawMultiplicity) {
  EXPECT_NEAR(std::log(std::expm1(1.0) / 0.01) / 2.0, 2.5732475203005047, 1e-14);
}

TEST(HardInstanceTest, RejectsBadArguments) {
  std::mt19937_64 rng(8);
  EXPECT_THROW(GenerateHardInstance(3, 4, 1.0, 0.01, 1.0, rng), ParameterError);
  EXPECT_THROW(GenerateHardInstance(10, 0, 1.0, 0.01, 1.0, rng), ParameterError);
  EXPECT_THROW(GenerateHardInstance(10, 2, 0.0, 0.01, 1.0, rng), ParameterError);
}

}  // namespace
}  // namespace pssm
