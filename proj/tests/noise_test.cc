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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "pssm/noise.hpp"

namespace pssm {
namespace {

constexpr int kMillion = 1000000;

double KsDistance(std::vector<double> xs, double location, double scale) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf = GumbelCdf(xs[i], location, scale);
    worst = std::max({worst, std::abs(cdf - i / n), std::abs((i + 1) / n - cdf)});
  }
  return worst;
}

TEST(SampleLaplaceTest, ZeroSourceGivesZero) {
  NoiseSource zero = NoiseSource::ZeroForTest();
  EXPECT_EQ(SampleLaplace(1.0, zero), 0.0);
}

TEST(SampleLaplaceTest, RejectsNonPositiveScale) {
  NoiseSource src = NoiseSource::Laplace(1.0, 1);
  EXPECT_THROW(SampleLaplace(0.0, src), ParameterError);
  EXPECT_THROW(SampleLaplace(-1.0, src), ParameterError);
  EXPECT_THROW(NoiseSource::Laplace(0.0, 1), ParameterError);
}

TEST(SampleLaplaceTest, MeanAndTail) {
  const double s = 3.0;
  const double beta = 0.01;
  NoiseSource src = NoiseSource::Laplace(s, 11);
  double sum = 0.0;
  int beyond = 0;
  for (int i = 0; i < kMillion; ++i) {
    const double x = SampleLaplace(s, src);
    sum += x;
    if (std::abs(x) > s * std::log(1.0 / beta)) ++beyond;
  }
  EXPECT_NEAR(sum / kMillion, 0.0, 0.01 * s);
  EXPECT_LE(beyond, 1.1 * beta * kMillion);
}

TEST(SampleLaplaceTest, SourceSampleMatchesScale) {
  NoiseSource src = NoiseSource::Laplace(2.0, 5);
  double abs_sum = 0.0;
  for (int i = 0; i < 200000; ++i) abs_sum += std::abs(src.Sample());
  EXPECT_NEAR(abs_sum / 200000, 2.0, 0.03);  // E|X| = scale
}

TEST(SampleGumbelTest, FixedQuantileGivesLocation) {
  EXPECT_DOUBLE_EQ(GumbelFromUniform(2.5, 7.0, std::exp(-1.0)), 2.5);
}

TEST(SampleGumbelTest, ZeroSourceGivesLocation) {
  NoiseSource zero = NoiseSource::ZeroForTest();
  EXPECT_EQ(SampleGumbel(4.0, 1.0, zero), 4.0);
}

TEST(SampleGumbelTest, KolmogorovSmirnov) {
  NoiseSource src = NoiseSource::Gumbel(1.0, 3);
  std::vector<double> xs(100000);
  for (double& x : xs) x = SampleGumbel(0.0, 1.0, src);
  EXPECT_LT(KsDistance(xs, 0.0, 1.0), 0.005);
}

TEST(SampleGumbelTest, UpperTail) {
  const double mu = 1.5, gamma = 4.0, beta = 0.01;
  NoiseSource src = NoiseSource::Gumbel(gamma, 17, mu);
  int above = 0;
  for (int i = 0; i < kMillion; ++i) {
    if (src.Sample() > mu + gamma * std::log(1.0 / beta)) ++above;
  }
  EXPECT_LE(above, 1.1 * beta * kMillion);
}

TEST(SampleGumbelTest, LowerTail) {
  const double mu = -0.5, gamma = 2.0, beta = 0.01;
  NoiseSource src = NoiseSource::Gumbel(gamma, 19, mu);
  int below = 0;
  for (int i = 0; i < kMillion; ++i) {
    if (src.Sample() < mu - gamma * std::log(std::log(1.0 / beta))) ++below;
  }
  EXPECT_LE(below, 1.1 * beta * kMillion);
}

TEST(SampleGumbelTest, MeanIsLocationPlusEulerGamma) {
  NoiseSource src = NoiseSource::Gumbel(2.0, 23, -1.0);
  double sum = 0.0;
  for (int i = 0; i < 200000; ++i) sum += src.Sample();
  EXPECT_NEAR(sum / 200000, -1.0 + 2.0 * std::numbers::egamma, 0.02);
}

TEST(GumbelCdfTest, ClosedFormValues) {
  EXPECT_NEAR(GumbelCdf(3.0, 3.0, 2.0), 0.36787944117144233, 1e-15);
  EXPECT_NEAR(GumbelCdf(1.0 + 2.0 * std::numbers::ln2, 1.0, 2.0),
              0.6065306597126334, 1e-15);
  EXPECT_EQ(GumbelCdf(1e6, 0.0, 1.0), 1.0);
  EXPECT_EQ(GumbelCdf(-1e3, 0.0, 1.0), 0.0);
  EXPECT_THROW(GumbelCdf(0.0, 0.0, 0.0), ParameterError);
}

TEST(LaplaceCdfTest, Symmetry) {
  EXPECT_DOUBLE_EQ(LaplaceCdf(0.0, 1.0), 0.5);
  for (double x : {0.1, 1.0, 5.0}) {
    EXPECT_NEAR(LaplaceCdf(x, 2.0) + LaplaceCdf(-x, 2.0), 1.0, 1e-15);
  }
}

TEST(NoiseSourceTest, EqualSeedsGiveEqualSequences) {
  NoiseSource a = NoiseSource::Gumbel(1.0, 99);
  NoiseSource b = NoiseSource::Gumbel(1.0, 99);
  NoiseSource c = NoiseSource::Gumbel(1.0, 100);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.Sample();
    ASSERT_EQ(x, b.Sample());
    differs = differs || x != c.Sample();
  }
  EXPECT_TRUE(differs);
}

TEST(NoiseSourceTest, UniformStaysInOpenInterval) {
  NoiseSource src = NoiseSource::Laplace(1.0, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = src.NextUniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_TRUE(std::isfinite(LaplaceFromUniform(1.0, 0.0)));
  EXPECT_TRUE(std::isfinite(GumbelFromUniform(0.0, 1.0, 1.0)));
}

TEST(NoiseSourceTest, TestSourcesAreNotPrivate) {
  EXPECT_TRUE(NoiseSource::Laplace(1.0, 1).is_private());
  EXPECT_TRUE(NoiseSource::Gumbel(1.0, 1).is_private());
  EXPECT_FALSE(NoiseSource::ZeroForTest().is_private());
  EXPECT_FALSE(NoiseSource::UniformForTest(-1, 1, 1).is_private());
}

TEST(NoiseSourceTest, UniformForTestRespectsBounds) {
  NoiseSource src = NoiseSource::UniformForTest(-0.1, 0.3, 4);
  double lo = 1, hi = -1;
  for (int i = 0; i < 100000; ++i) {
    const double x = src.Sample();
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  EXPECT_GE(lo, -0.1);
  EXPECT_LE(hi, 0.3);
  EXPECT_LT(lo, -0.099);
  EXPECT_GT(hi, 0.299);
}

TEST(DeriveSeedTest, DistinctInputsGiveDistinctSeeds) {
  EXPECT_EQ(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 3));
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 3, 2));
  EXPECT_NE(DeriveSeed(1, 0, 0), DeriveSeed(2, 0, 0));
  EXPECT_NE(DeriveSeed(1, 0, 0), DeriveSeed(1, 0, 1));
}

std::vector<double> SelectionFrequencies(const std::vector<double>& scores,
                                         double epsilon, int draws,
                                         std::uint64_t seed) {
  std::vector<ScoredCandidate> cands;
  for (std::size_t i = 0; i < scores.size(); ++i) cands.push_back({i, scores[i]});
  NoiseSource src = NoiseSource::Gumbel(1.0, seed);
  std::vector<double> freq(scores.size(), 0.0);
  for (int i = 0; i < draws; ++i) {
    freq[PrivateArgmax(cands, epsilon, 1.0, src)] += 1.0 / draws;
  }
  return freq;
}

TEST(PrivateArgmaxTest, EqualScoresAreUniform) {
  for (double f : SelectionFrequencies({0.7, 0.7, 0.7}, 1.0, kMillion, 5)) {
    EXPECT_NEAR(f, 1.0 / 3, 0.01);
  }
}

TEST(PrivateArgmaxTest, MatchesExponentialMechanism) {
  const auto freq = SelectionFrequencies({0.0, std::log(3.0)}, 2.0, kMillion, 6);
  EXPECT_NEAR(freq[0], 0.25, 0.01);
  EXPECT_NEAR(freq[1], 0.75, 0.01);
}

TEST(PrivateArgmaxTest, ShiftInvariant) {
  const auto a = SelectionFrequencies({0.0, 1.0, 2.0}, 1.0, 200000, 8);
  const auto b = SelectionFrequencies({100.0, 101.0, 102.0}, 1.0, 200000, 8);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-4);
}

TEST(PrivateArgmaxTest, SingleCandidate) {
  NoiseSource src = NoiseSource::Gumbel(1.0, 1);
  const std::vector<ScoredCandidate> one = {{7, -3.0}};
  for (int i = 0; i < 100; ++i) EXPECT_EQ(PrivateArgmax(one, 0.5, 1.0, src), 7u);
}

TEST(PrivateArgmaxTest, ZeroSourceIsExactArgmaxFirstTie) {
  NoiseSource zero = NoiseSource::ZeroForTest();
  const std::vector<ScoredCandidate> c = {{0, 1.0}, {1, 4.0}, {2, 4.0}, {3, 2.0}};
  EXPECT_EQ(PrivateArgmax(c, 1.0, 1.0, zero), 1u);
}

TEST(PrivateArgmaxTest, RejectsBadArguments) {
  NoiseSource src = NoiseSource::Gumbel(1.0, 1);
  const std::vector<ScoredCandidate> c = {{0, 1.0}};
  EXPECT_THROW(PrivateArgmax({}, 1.0, 1.0, src), ParameterError);
  EXPECT_THROW(PrivateArgmax(c, 0.0, 1.0, src), ParameterError);
  EXPECT_THROW(PrivateArgmax(c, 1.0, 0.0, src), ParameterError);
}

}  // namespace
}  // namespace pssm
