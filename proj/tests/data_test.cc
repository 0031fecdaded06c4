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
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include "gtest/gtest.h"
#include "pssm/data.hpp"

namespace pssm {
namespace {

class CsvTest : public ::testing::Test {
 protected:
  std::string Write(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("pssm_data_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::string path = (dir / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
};

TEST_F(CsvTest, ThreeRowsAndBoundingBox) {
  const std::string path =
      Write("three.csv", "id,lat,lon\n1,40.5,-73.9\n2,40.7,-74.1\n3,40.6,-73.8\n");
  const CsvLoadResult r = LoadPointsCsv(path, "lat", "lon");
  ASSERT_EQ(r.cloud.size(), 3u);
  EXPECT_EQ(r.skipped_rows, 0u);
  const BoundingBox& b = r.cloud.bounding_box();
  EXPECT_EQ(b.min_x, 40.5);
  EXPECT_EQ(b.max_x, 40.7);
  EXPECT_EQ(b.min_y, -74.1);
  EXPECT_EQ(b.max_y, -73.8);
  EXPECT_EQ(r.cloud.points()[1], (Point2{40.7, -74.1}));
}

TEST_F(CsvTest, MalformedRowIsSkippedAndCounted) {
  std::string text = "x,y\n";
  for (int i = 0; i < 10; ++i) {
    text += i == 4 ? "abc,1\n" : std::to_string(i) + "," + std::to_string(2 * i) + "\n";
  }
  const CsvLoadResult r = LoadPointsCsv(Write("bad.csv", text), "x", "y");
  EXPECT_EQ(r.cloud.size(), 9u);
  EXPECT_EQ(r.skipped_rows, 1u);
}

TEST_F(CsvTest, MaxRowsKeepsFirstValidRows) {
  std::string text = "x,y\n";
  for (int i = 0; i < 1000; ++i) {
    text += std::to_string(i) + ",0\n";
  }
  const CsvLoadResult r = LoadPointsCsv(Write("big.csv", text), "x", "y", 100);
  ASSERT_EQ(r.cloud.size(), 100u);
  EXPECT_EQ(r.cloud.points().front().x, 0.0);
  EXPECT_EQ(r.cloud.points().back().x, 99.0);
}

TEST_F(CsvTest, CrlfBomAndShortRows) {
  const std::string path =
      Write("crlf.csv", "\xEF\xBB\xBFx,y\r\n1,2\r\n3\r\n\r\n 4 , 5 \r\n");
  const CsvLoadResult r = LoadPointsCsv(path, "x", "y");
  ASSERT_EQ(r.cloud.size(), 2u);
  EXPECT_EQ(r.skipped_rows, 1u);
  EXPECT_EQ(r.cloud.points()[1], (Point2{4, 5}));
}

TEST_F(CsvTest, Errors) {
  EXPECT_THROW(LoadPointsCsv("/nonexistent/file.csv", "x", "y"), DataError);
  EXPECT_THROW(LoadPointsCsv(Write("cols.csv", "a,b\n1,2\n"), "x", "b"), DataError);
  EXPECT_THROW(LoadPointsCsv(Write("none.csv", "x,y\nq,r\n"), "x", "y"), DataError);
  EXPECT_THROW(LoadPointsCsv(Write("empty.csv", ""), "x", "y"), DataError);
}

TEST_F(CsvTest, WriteReadRoundTrip) {
  std::mt19937_64 rng(1);
  const PointCloud cloud = SynthMixture(3, 20, 10.0, rng);
  const std::string path = Write("rt.csv", "");
  WritePointsCsv(path, cloud);
  const CsvLoadResult r = LoadPointsCsv(path, "x", "y");
  EXPECT_EQ(r.cloud.points(), cloud.points());
}

TEST(SynthMixtureTest, Counts) {
  std::mt19937_64 rng(2);
  EXPECT_EQ(SynthMixture(50, 1000, 20.0, rng).size(), 50000u);
}

TEST(SynthMixtureTest, SingleComponentAtOrigin) {
  std::mt19937_64 rng(3);
  const std::size_t n = 40000;
  const PointCloud cloud = SynthMixture(1, n, 0.0, rng);
  double sx = 0, sy = 0;
  for (const Point2& p : cloud.points()) {
    sx += p.x;
    sy += p.y;
  }
  EXPECT_LT(std::abs(sx / n), 4.0 / std::sqrt(n));
  EXPECT_LT(std::abs(sy / n), 4.0 / std::sqrt(n));
}

TEST(SynthMixtureTest, DeterministicUnderSeed) {
  std::mt19937_64 a(9), b(9);
  EXPECT_EQ(SynthMixture(4, 100, 20.0, a).points(),
            SynthMixture(4, 100, 20.0, b).points());
}

TEST(SynthMixtureTest, RejectsBadArguments) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(SynthMixture(0, 10, 1.0, rng), ParameterError);
  EXPECT_THROW(SynthMixture(1, 0, 1.0, rng), ParameterError);
  EXPECT_THROW(SynthMixture(1, 10, -1.0, rng), ParameterError);
}

TEST(MakeGridTest, UnitBoxCorners) {
  const PointCloud g = MakeGrid({0, 0, 1, 1}, 2);
  const std::vector<Point2> expected = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(g.points(), expected);
}

TEST(MakeGridTest, SizeAndSpacing) {
  const PointCloud g = MakeGrid({-3.2, 1.0, 7.9, 4.5}, 50);
  ASSERT_EQ(g.size(), 2500u);
  const auto& pts = g.points();
  const double gap = pts[1].x - pts[0].x;
  for (std::size_t col = 1; col < 50; ++col) {
    EXPECT_NEAR(pts[col].x - pts[col - 1].x, gap, 1e-12);
  }
  EXPECT_EQ(pts.back(), (Point2{7.9, 4.5}));
  EXPECT_EQ(pts.front(), (Point2{-3.2, 1.0}));
  EXPECT_THROW(MakeGrid({0, 0, 1, 1}, 1), ParameterError);
}

TEST(StreamOrderTest, IdentityAndShuffle) {
  const auto id = StreamOrder(5, std::nullopt);
  EXPECT_EQ(id, (std::vector<Element>{0, 1, 2, 3, 4}));
  auto shuffled = StreamOrder(100, 7);
  EXPECT_EQ(shuffled, StreamOrder(100, 7));
  EXPECT_NE(shuffled, StreamOrder(100, std::nullopt));
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, StreamOrder(100, std::nullopt));
}

}  // namespace
}  // namespace pssm
