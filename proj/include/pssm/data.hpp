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

//
// Point data for the k-medians experiments: CSV ingestion, Gaussian-mixture
// synthesis and candidate grids.
//

#ifndef PSSM_DATA_HPP_
#define PSSM_DATA_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "pssm/objectives.hpp"

namespace pssm {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  bool Contains(const Point2& p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

inline BoundingBox ComputeBoundingBox(const std::vector<Point2>& points) {
  if (points.empty()) throw DataError("bounding box of an empty point set");
  BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point2& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

// Non-empty, immutable after construction.
class PointCloud {
 public:
  explicit PointCloud(std::vector<Point2> points)
      : points_(std::move(points)), box_(ComputeBoundingBox(points_)) {}

  const std::vector<Point2>& points() const { return points_; }
  const BoundingBox& bounding_box() const { return box_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point2> points_;
  BoundingBox box_;
};

namespace internal {

inline std::vector<std::string_view> SplitCsvLine(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '"')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '"' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::optional<double> ParseDouble(std::string_view s) {
  s = Trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace internal

struct CsvLoadResult {
  PointCloud cloud;
  std::size_t skipped_rows = 0;
};

// Reads a headered, comma-separated file (UTF-8, LF or CRLF). Rows whose
// selected columns do not parse as finite numbers are skipped and counted.
// With `max_rows`, stops after that many valid rows.
inline CsvLoadResult LoadPointsCsv(const std::string& path,
                                   const std::string& x_column,
                                   const std::string& y_column,
                                   std::optional<std::size_t> max_rows = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open point file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty point file: " + path);
  std::string_view header = line;
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  const auto names = internal::SplitCsvLine(header);
  std::optional<std::size_t> xi, yi;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string_view name = internal::Trim(names[i]);
    if (name == x_column) xi = i;
    if (name == y_column) yi = i;
  }
  if (!xi) throw DataError("column '" + x_column + "' not found in " + path);
  if (!yi) throw DataError("column '" + y_column + "' not found in " + path);

  std::vector<Point2> points;
  std::size_t skipped = 0;
  while (std::getline(in, line)) {
    if (max_rows && points.size() >= *max_rows) break;
    std::string_view row = line;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.empty()) continue;
    const auto fields = internal::SplitCsvLine(row);
    if (fields.size() <= std::max(*xi, *yi)) {
      ++skipped;
      continue;
    }
    const auto x = internal::ParseDouble(fields[*xi]);
    const auto y = internal::ParseDouble(fields[*yi]);
    if (!x || !y) {
      ++skipped;
      continue;
    }
    points.push_back({*x, *y});
  }
  if (points.empty()) throw DataError("no valid rows in " + path);
  return {PointCloud(std::move(points)), skipped};
}

inline void WritePointsCsv(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write point file: " + path);
  out.precision(17);
  out << "x,y\n";
  for (const Point2& p : cloud.points()) out << p.x << ',' << p.y << '\n';
  if (!out) throw DataError("write failed: " + path);
}

// `num_components` unit-covariance Gaussians with means uniform on
// [0, box_side]^2, `points_per_component` draws each, component by
// component.
inline PointCloud SynthMixture(std::size_t num_components,
                               std::size_t points_per_component,
                               double box_side, std::mt19937_64& rng) {
  if (num_components == 0 || points_per_component == 0) {
    throw ParameterError("synth mixture: counts must be positive");
  }
  if (!(box_side >= 0)) throw ParameterError("synth mixture: box side < 0");
  std::uniform_real_distribution<double> uniform(0.0, box_side);
  std::vector<Point2> means(num_components);
  for (Point2& mu : means) {
    mu.x = box_side > 0 ? uniform(rng) : 0.0;
    mu.y = box_side > 0 ? uniform(rng) : 0.0;
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Point2> points;
  points.reserve(num_components * points_per_component);
  for (const Point2& mu : means) {
    for (std::size_t i = 0; i < points_per_component; ++i) {
      const double dx = normal(rng);
      const double dy = normal(rng);
      points.push_back({mu.x + dx, mu.y + dy});
    }
  }
  return PointCloud(std::move(points));
}

// side_count x side_count points spanning `box` edge to edge, in row-major
// order (y outer, x inner).
inline PointCloud MakeGrid(const BoundingBox& box, std::size_t side_count) {
  if (side_count < 2) throw ParameterError("grid: side_count must be >= 2");
  const double step_x = (box.max_x - box.min_x) / (side_count - 1);
  const double step_y = (box.max_y - box.min_y) / (side_count - 1);
  std::vector<Point2> points;
  points.reserve(side_count * side_count);
  for (std::size_t row = 0; row < side_count; ++row) {
    const double y = row + 1 == side_count ? box.max_y
                                           : box.min_y + row * step_y;
    for (std::size_t col = 0; col < side_count; ++col) {
      const double x = col + 1 == side_count ? box.max_x
                                             : box.min_x + col * step_x;
      points.push_back({x, y});
    }
  }
  return PointCloud(std::move(points));
}

// Stream order over a candidate set: identity (row-major for grids), or a
// seeded shuffle.
inline std::vector<Element> StreamOrder(std::size_t count,
                                        std::optional<std::uint64_t> shuffle) {
  std::vector<Element> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  if (shuffle) {
    std::mt19937_64 rng(*shuffle);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace pssm

#endif  // PSSM_DATA_HPP_
