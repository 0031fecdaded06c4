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
// k-medians benchmark harness: runs the Laplace and Gumbel private
// maximizers, the non-private sieve and a uniform random baseline over a
// (k, epsilon, seed) sweep and aggregates the clustering cost.
//
// Every (method, k, epsilon, repetition) cell derives its own seeds from the
// master seed, and results are merged by cell key, so the output does not
// depend on the number of worker threads.
//

#ifndef PSSM_EXPERIMENT_HPP_
#define PSSM_EXPERIMENT_HPP_

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "pssm/data.hpp"
#include "pssm/objectives.hpp"
#include "pssm/privacy.hpp"
#include "pssm/streaming.hpp"

namespace pssm {

enum class Method { kLaplace, kGumbel, kNonPrivate, kRandom };

inline constexpr Method kAllMethods[] = {Method::kLaplace, Method::kGumbel,
                                         Method::kNonPrivate, Method::kRandom};

inline const char* MethodName(Method m) {
  switch (m) {
    case Method::kLaplace:
      return "Laplace";
    case Method::kGumbel:
      return "Gumbel";
    case Method::kNonPrivate:
      return "NonPrivate";
    case Method::kRandom:
      return "Random";
  }
  return "?";
}

// Column stem in the figure CSVs.
inline const char* MethodColumn(Method m) {
  switch (m) {
    case Method::kLaplace:
      return "Laplace";
    case Method::kGumbel:
      return "Ours";
    case Method::kNonPrivate:
      return "Non-private";
    case Method::kRandom:
      return "Random";
  }
  return "?";
}

inline std::optional<Method> ParseMethod(std::string_view s) {
  for (Method m : kAllMethods) {
    if (s == MethodName(m) || s == MethodColumn(m)) return m;
  }
  if (s == "laplace") return Method::kLaplace;
  if (s == "gumbel" || s == "ours") return Method::kGumbel;
  if (s == "nonprivate" || s == "non-private") return Method::kNonPrivate;
  if (s == "random") return Method::kRandom;
  return std::nullopt;
}

struct SyntheticDataset {
  std::size_t components = 10;
  std::size_t points_per_component = 500;
  double box_side = 20.0;
};

struct CsvDataset {
  std::string path;
  std::string x_column = "x";
  std::string y_column = "y";
  std::optional<std::size_t> max_rows;
};

struct ExperimentConfig {
  bool use_csv = false;
  SyntheticDataset synthetic;
  CsvDataset csv;
  std::size_t grid_side = 30;
  std::vector<int> k_values = {5, 10, 20};
  std::vector<double> epsilon_values = {0.1, 1.0};
  double theta = 0.2;
  // Absent: delta = 1 / |P|^1.5.
  std::optional<double> delta;
  int repetitions = 20;
  CompositionMode composition = CompositionMode::kBasic;
  std::uint64_t master_seed = 1;
  std::vector<Method> methods = {Method::kLaplace, Method::kGumbel,
                                 Method::kNonPrivate, Method::kRandom};
  // Absent: row-major grid order.
  std::optional<std::uint64_t> shuffle_seed;
  double eta = 0.05;
  // 0: hardware concurrency.
  unsigned threads = 0;
  // ZeroForTest noise and exact selection in the private methods.
  bool noiseless_for_test = false;

  void Validate() const {
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (!(theta > 0 && theta < 1)) throw ConfigError("theta must be in (0,1)");
    if (grid_side < 2) throw ConfigError("grid_side must be >= 2");
    if (k_values.empty()) throw ConfigError("k_values is empty");
    if (epsilon_values.empty()) throw ConfigError("epsilon_values is empty");
    if (methods.empty()) throw ConfigError("methods is empty");
    for (int k : k_values) {
      if (k < 1) throw ConfigError("k values must be >= 1");
    }
    for (double e : epsilon_values) {
      if (!(e > 0)) throw ConfigError("epsilon values must be > 0");
    }
    if (delta && !(*delta > 0 && *delta < 1)) {
      throw ConfigError("delta must be in (0,1)");
    }
    if (!(eta > 0 && eta < 1)) throw ConfigError("eta must be in (0,1)");
  }
};

struct CellKey {
  Method method = Method::kRandom;
  int k = 0;
  double epsilon = 0.0;

  friend bool operator<(const CellKey& a, const CellKey& b) {
    return std::tie(a.method, a.k, a.epsilon) <
           std::tie(b.method, b.k, b.epsilon);
  }
};

struct CellStats {
  int runs = 0;
  double mean_cost = 0.0;
  double std_cost = 0.0;
  double mean_retained = 0.0;
  double mean_oracle_calls = 0.0;
  std::size_t num_guesses = 0;  // T (0 for Random)
  // Runs whose counters broke retained <= k T, one pass, or per-element
  // oracle-call accounting.
  int resource_violations = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> failures;
};

struct RunReport {
  std::size_t num_clients = 0;
  std::size_t num_candidates = 0;
  double normalizer = 0.0;
  double delta = 0.0;
  std::vector<int> k_values;
  std::vector<double> epsilon_values;
  std::vector<Method> methods;
  std::map<CellKey, CellStats> cells;

  const CellStats* Find(Method m, int k, double eps) const {
    auto it = cells.find({m, k, eps});
    return it == cells.end() ? nullptr : &it->second;
  }
  std::size_t failed_cells() const {
    std::size_t n = 0;
    for (const auto& [key, cell] : cells) n += cell.failures.empty() ? 0 : 1;
    return n;
  }
};

// Outcome of one (method, k, epsilon, repetition) run.
struct RunOutcome {
  double cost = 0.0;
  double retained = 0.0;
  double oracle_calls = 0.0;
  std::size_t num_guesses = 0;
  bool resource_ok = true;
  std::string error;
};

// Reservoir sample of k stream elements (Algorithm R); the whole stream when
// it is shorter than k.
inline std::vector<Element> ReservoirSample(std::span<const Element> stream,
                                            int k, std::mt19937_64& rng) {
  std::vector<Element> reservoir;
  const std::size_t cap = static_cast<std::size_t>(std::max(k, 0));
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if (reservoir.size() < cap) {
      reservoir.push_back(stream[i]);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, i);
    const std::size_t j = pick(rng);
    if (j < cap) reservoir[j] = stream[i];
  }
  return reservoir;
}

// Everything a run needs besides its own seed; immutable and shared.
struct ExperimentInstance {
  std::vector<Point2> clients;
  std::vector<Point2> candidates;
  std::vector<Element> stream;
  double delta = 0.0;
  double max_singleton = 0.0;
  std::unique_ptr<KMediansObjective> objective;
};

inline ExperimentInstance PrepareInstance(const ExperimentConfig& cfg) {
  ExperimentInstance inst;
  if (cfg.use_csv) {
    inst.clients =
        LoadPointsCsv(cfg.csv.path, cfg.csv.x_column, cfg.csv.y_column,
                      cfg.csv.max_rows)
            .cloud.points();
  } else {
    std::mt19937_64 rng(DeriveSeed(cfg.master_seed, 0x64617461));  // "data"
    inst.clients = SynthMixture(cfg.synthetic.components,
                                cfg.synthetic.points_per_component,
                                cfg.synthetic.box_side, rng)
                       .points();
  }
  const PointCloud clients(inst.clients);
  inst.candidates = MakeGrid(clients.bounding_box(), cfg.grid_side).points();
  inst.stream = StreamOrder(inst.candidates.size(), cfg.shuffle_seed);
  const double g = DefaultNormalizer(inst.clients, inst.candidates);
  inst.objective =
      std::make_unique<KMediansObjective>(inst.clients, inst.candidates, g);
  inst.delta = cfg.delta.value_or(
      1.0 / std::pow(static_cast<double>(inst.clients.size()), 1.5));
  auto cursor = inst.objective->NewCursor();
  for (Element e : inst.stream) {
    inst.max_singleton = std::max(inst.max_singleton, cursor->Marginal(e));
  }
  return inst;
}

inline RunOutcome RunOne(const ExperimentConfig& cfg,
                         const ExperimentInstance& inst, Method method, int k,
                         double epsilon, std::uint64_t seed) {
  RunOutcome out;
  const KMediansObjective& f = *inst.objective;
  const double m = static_cast<double>(inst.clients.size());
  const std::size_t n = inst.stream.size();
  std::vector<Element> chosen;
  try {
    switch (method) {
      case Method::kLaplace:
      case Method::kGumbel: {
        PssmConfig pc;
        pc.k = k;
        pc.theta = cfg.theta;
        pc.privacy = {epsilon, inst.delta, cfg.composition};
        pc.mechanism = method == Method::kLaplace ? Mechanism::kLaplace
                                                  : Mechanism::kGumbel;
        pc.m_bound = m;
        pc.n_bound = n;
        pc.eta = cfg.eta;
        pc.master_seed = seed;
        pc.noiseless_for_test = cfg.noiseless_for_test;
        PssmResult r = Pssm(f, inst.stream, pc);
        const auto& d = r.diagnostics;
        chosen = std::move(r.elements);
        out.retained = static_cast<double>(d.peak_retained);
        out.oracle_calls = static_cast<double>(d.oracle_calls);
        out.num_guesses = d.ladder.size();
        out.resource_ok = d.stream_passes == 1 && d.elements_consumed == n &&
                          d.peak_retained <= k * d.ladder.size() &&
                          d.oracle_calls == d.live_instance_offers;
        break;
      }
      case Method::kNonPrivate: {
        const double lower =
            std::min(inst.max_singleton, LadderLowerBound(k, n, epsilon, m));
        const GuessLadder ladder = BuildGuessLadder(
            lower > 0 ? lower : m / 2.0, m, cfg.theta);
        SieveDiagnostics d;
        StreamSolution s = SieveStream(f, inst.stream, k, ladder, true, &d);
        chosen = std::move(s.elements);
        out.retained = static_cast<double>(d.peak_retained);
        out.oracle_calls = static_cast<double>(d.oracle_calls);
        out.num_guesses = ladder.size();
        out.resource_ok = d.stream_passes == 1 && d.elements_consumed == n &&
                          d.peak_retained <= k * ladder.size() &&
                          d.oracle_calls <= n * ladder.size();
        break;
      }
      case Method::kRandom: {
        std::mt19937_64 rng(seed);
        chosen = ReservoirSample(inst.stream, k, rng);
        out.retained = static_cast<double>(chosen.size());
        break;
      }
    }
    out.cost = f.Cost(chosen);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

inline RunReport RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  const ExperimentInstance inst = PrepareInstance(cfg);

  struct Task {
    CellKey key;
    std::size_t eps_index = 0;
    int rep = 0;
  };
  std::vector<Task> tasks;
  for (Method m : cfg.methods) {
    for (int k : cfg.k_values) {
      for (std::size_t ei = 0; ei < cfg.epsilon_values.size(); ++ei) {
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
          tasks.push_back({{m, k, cfg.epsilon_values[ei]}, ei, rep});
        }
      }
    }
  }
  std::vector<RunOutcome> outcomes(tasks.size());
  std::vector<double> seconds(tasks.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size();
         i = next.fetch_add(1)) {
      const Task& t = tasks[i];
      const std::uint64_t cell_id =
          (static_cast<std::uint64_t>(t.key.method) << 48) ^
          (static_cast<std::uint64_t>(t.key.k) << 16) ^ t.eps_index;
      const std::uint64_t seed = DeriveSeed(cfg.master_seed, cell_id, t.rep);
      const auto start = std::chrono::steady_clock::now();
      outcomes[i] = RunOne(cfg, inst, t.key.method, t.key.k, t.key.epsilon,
                           seed);
      seconds[i] = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    }
  };
  unsigned threads = cfg.threads ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  RunReport report;
  report.num_clients = inst.clients.size();
  report.num_candidates = inst.candidates.size();
  report.normalizer = inst.objective->normalizer();
  report.delta = inst.delta;
  report.k_values = cfg.k_values;
  report.epsilon_values = cfg.epsilon_values;
  report.methods = cfg.methods;

  std::map<CellKey, std::vector<std::size_t>> by_cell;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    by_cell[tasks[i].key].push_back(i);
  }
  for (const auto& [key, indices] : by_cell) {
    CellStats cell;
    std::vector<double> costs;
    for (std::size_t i : indices) {
      const RunOutcome& o = outcomes[i];
      cell.wall_seconds += seconds[i];
      if (!o.error.empty()) {
        cell.failures.push_back(o.error);
        continue;
      }
      costs.push_back(o.cost);
      cell.mean_retained += o.retained;
      cell.mean_oracle_calls += o.oracle_calls;
      cell.num_guesses = std::max(cell.num_guesses, o.num_guesses);
      if (!o.resource_ok) ++cell.resource_violations;
    }
    cell.runs = static_cast<int>(costs.size());
    if (!costs.empty()) {
      double sum = 0.0;
      for (double c : costs) sum += c;
      cell.mean_cost = sum / costs.size();
      double sq = 0.0;
      for (double c : costs) sq += (c - cell.mean_cost) * (c - cell.mean_cost);
      cell.std_cost = costs.size() > 1 ? std::sqrt(sq / (costs.size() - 1)) : 0;
      cell.mean_retained /= costs.size();
      cell.mean_oracle_calls /= costs.size();
    }
    if (cell.resource_violations > 0) {
      cell.failures.push_back(std::to_string(cell.resource_violations) +
                              " run(s) violated resource invariants");
    }
    report.cells.emplace(key, std::move(cell));
  }
  return report;
}

// Shortest decimal that round-trips to the same double.
inline std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// File tag for an epsilon value: 0.1 -> "1E-1", 1 -> "1E0", 0.25 -> "2.5E-1".
inline std::string EpsilonTag(double epsilon) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9E", epsilon);
  std::string s(buf);
  const std::size_t e = s.find('E');
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
  if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
  return mantissa + "E" + std::to_string(exponent);
}

inline constexpr std::string_view kFigureHeader =
    "Params,Laplace,LaplaceEB,Ours,OursEB,Non-private,Non-privateEB,Random,"
    "RandomEB";

inline constexpr Method kFigureColumnOrder[] = {
    Method::kLaplace, Method::kGumbel, Method::kNonPrivate, Method::kRandom};

// Figure data for one epsilon: one row per k; value columns are mean costs
// and EB columns standard deviations. Methods not in the report, and cells
// without successful runs, are left empty.
inline std::string FigureCsv(const RunReport& report, double epsilon) {
  std::string out(kFigureHeader);
  out += '\n';
  for (int k : report.k_values) {
    out += std::to_string(k);
    for (Method m : kFigureColumnOrder) {
      const CellStats* cell = report.Find(m, k, epsilon);
      if (cell && cell->runs > 0) {
        out += ',' + FormatDouble(cell->mean_cost) + ',' +
               FormatDouble(cell->std_cost);
      } else {
        out += ",,";
      }
    }
    out += '\n';
  }
  return out;
}

// Writes `<dir>/<prefix>_eps_<tag>.csv` for every epsilon; returns the paths.
inline std::vector<std::string> EmitCsv(const RunReport& report,
                                        const std::string& dir,
                                        const std::string& prefix) {
  if (report.cells.empty()) throw ConfigError("emit_csv: empty report");
  std::vector<std::string> paths;
  for (double eps : report.epsilon_values) {
    const std::string path =
        dir + "/" + prefix + "_eps_" + EpsilonTag(eps) + ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << FigureCsv(report, eps);
    if (!out) throw DataError("write failed: " + path);
    paths.push_back(path);
  }
  return paths;
}

// Per-cell detail table (no timings, so it is byte-reproducible).
inline std::string CellsCsv(const RunReport& report) {
  std::string out =
      "method,k,epsilon,runs,mean_cost,std_cost,mean_retained,"
      "mean_oracle_calls,num_guesses,failures\n";
  for (const auto& [key, cell] : report.cells) {
    out += std::string(MethodName(key.method)) + ',' + std::to_string(key.k) +
           ',' + FormatDouble(key.epsilon) + ',' + std::to_string(cell.runs) +
           ',' + FormatDouble(cell.mean_cost) + ',' +
           FormatDouble(cell.std_cost) + ',' +
           FormatDouble(cell.mean_retained) + ',' +
           FormatDouble(cell.mean_oracle_calls) + ',' +
           std::to_string(cell.num_guesses) + ',' +
           std::to_string(cell.failures.size()) + '\n';
  }
  return out;
}

struct FigureRow {
  int k = 0;
  // Indexed like kFigureColumnOrder; absent when the field was empty.
  std::optional<double> mean[4];
  std::optional<double> std_dev[4];
};

inline std::vector<FigureRow> ParseFigureCsv(std::string_view text) {
  std::vector<FigureRow> rows;
  std::size_t pos = text.find('\n');
  if (pos == std::string_view::npos || text.substr(0, pos) != kFigureHeader) {
    throw DataError("figure csv: unexpected header");
  }
  ++pos;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    const auto fields = internal::SplitCsvLine(line);
    if (fields.size() != 9) throw DataError("figure csv: expected 9 fields");
    FigureRow row;
    row.k = std::stoi(std::string(fields[0]));
    for (int m = 0; m < 4; ++m) {
      row.mean[m] = internal::ParseDouble(fields[1 + 2 * m]);
      row.std_dev[m] = internal::ParseDouble(fields[2 + 2 * m]);
    }
    rows.push_back(row);
  }
  return rows;
}

// Config files are flat `key = value` lines; `#` starts a comment. The same
// keys are accepted as command-line overrides.
inline void ApplySetting(ExperimentConfig& cfg, std::string_view key_in,
                         std::string_view value_in) {
  const std::string key(internal::Trim(key_in));
  const std::string value(internal::Trim(value_in));
  auto as_double = [&]() {
    auto v = internal::ParseDouble(value);
    if (!v) throw ConfigError("'" + key + "': not a number: " + value);
    return *v;
  };
  auto as_uint = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ConfigError("'" + key + "': not a non-negative integer: " + value);
    }
    return v;
  };
  auto as_list = [&]() {
    std::vector<std::string> items;
    for (std::string_view f : internal::SplitCsvLine(value)) {
      f = internal::Trim(f);
      if (!f.empty()) items.emplace_back(f);
    }
    return items;
  };

  if (key == "dataset") {
    if (value == "synthetic") {
      cfg.use_csv = false;
    } else if (value == "csv") {
      cfg.use_csv = true;
    } else {
      throw ConfigError("dataset must be 'synthetic' or 'csv'");
    }
  } else if (key == "components") {
    cfg.synthetic.components = as_uint();
  } else if (key == "points_per_component") {
    cfg.synthetic.points_per_component = as_uint();
  } else if (key == "box_side") {
    cfg.synthetic.box_side = as_double();
  } else if (key == "csv_path") {
    cfg.csv.path = value;
    cfg.use_csv = true;
  } else if (key == "x_column") {
    cfg.csv.x_column = value;
  } else if (key == "y_column") {
    cfg.csv.y_column = value;
  } else if (key == "max_rows") {
    if (value.empty() || value == "all") {
      cfg.csv.max_rows.reset();
    } else {
      cfg.csv.max_rows = as_uint();
    }
  } else if (key == "grid_side") {
    cfg.grid_side = as_uint();
  } else if (key == "k_values") {
    cfg.k_values.clear();
    for (const auto& item : as_list()) cfg.k_values.push_back(std::stoi(item));
  } else if (key == "epsilon_values") {
    cfg.epsilon_values.clear();
    for (const auto& item : as_list()) {
      auto v = internal::ParseDouble(item);
      if (!v) throw ConfigError("epsilon_values: not a number: " + item);
      cfg.epsilon_values.push_back(*v);
    }
  } else if (key == "theta") {
    cfg.theta = as_double();
  } else if (key == "delta") {
    if (value == "inverse_n_1p5") {
      cfg.delta.reset();
    } else {
      cfg.delta = as_double();
    }
  } else if (key == "repetitions") {
    cfg.repetitions = static_cast<int>(as_uint());
  } else if (key == "composition") {
    if (value == "basic") {
      cfg.composition = CompositionMode::kBasic;
    } else if (value == "advanced") {
      cfg.composition = CompositionMode::kAdvanced;
    } else {
      throw ConfigError("composition must be 'basic' or 'advanced'");
    }
  } else if (key == "master_seed") {
    cfg.master_seed = as_uint();
  } else if (key == "methods") {
    cfg.methods.clear();
    for (const auto& item : as_list()) {
      auto m = ParseMethod(item);
      if (!m) throw ConfigError("unknown method: " + item);
      cfg.methods.push_back(*m);
    }
  } else if (key == "shuffle_seed") {
    if (value.empty() || value == "none") {
      cfg.shuffle_seed.reset();
    } else {
      cfg.shuffle_seed = as_uint();
    }
  } else if (key == "eta") {
    cfg.eta = as_double();
  } else if (key == "threads") {
    cfg.threads = static_cast<unsigned>(as_uint());
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

inline void ApplyConfigText(ExperimentConfig& cfg, std::string_view text) {
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = internal::Trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    ApplySetting(cfg, line.substr(0, eq), line.substr(eq + 1));
    if (end == text.size()) break;
  }
}

inline ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ExperimentConfig cfg;
  ApplyConfigText(cfg, buffer.str());
  return cfg;
}

}  // namespace pssm

#endif  // PSSM_EXPERIMENT_HPP_
