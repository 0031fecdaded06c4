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
// Test oracles over Objectives: exhaustive optimum, randomized
// monotonicity/submodularity checks, and an empirical sensitivity probe.
//

#ifndef PSSM_ORACLE_CHECKS_HPP_
#define PSSM_ORACLE_CHECKS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pssm/objective.hpp"

namespace pssm {

inline constexpr double kBruteForceLimit = 1e7;

// C(n, r) as a double; exact for the magnitudes the guard cares about.
inline double Binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  r = std::min(r, n - r);
  double result = 1.0;
  for (std::size_t i = 1; i <= r; ++i) {
    result = result * static_cast<double>(n - r + i) / static_cast<double>(i);
  }
  return std::round(result);
}

struct OptResult {
  std::vector<Element> set;
  double value = 0.0;
};

// Exhaustive maximization of f over all subsets of `ground` of size <= k.
// Among equal values the lexicographically smallest (by position in
// `ground`) subset wins. Refuses, rather than truncating, when
// C(|ground|, min(k, |ground|)) exceeds 10^7.
inline OptResult BruteForceOpt(const Objective& f,
                               std::span<const Element> ground, int k) {
  if (k < 0) throw ParameterError("brute_force_opt: k < 0");
  const std::size_t n = ground.size();
  const std::size_t r = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  if (Binomial(n, r) > kBruteForceLimit) {
    throw ParameterError("brute_force_opt: C(" + std::to_string(n) + ", " +
                         std::to_string(r) + ") exceeds the enumeration guard");
  }
  OptResult best;
  best.value = f.Evaluate(best.set);
  std::vector<std::size_t> best_pos;
  std::vector<std::size_t> pos;
  std::vector<Element> set;
  for (std::size_t size = 1; size <= r; ++size) {
    pos.resize(size);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      set.clear();
      for (std::size_t p : pos) set.push_back(ground[p]);
      const double v = f.Evaluate(set);
      if (v > best.value ||
          (v == best.value && std::lexicographical_compare(
                                  pos.begin(), pos.end(), best_pos.begin(),
                                  best_pos.end()))) {
        best.value = v;
        best.set = set;
        best_pos = pos;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pos[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return best;
}

struct PropertyReport {
  std::size_t trials = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t submodularity_violations = 0;
  // Largest observed violation magnitude (0 when none).
  double worst_violation = 0.0;

  bool ok() const {
    return monotonicity_violations == 0 && submodularity_violations == 0;
  }
};

// Samples chains S <= T and an element e outside T; checks f(e|S) >= 0,
// f(e|T) >= 0 and f(e|T) <= f(e|S), all up to `tolerance` (relative to the
// magnitude of the values involved, floor 1). Marginals come from Evaluate
// differences, independent of any cursor.
inline PropertyReport CheckSubmodularMonotone(const Objective& f,
                                              std::span<const Element> ground,
                                              std::size_t trials,
                                              std::mt19937_64& rng,
                                              double tolerance = 1e-9) {
  PropertyReport report;
  if (ground.empty()) return report;
  std::vector<Element> perm(ground.begin(), ground.end());
  std::vector<Element> small;
  std::vector<Element> large;
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    // perm[0] is e; T is a random prefix of the rest and S a prefix of T.
    const std::size_t rest = perm.size() - 1;
    std::uniform_int_distribution<std::size_t> pick_t(0, rest);
    const std::size_t t_size = pick_t(rng);
    std::uniform_int_distribution<std::size_t> pick_s(0, t_size);
    const std::size_t s_size = pick_s(rng);
    small.assign(perm.begin() + 1, perm.begin() + 1 + s_size);
    large.assign(perm.begin() + 1, perm.begin() + 1 + t_size);
    const Element e = perm[0];

    const double fs = f.Evaluate(small);
    const double ft = f.Evaluate(large);
    small.push_back(e);
    large.push_back(e);
    const double fse = f.Evaluate(small);
    const double fte = f.Evaluate(large);
    const double gain_s = fse - fs;
    const double gain_t = fte - ft;
    const double scale = std::max({1.0, std::abs(fse), std::abs(fte)});
    const double tol = tolerance * scale;

    ++report.trials;
    const double mono = std::max({0.0, -gain_s, -gain_t, fs - ft});
    if (mono > tol) {
      ++report.monotonicity_violations;
      report.worst_violation = std::max(report.worst_violation, mono);
    }
    const double dr = gain_t - gain_s;
    if (dr > tol) {
      ++report.submodularity_violations;
      report.worst_violation = std::max(report.worst_violation, dr);
    }
  }
  return report;
}

// Empirical sensitivity: for each trial, forms a neighbour of `data` by
// removing a random record or duplicating one (fair coin), builds both
// objectives with `builder`, and records |f_A(S) - f_B(S)| for `sets_per_trial`
// random subsets S of `ground`. Returns the maximum observed difference.
template <class Record, class Builder>
double SensitivityProbe(Builder&& builder, const std::vector<Record>& data,
                        std::span<const Element> ground, std::size_t trials,
                        std::mt19937_64& rng,
                        std::size_t sets_per_trial = 8) {
  auto base = builder(data);
  double worst = 0.0;
  std::bernoulli_distribution coin(0.5);
  std::vector<Element> set;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Record> neighbour = data;
    if (!neighbour.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, data.size() - 1);
      const std::size_t victim = pick(rng);
      if (coin(rng)) {
        neighbour.erase(neighbour.begin() +
                        static_cast<std::ptrdiff_t>(victim));
      } else {
        neighbour.push_back(data[victim]);
      }
    }
    auto other = builder(neighbour);
    for (std::size_t s = 0; s < sets_per_trial; ++s) {
      set.clear();
      for (Element e : ground) {
        if (coin(rng)) set.push_back(e);
      }
      worst = std::max(worst, std::abs(base->Evaluate(set) -
                                       other->Evaluate(set)));
    }
  }
  return worst;
}

}  // namespace pssm

#endif  // PSSM_ORACLE_CHECKS_HPP_
