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
// Privacy accounting: basic and advanced composition, and the closed-form
// noise calibrations for the sparse-vector instances (Laplace sigma and
// Gumbel gamma).
//
// All logarithms are natural.
//

#ifndef PSSM_PRIVACY_HPP_
#define PSSM_PRIVACY_HPP_

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pssm/noise.hpp"

namespace pssm {

enum class CompositionMode { kAdvanced, kBasic };

enum class Mechanism { kLaplace, kGumbel };

inline const char* MechanismName(Mechanism m) {
  return m == Mechanism::kLaplace ? "laplace" : "gumbel";
}

struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 1e-6;
  CompositionMode composition = CompositionMode::kAdvanced;

  void Validate() const {
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
      throw ParameterError("privacy: epsilon must be positive");
    }
    if (!(delta > 0 && delta < 1)) {
      throw ParameterError("privacy: delta must lie in (0, 1)");
    }
  }
};

struct Budget {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Coordinate-wise sum.
inline Budget BasicCompose(std::span<const Budget> budgets) {
  Budget total;
  for (const Budget& b : budgets) {
    if (b.epsilon < 0 || b.delta < 0) {
      throw ParameterError("basic_compose: negative budget component");
    }
    total.epsilon += b.epsilon;
    total.delta += b.delta;
  }
  return total;
}

// epsilon' = sqrt(2k ln(1/delta')) * epsilon + k * epsilon * (e^epsilon - 1)
// for the k-fold adaptive composition of epsilon-DP mechanisms.
inline double AdvancedComposeEpsilon(double epsilon, int k,
                                     double delta_prime) {
  if (epsilon < 0) throw ParameterError("advanced_compose: epsilon < 0");
  if (k < 1) throw ParameterError("advanced_compose: k < 1");
  if (!(delta_prime > 0 && delta_prime < 1)) {
    throw ParameterError("advanced_compose: delta' must lie in (0, 1)");
  }
  return std::sqrt(2.0 * k * std::log(1.0 / delta_prime)) * epsilon +
         k * epsilon * std::expm1(epsilon);
}

// Total (epsilon', k * delta + delta').
inline Budget AdvancedCompose(double epsilon, double delta, int k,
                              double delta_prime) {
  return {AdvancedComposeEpsilon(epsilon, k, delta_prime),
          k * delta + delta_prime};
}

// (epsilon / T, delta / T).
inline Budget BasicSplit(double epsilon, double delta, int num_guesses) {
  if (num_guesses < 1) throw ParameterError("basic_split: T < 1");
  return {epsilon / num_guesses, delta / num_guesses};
}

// Per-instance epsilon for T instances under advanced composition, sized so
// that T instances at (result, delta/(T+1)) compose to at most epsilon/2.
inline double AdvancedPerGuessEpsilon(int num_guesses, double epsilon,
                                      double delta) {
  if (num_guesses < 1) throw ParameterError("per-guess epsilon: T < 1");
  return epsilon /
         (4.0 * std::sqrt(2.0 * num_guesses *
                          std::log((num_guesses + 1.0) / delta)));
}

// Threshold-noise scale of one sparse-vector instance with Laplace noise:
// (epsilon, delta)-DP for alpha ~ Lap(sigma), beta ~ Lap(2 sigma) and at most
// k above-threshold answers.
inline double SparseLaplaceSigma(int k, double epsilon, double delta) {
  if (k < 1 || !(epsilon > 0) || !(delta > 0 && delta < 1)) {
    throw ParameterError("sparse laplace sigma: invalid arguments");
  }
  return std::sqrt(32.0 * k * std::log(1.0 / delta)) / epsilon;
}

// sigma for T Laplace instances composed with advanced composition.
inline double LaplaceSigma(int k, int num_guesses, double epsilon,
                           double delta) {
  if (k < 1 || num_guesses < 1 || !(epsilon > 0) ||
      !(delta > 0 && delta < 1)) {
    throw ParameterError("laplace_sigma: invalid arguments");
  }
  const double per_guess = AdvancedPerGuessEpsilon(num_guesses, epsilon, delta);
  return std::sqrt(32.0 * k * std::log((num_guesses + 1.0) / delta)) /
         per_guess;
}

// Gumbel scale for one sparse-vector instance with Gumbel threshold and score
// noise: gamma = 8 / (epsilon ln 2) * ln(2 / (epsilon delta)). Independent of
// the cutoff k.
inline double GumbelGammaSingle(double epsilon, double delta) {
  if (!(epsilon > 0) || !(delta > 0 && delta < 1)) {
    throw ParameterError("gumbel gamma: invalid arguments");
  }
  if (!(epsilon * delta < 2.0)) {
    throw ParameterError("gumbel gamma: needs epsilon * delta < 2");
  }
  return 8.0 / (epsilon * std::numbers::ln2) * std::log(2.0 / (epsilon * delta));
}

// gamma for T Gumbel instances composed with advanced composition, each at
// (AdvancedPerGuessEpsilon, delta/(T+1)).
inline double GumbelGamma(int num_guesses, double epsilon, double delta) {
  if (num_guesses < 1 || !(epsilon > 0) || !(delta > 0 && delta < 1)) {
    throw ParameterError("gumbel_gamma: invalid arguments");
  }
  return GumbelGammaSingle(
      AdvancedPerGuessEpsilon(num_guesses, epsilon, delta),
      delta / (num_guesses + 1.0));
}

// The full allocation for one private streaming run.
struct BudgetSplit {
  int num_guesses = 1;
  double per_guess_epsilon = 0.0;
  double per_guess_delta = 0.0;
  double selection_epsilon = 0.0;
  std::optional<double> laplace_sigma;
  std::optional<double> gumbel_gamma;
  std::vector<std::string> warnings;
};

// Half of epsilon goes to the T streaming instances, half to the final
// selection. Advanced mode: per-guess (AdvancedPerGuessEpsilon, delta/(T+1)).
// Basic mode: per-guess (epsilon/(2T), delta/T).
inline BudgetSplit PlanBudget(const PrivacyParams& privacy, int num_guesses,
                              int k, Mechanism mechanism) {
  privacy.Validate();
  if (num_guesses < 1) throw ParameterError("plan budget: T < 1");
  if (k < 1) throw ParameterError("plan budget: k < 1");
  BudgetSplit split;
  split.num_guesses = num_guesses;
  split.selection_epsilon = privacy.epsilon / 2.0;
  if (privacy.epsilon >= 1.0) {
    split.warnings.push_back(
        "epsilon >= 1: calibrations remain defined but the utility analysis "
        "assumes epsilon < 1");
  }
  if (privacy.composition == CompositionMode::kAdvanced) {
    split.per_guess_epsilon =
        AdvancedPerGuessEpsilon(num_guesses, privacy.epsilon, privacy.delta);
    split.per_guess_delta = privacy.delta / (num_guesses + 1.0);
  } else {
    const Budget b = BasicSplit(privacy.epsilon / 2.0, privacy.delta,
                                num_guesses);
    split.per_guess_epsilon = b.epsilon;
    split.per_guess_delta = b.delta;
  }
  if (mechanism == Mechanism::kLaplace) {
    split.laplace_sigma = SparseLaplaceSigma(k, split.per_guess_epsilon,
                                             split.per_guess_delta);
  } else {
    split.gumbel_gamma =
        GumbelGammaSingle(split.per_guess_epsilon, split.per_guess_delta);
  }
  return split;
}

}  // namespace pssm

#endif  // PSSM_PRIVACY_HPP_
