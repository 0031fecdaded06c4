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
// Streaming submodular maximization under a cardinality constraint.
//
//  * ThresholdStream: one pass, keep e iff f(e | S) >= O / 2k and |S| < k.
//    Guarantees f(S) >= min{O/2, f(OPT) - O/2}.
//  * SparseInstance: above-threshold answering with noisy threshold and
//    noisy queries, halting after k positive answers.
//  * Pssm: one SparseInstance per guess O on a geometric ladder over [E, m],
//    all fed from a single pass, followed by a private selection among the
//    per-guess sets. Laplace noise works for any sensitivity-1 objective;
//    Gumbel noise requires a decomposable one.
//

#ifndef PSSM_STREAMING_HPP_
#define PSSM_STREAMING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pssm/noise.hpp"
#include "pssm/objective.hpp"
#include "pssm/oracle_checks.hpp"
#include "pssm/privacy.hpp"

namespace pssm {

// Geometric guesses {E, (1+theta)E, (1+theta)^2 E, ...} below m, plus m.
// Every x in [E, m] has a guess O with x <= O <= (1 + theta) x.
struct GuessLadder {
  double lower = 0.0;  // E
  double upper = 0.0;  // m
  double theta = 0.0;
  std::vector<double> guesses;

  std::size_t size() const { return guesses.size(); }
};

// theta = 1 (doubling) is accepted here; the streaming runs require theta < 1.
inline GuessLadder BuildGuessLadder(double lower, double upper, double theta) {
  if (!(theta > 0 && theta <= 1)) {
    throw ParameterError("guess ladder: theta must lie in (0, 1]");
  }
  if (!(lower > 0) || !(upper > 0) || !std::isfinite(lower) ||
      !std::isfinite(upper)) {
    throw ParameterError("guess ladder: E and m must be positive and finite");
  }
  GuessLadder ladder{lower, upper, theta, {}};
  // Powers that land within rounding of m collapse into m itself.
  const double cutoff = upper * (1.0 - 1e-12);
  for (int j = 0;; ++j) {
    const double guess = lower * std::pow(1.0 + theta, j);
    if (!(guess < cutoff)) break;
    ladder.guesses.push_back(guess);
  }
  ladder.guesses.push_back(upper);
  return ladder;
}

enum class Answer { kBottom, kTop };

// Above-threshold answering with cutoff k. Each query draws fresh score
// noise; the threshold noise is redrawn after every positive answer, so each
// count index has its own independent threshold perturbation.
class SparseInstance {
 public:
  SparseInstance(double threshold, int cutoff, NoiseSource threshold_noise,
                 NoiseSource score_noise)
      : threshold_(threshold),
        cutoff_(cutoff),
        threshold_noise_(std::move(threshold_noise)),
        score_noise_(std::move(score_noise)) {
    if (cutoff_ < 0) throw ParameterError("sparse instance: cutoff < 0");
    if (cutoff_ == 0) {
      halted_ = true;
    } else {
      alpha_ = threshold_noise_.Sample();
    }
  }

  // A halted instance answers kBottom and does not change state or consume
  // randomness.
  Answer Step(double query_value) {
    if (halted_) return Answer::kBottom;
    const double beta = score_noise_.Sample();
    if (query_value + beta >= threshold_ + alpha_) {
      ++count_;
      if (count_ >= cutoff_) {
        halted_ = true;
      } else {
        alpha_ = threshold_noise_.Sample();
      }
      return Answer::kTop;
    }
    return Answer::kBottom;
  }

  bool halted() const { return halted_; }
  int count() const { return count_; }
  int cutoff() const { return cutoff_; }
  double threshold() const { return threshold_; }
  double current_threshold_noise() const { return alpha_; }
  bool is_private() const {
    return threshold_noise_.is_private() && score_noise_.is_private();
  }

 private:
  double threshold_;
  int cutoff_;
  NoiseSource threshold_noise_;
  NoiseSource score_noise_;
  double alpha_ = 0.0;
  int count_ = 0;
  bool halted_ = false;
};

struct StreamSolution {
  std::vector<Element> elements;
  double value = 0.0;  // f.Evaluate(elements)
};

struct SieveDiagnostics {
  std::size_t num_guesses = 0;
  std::size_t chosen_guess = 0;
  std::vector<std::size_t> per_guess_sizes;
  std::vector<double> per_guess_values;
  std::size_t retained_elements = 0;
  std::size_t peak_retained = 0;
  std::uint64_t oracle_calls = 0;
  std::size_t elements_consumed = 0;
  int stream_passes = 0;
};

namespace internal {

template <class R>
std::optional<std::size_t> RangeSize(R& r) {
  if constexpr (std::ranges::sized_range<R>) {
    return static_cast<std::size_t>(std::ranges::size(r));
  } else {
    return std::nullopt;
  }
}

// One non-private threshold instance (the guess-O sieve).
class ThresholdInstance {
 public:
  ThresholdInstance(const Objective& f, double guess, int k)
      : cursor_(f.NewCursor()), threshold_(guess / (2.0 * k)), k_(k) {}

  // Returns whether `e` was offered to the oracle.
  bool Offer(Element e, std::size_t remaining_including_e, bool backfill) {
    const std::size_t size = cursor_->size();
    if (static_cast<int>(size) >= k_) return false;
    if (cursor_->Contains(e)) return false;
    if (backfill && remaining_including_e <= static_cast<std::size_t>(k_) - size) {
      cursor_->Add(e);
      return false;
    }
    if (cursor_->Marginal(e) >= threshold_) cursor_->Add(e);
    return true;
  }

  bool full() const { return static_cast<int>(cursor_->size()) >= k_; }
  const Cursor& cursor() const { return *cursor_; }

 private:
  std::unique_ptr<Cursor> cursor_;
  double threshold_;
  int k_;
};

}  // namespace internal

// Runs one threshold sieve per ladder guess over a single pass and returns
// the best set by exact value. With `backfill_tail`, once the elements left
// in the stream (including the current one) are no more than k - |S|, each
// instance takes all of them unconditionally; this needs a sized range.
template <std::ranges::input_range R>
StreamSolution SieveStream(const Objective& f, R&& stream, int k,
                           const GuessLadder& ladder, bool backfill_tail,
                           SieveDiagnostics* diagnostics = nullptr) {
  if (k < 1) throw ParameterError("sieve: k < 1");
  const std::optional<std::size_t> n = internal::RangeSize(stream);
  if (backfill_tail && !n) {
    throw ParameterError("sieve: tail back-fill needs the stream length");
  }
  std::vector<internal::ThresholdInstance> instances;
  instances.reserve(ladder.size());
  for (double guess : ladder.guesses) instances.emplace_back(f, guess, k);

  SieveDiagnostics diag;
  diag.num_guesses = ladder.size();
  diag.stream_passes = 1;
  std::size_t retained = 0;
  for (auto&& item : stream) {
    const Element e = static_cast<Element>(item);
    const std::size_t remaining = n ? *n - diag.elements_consumed : 0;
    ++diag.elements_consumed;
    for (auto& inst : instances) {
      const std::size_t before = inst.cursor().size();
      if (inst.Offer(e, remaining, backfill_tail)) ++diag.oracle_calls;
      retained += inst.cursor().size() - before;
    }
    diag.peak_retained = std::max(diag.peak_retained, retained);
  }

  StreamSolution best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& elements = instances[i].cursor().elements();
    const double value = f.Evaluate(elements);
    diag.per_guess_sizes.push_back(elements.size());
    diag.per_guess_values.push_back(value);
    if (value > best.value) {
      best.value = value;
      best.elements = elements;
      diag.chosen_guess = i;
    }
  }
  if (instances.empty()) best.value = f.Evaluate(best.elements);
  diag.retained_elements = retained;
  if (diagnostics) *diagnostics = std::move(diag);
  return best;
}

// Single-guess sieve: accepts e iff f(e | S) >= guess / 2k and |S| < k.
template <std::ranges::input_range R>
StreamSolution ThresholdStream(const Objective& f, R&& stream, int k,
                               double guess) {
  if (!(guess > 0)) throw ParameterError("threshold_stream: O <= 0");
  if (k < 1) throw ParameterError("threshold_stream: k < 1");
  internal::ThresholdInstance inst(f, guess, k);
  for (auto&& item : stream) {
    if (inst.full()) break;
    inst.Offer(static_cast<Element>(item), 0, false);
  }
  StreamSolution out{inst.cursor().elements(), 0.0};
  out.value = f.Evaluate(out.elements);
  return out;
}

struct PssmConfig {
  int k = 1;
  double theta = 0.2;
  PrivacyParams privacy;
  Mechanism mechanism = Mechanism::kGumbel;
  // Public bound m on f(OPT). 0 means: number of agents of a decomposable
  // objective.
  double m_bound = 0.0;
  // Public bound n on the stream length. 0 means: size of a sized range.
  std::size_t n_bound = 0;
  // Failure probability; only used for the reported additive error bound.
  double eta = 0.05;
  std::uint64_t master_seed = 0;
  // ZeroForTest noise in every instance and an exact final argmax. The
  // result then carries no privacy guarantee.
  bool noiseless_for_test = false;
};

struct PssmDiagnostics {
  double lower = 0.0;  // E
  double upper = 0.0;  // m
  std::size_t stream_length_bound = 0;
  GuessLadder ladder;
  BudgetSplit budget;
  std::vector<std::size_t> per_guess_sizes;
  std::vector<double> per_guess_values;
  std::size_t chosen_guess = 0;
  std::size_t retained_elements = 0;
  std::size_t peak_retained = 0;
  std::uint64_t oracle_calls = 0;
  // Sum over elements of the number of instances still live when the
  // element arrived.
  std::uint64_t live_instance_offers = 0;
  std::size_t elements_consumed = 0;
  int stream_passes = 0;
  // Additive error term of the utility bound at failure probability eta.
  double additive_error_bound = 0.0;
};

struct PssmResult {
  std::vector<Element> elements;
  double value = 0.0;
  // Set only when every noise source was a private one.
  std::optional<PrivacyParams> guarantee;
  PssmDiagnostics diagnostics;
};

// E = min{k ln n / epsilon, m / 2}, with n clamped below at 2 so E > 0.
inline double LadderLowerBound(int k, std::size_t n, double epsilon,
                               double m) {
  const double n_eff = std::max<double>(2.0, static_cast<double>(n));
  return std::min(k * std::log(n_eff) / epsilon, m / 2.0);
}

// k * max(b_u - a_l, a_u - b_l) + (2 / eps_sel) ln(2T / eta), with the
// noise bounds that hold jointly with probability 1 - eta/2 for the applied
// noise scales.
inline double AdditiveErrorBound(Mechanism mechanism, const BudgetSplit& budget,
                                 int k, std::size_t n, double eta) {
  const double T = static_cast<double>(budget.num_guesses);
  const double n_eff = std::max<double>(1.0, static_cast<double>(n));
  const double thr_tail = std::log(2.0 * k * T / eta);
  const double score_tail = std::log(2.0 * n_eff * T / eta);
  double spread = 0.0;
  if (mechanism == Mechanism::kLaplace) {
    const double sigma = budget.laplace_sigma.value_or(0.0);
    spread = 2.0 * sigma * score_tail + sigma * thr_tail;
  } else {
    const double gamma = budget.gumbel_gamma.value_or(0.0);
    const double a_l = -gamma * std::log(std::max(thr_tail, 1.0));
    const double a_u = gamma * thr_tail;
    const double b_l = -gamma * std::log(std::max(score_tail, 1.0));
    const double b_u = gamma * score_tail;
    spread = std::max(b_u - a_l, a_u - b_l);
  }
  return k * spread +
         2.0 / budget.selection_epsilon * std::log(2.0 * T / eta);
}

// Private streaming submodular maximization. Consumes `stream` exactly once.
template <std::ranges::input_range R>
PssmResult Pssm(const Objective& f, R&& stream, const PssmConfig& cfg) {
  if (cfg.k < 1) throw ParameterError("pssm: k < 1");
  if (!(cfg.theta > 0 && cfg.theta < 1)) {
    throw ParameterError("pssm: theta must lie in (0, 1)");
  }
  if (!(cfg.eta > 0 && cfg.eta < 1)) {
    throw ParameterError("pssm: eta must lie in (0, 1)");
  }
  cfg.privacy.Validate();
  if (cfg.mechanism == Mechanism::kGumbel && !f.decomposable()) {
    throw ConfigError("pssm: Gumbel noise requires a decomposable objective");
  }
  if (f.sensitivity() > 1.0 + 1e-12) {
    throw ConfigError("pssm: objective sensitivity exceeds 1; rescale it");
  }

  double m = cfg.m_bound;
  if (!(m > 0)) {
    if (f.decomposable() && f.num_agents()) {
      m = static_cast<double>(*f.num_agents());
    } else {
      throw ConfigError("pssm: m_bound is required for this objective");
    }
  }
  if (!(m > 0)) throw ConfigError("pssm: m must be positive");

  std::size_t n = cfg.n_bound;
  const std::optional<std::size_t> actual = internal::RangeSize(stream);
  if (n == 0) {
    if (!actual) {
      throw ConfigError("pssm: n_bound is required for unsized streams");
    }
    n = *actual;
  }
  if (actual && *actual > n) {
    throw ConfigError("pssm: stream longer than n_bound");
  }

  PssmResult result;
  PssmDiagnostics& diag = result.diagnostics;
  diag.upper = m;
  diag.stream_length_bound = n;
  diag.lower = LadderLowerBound(cfg.k, n, cfg.privacy.epsilon, m);
  diag.ladder = BuildGuessLadder(diag.lower, m, cfg.theta);
  const int T = static_cast<int>(diag.ladder.size());
  diag.budget = PlanBudget(cfg.privacy, T, cfg.k, cfg.mechanism);

  struct Guess {
    SparseInstance sparse;
    std::unique_ptr<Cursor> cursor;
  };
  std::vector<Guess> guesses;
  guesses.reserve(T);
  for (int i = 0; i < T; ++i) {
    const double threshold = diag.ladder.guesses[i] / (2.0 * cfg.k);
    const std::uint64_t thr_seed = DeriveSeed(cfg.master_seed, i, 0);
    const std::uint64_t score_seed = DeriveSeed(cfg.master_seed, i, 1);
    NoiseSource thr = NoiseSource::ZeroForTest();
    NoiseSource score = NoiseSource::ZeroForTest();
    if (!cfg.noiseless_for_test) {
      if (cfg.mechanism == Mechanism::kLaplace) {
        const double sigma = *diag.budget.laplace_sigma;
        thr = NoiseSource::Laplace(sigma, thr_seed);
        score = NoiseSource::Laplace(2.0 * sigma, score_seed);
      } else {
        const double gamma = *diag.budget.gumbel_gamma;
        thr = NoiseSource::Gumbel(gamma, thr_seed);
        score = NoiseSource::Gumbel(gamma, score_seed);
      }
    }
    guesses.push_back(Guess{
        SparseInstance(threshold, cfg.k, std::move(thr), std::move(score)),
        f.NewCursor()});
  }

  diag.stream_passes = 1;
  std::size_t live = guesses.size();
  for (auto&& item : stream) {
    const Element e = static_cast<Element>(item);
    if (++diag.elements_consumed > n) {
      throw ConfigError("pssm: stream longer than n_bound");
    }
    if (live == 0) continue;
    diag.live_instance_offers += live;
    for (Guess& g : guesses) {
      if (g.sparse.halted()) continue;
      // A repeated element that is already selected is skipped.
      if (g.cursor->Contains(e)) continue;
      const double gain = g.cursor->Marginal(e);
      ++diag.oracle_calls;
      if (g.sparse.Step(gain) == Answer::kTop) {
        g.cursor->Add(e);
        ++diag.retained_elements;
        if (g.sparse.halted()) --live;
      }
    }
    diag.peak_retained = std::max(diag.peak_retained, diag.retained_elements);
  }

  std::vector<ScoredCandidate> scored;
  scored.reserve(guesses.size());
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    const auto& elements = guesses[i].cursor->elements();
    const double value = f.Evaluate(elements);
    diag.per_guess_sizes.push_back(elements.size());
    diag.per_guess_values.push_back(value);
    scored.push_back({i, value});
  }
  NoiseSource selection =
      cfg.noiseless_for_test
          ? NoiseSource::ZeroForTest()
          : NoiseSource::Gumbel(2.0 / diag.budget.selection_epsilon,
                                DeriveSeed(cfg.master_seed, T, 2));
  diag.chosen_guess =
      PrivateArgmax(scored, diag.budget.selection_epsilon, 1.0, selection);
  result.elements = guesses[diag.chosen_guess].cursor->elements();
  result.value = diag.per_guess_values[diag.chosen_guess];
  diag.additive_error_bound =
      AdditiveErrorBound(cfg.mechanism, diag.budget, cfg.k, n, cfg.eta);
  if (!cfg.noiseless_for_test) result.guarantee = cfg.privacy;
  return result;
}

struct BoundedNoiseCheck {
  bool holds = false;
  double value = 0.0;    // f(S^O)
  double bound = 0.0;    // right-hand side
  double optimum = 0.0;  // f(OPT) by exhaustive search
  std::vector<Element> selected;
};

// Runs one sparse instance at threshold O / 2k with threshold noise uniform
// on [a_l, a_u] and score noise uniform on [b_l, b_u], then checks
//   f(S^O) >= min{O/2, f(OPT) - O/2} - k b_u + k a_l
// against the exhaustive optimum over `ground`. The rejected-element branch
// of the argument needs k (a_u - b_l) in place of k (b_u - a_l); the two
// agree for symmetric bounds.
inline BoundedNoiseCheck BoundedNoiseUtilityCheck(
    const Objective& f, std::span<const Element> ground, int k, double guess,
    double a_l, double a_u, double b_l, double b_u, std::uint64_t seed) {
  if (!(a_l <= a_u) || !(b_l <= b_u)) {
    throw ParameterError("bounded noise check: need lower <= upper bounds");
  }
  if (k < 1 || !(guess > 0)) {
    throw ParameterError("bounded noise check: need k >= 1 and O > 0");
  }
  SparseInstance sparse(guess / (2.0 * k), k,
                        NoiseSource::UniformForTest(a_l, a_u,
                                                    DeriveSeed(seed, 0, 0)),
                        NoiseSource::UniformForTest(b_l, b_u,
                                                    DeriveSeed(seed, 0, 1)));
  auto cursor = f.NewCursor();
  for (Element e : ground) {
    if (sparse.halted()) break;
    if (sparse.Step(cursor->Marginal(e)) == Answer::kTop) cursor->Add(e);
  }
  BoundedNoiseCheck check;
  check.selected = cursor->elements();
  check.value = f.Evaluate(check.selected);
  check.optimum = BruteForceOpt(f, ground, k).value;
  check.bound = std::min(guess / 2.0, check.optimum - guess / 2.0) -
                k * b_u + k * a_l;
  check.holds = check.value >= check.bound - 1e-9 * std::max(1.0, check.optimum);
  return check;
}

}  // namespace pssm

#endif  // PSSM_STREAMING_HPP_
