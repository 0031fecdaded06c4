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
// Set-function oracles.
//
// An Objective evaluates f(S) for sets of element ids. All objectives are
// normalized so that f({}) = 0. Incremental access goes through a Cursor,
// which owns one growing set S and answers marginal queries f(e | S); each
// streaming instance owns its own cursor while the Objective itself is only
// read, so one Objective may serve many concurrent cursors.
//

#ifndef PSSM_OBJECTIVE_HPP_
#define PSSM_OBJECTIVE_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pssm/noise.hpp"

namespace pssm {

// Index of an element in the public ground set.
using Element = std::size_t;

class Cursor {
 public:
  virtual ~Cursor() = default;

  // f(e | S). Callers must not pass an element already in S.
  virtual double Marginal(Element e) const = 0;
  // S <- S + {e}.
  virtual void Add(Element e) = 0;
  virtual double value() const = 0;

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool Contains(Element e) const {
    return std::find(elements_.begin(), elements_.end(), e) !=
           elements_.end();
  }

 protected:
  std::vector<Element> elements_;
};

class Objective {
 public:
  virtual ~Objective() = default;

  virtual double Evaluate(std::span<const Element> set) const = 0;

  // Default cursor answers marginals by differencing Evaluate.
  virtual std::unique_ptr<Cursor> NewCursor() const;

  // Upper bound on |f_A(S) - f_B(S)| over neighbouring data sets.
  virtual double sensitivity() const { return 1.0; }
  virtual bool decomposable() const { return false; }
  virtual std::optional<std::size_t> num_agents() const {
    return std::nullopt;
  }
};

class EvaluateCursor final : public Cursor {
 public:
  explicit EvaluateCursor(const Objective& f) : f_(f) {}

  double Marginal(Element e) const override {
    scratch_ = elements_;
    scratch_.push_back(e);
    return f_.Evaluate(scratch_) - value_;
  }
  void Add(Element e) override {
    elements_.push_back(e);
    value_ = f_.Evaluate(elements_);
  }
  double value() const override { return value_; }

 private:
  const Objective& f_;
  double value_ = 0.0;
  mutable std::vector<Element> scratch_;
};

inline std::unique_ptr<Cursor> Objective::NewCursor() const {
  return std::make_unique<EvaluateCursor>(*this);
}

struct MarginalGain {
  double value = 0.0;
  // Set when e was already in S; value is then 0.
  bool element_in_set = false;
};

// f(S + {e}) - f(S), computed from two Evaluate calls.
inline MarginalGain ComputeMarginalGain(const Objective& f, Element e,
                                        std::span<const Element> set) {
  if (std::find(set.begin(), set.end(), e) != set.end()) {
    return {0.0, true};
  }
  std::vector<Element> with(set.begin(), set.end());
  with.push_back(e);
  return {f.Evaluate(with) - f.Evaluate(set), false};
}

// Sum of per-agent functions, each with range [0, 1]. Evaluate sums agents
// in index order so results are bit-reproducible.
class DecomposableObjective : public Objective {
 public:
  virtual std::size_t agent_count() const = 0;
  virtual double AgentValue(std::size_t agent,
                            std::span<const Element> set) const = 0;

  double Evaluate(std::span<const Element> set) const override {
    double total = 0.0;
    for (std::size_t p = 0; p < agent_count(); ++p) {
      total += AgentValue(p, set);
    }
    return total;
  }

  bool decomposable() const override { return true; }
  std::optional<std::size_t> num_agents() const override {
    return agent_count();
  }
};

// A decomposable objective assembled from arbitrary per-agent callables.
class SumObjective final : public DecomposableObjective {
 public:
  using AgentFn = std::function<double(std::span<const Element>)>;

  explicit SumObjective(std::vector<AgentFn> agents)
      : agents_(std::move(agents)) {}

  std::size_t agent_count() const override { return agents_.size(); }
  double AgentValue(std::size_t agent,
                    std::span<const Element> set) const override {
    return agents_[agent](set);
  }

 private:
  std::vector<AgentFn> agents_;
};

// f / lambda, for objectives whose summands are bounded by lambda rather
// than 1. Sensitivity scales by the same factor.
class ScaledObjective final : public Objective {
 public:
  ScaledObjective(const Objective& base, double factor)
      : base_(base), factor_(factor) {
    if (!(factor > 0)) throw ParameterError("scaled objective: factor <= 0");
  }

  double Evaluate(std::span<const Element> set) const override {
    return factor_ * base_.Evaluate(set);
  }
  double sensitivity() const override {
    return factor_ * base_.sensitivity();
  }
  bool decomposable() const override {
    return base_.decomposable() && factor_ <= 1.0;
  }
  std::optional<std::size_t> num_agents() const override {
    return base_.num_agents();
  }

 private:
  const Objective& base_;
  double factor_;
};

// Wraps an objective and counts every marginal query issued through its
// cursors and every Evaluate call. Counters are atomic, so the wrapper may be
// shared by concurrent cursors.
class CountingObjective final : public Objective {
 public:
  explicit CountingObjective(const Objective& base) : base_(base) {}

  double Evaluate(std::span<const Element> set) const override {
    evaluate_calls_.fetch_add(1, std::memory_order_relaxed);
    return base_.Evaluate(set);
  }
  std::unique_ptr<Cursor> NewCursor() const override {
    return std::make_unique<CountingCursor>(base_.NewCursor(),
                                            marginal_calls_);
  }
  double sensitivity() const override { return base_.sensitivity(); }
  bool decomposable() const override { return base_.decomposable(); }
  std::optional<std::size_t> num_agents() const override {
    return base_.num_agents();
  }

  std::uint64_t marginal_calls() const { return marginal_calls_.load(); }
  std::uint64_t evaluate_calls() const { return evaluate_calls_.load(); }

 private:
  class CountingCursor final : public Cursor {
   public:
    CountingCursor(std::unique_ptr<Cursor> inner,
                   std::atomic<std::uint64_t>& counter)
        : inner_(std::move(inner)), counter_(counter) {}
    double Marginal(Element e) const override {
      counter_.fetch_add(1, std::memory_order_relaxed);
      return inner_->Marginal(e);
    }
    void Add(Element e) override {
      inner_->Add(e);
      elements_.push_back(e);
    }
    double value() const override { return inner_->value(); }

   private:
    std::unique_ptr<Cursor> inner_;
    std::atomic<std::uint64_t>& counter_;
  };

  const Objective& base_;
  mutable std::atomic<std::uint64_t> marginal_calls_{0};
  mutable std::atomic<std::uint64_t> evaluate_calls_{0};
};

}  // namespace pssm

#endif  // PSSM_OBJECTIVE_HPP_
