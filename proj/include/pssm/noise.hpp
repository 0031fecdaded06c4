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
// Noise mechanisms: Laplace and Gumbel sampling, closed-form CDFs, and
// private argmax selection (the exponential mechanism realized through the
// Gumbel-max trick).
//
// Randomness comes from std::mt19937_64 and is NOT cryptographically secure.
// Floating-point attacks on the Laplace mechanism (no snapping) are not
// mitigated.
//

#ifndef PSSM_NOISE_HPP_
#define PSSM_NOISE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace pssm {

// Thrown for out-of-domain numeric parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown for inconsistent configurations (e.g. Gumbel noise requested on a
// non-decomposable objective).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SplitMix64 finalizer. Used to derive independent per-instance seeds from a
// master seed so results do not depend on scheduling.
constexpr std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t a,
                                   std::uint64_t b = 0) {
  return MixSeed(MixSeed(MixSeed(master) ^ a) ^ (b + 0x632be59bd9b4e019ULL));
}

enum class NoiseKind { kLaplace, kGumbel, kZeroForTest, kUniformForTest };

inline const char* NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kLaplace:
      return "laplace";
    case NoiseKind::kGumbel:
      return "gumbel";
    case NoiseKind::kZeroForTest:
      return "zero";
    case NoiseKind::kUniformForTest:
      return "uniform";
  }
  return "unknown";
}

// Uniform on the closed interval [2^-53, 1 - 2^-53], so ln(U) and ln(1 - U)
// are always finite.
inline constexpr double kMinUniform = 0x1.0p-53;
inline constexpr double kMaxUniform = 1.0 - 0x1.0p-53;

inline double ClampUniform(double u) {
  if (u < kMinUniform) return kMinUniform;
  if (u > kMaxUniform) return kMaxUniform;
  return u;
}

// Inverse-CDF transforms. `u` is clamped before use.
inline double LaplaceFromUniform(double scale, double u) {
  u = ClampUniform(u) - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

inline double GumbelFromUniform(double location, double scale, double u) {
  return location - scale * std::log(-std::log(ClampUniform(u)));
}

inline void RequirePositiveScale(double scale, const char* what) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw ParameterError(std::string(what) +
                         ": scale must be positive and finite, got " +
                         std::to_string(scale));
  }
}

// A seeded stream of draws from one noise distribution.
//
// Two sources built with the same kind, parameters and seed produce identical
// sequences. A source must not be shared between concurrent consumers.
class NoiseSource {
 public:
  static NoiseSource Laplace(double scale, std::uint64_t seed) {
    RequirePositiveScale(scale, "Laplace noise");
    return NoiseSource(NoiseKind::kLaplace, scale, 0.0, seed);
  }

  static NoiseSource Gumbel(double scale, std::uint64_t seed,
                            double location = 0.0) {
    RequirePositiveScale(scale, "Gumbel noise");
    return NoiseSource(NoiseKind::kGumbel, scale, location, seed);
  }

  // Always emits 0. Only for exercising algorithms in their noiseless limit.
  static NoiseSource ZeroForTest() {
    return NoiseSource(NoiseKind::kZeroForTest, 0.0, 0.0, 0);
  }

  // Uniform on [lo, hi]; used to inject bounded noise in utility tests.
  static NoiseSource UniformForTest(double lo, double hi, std::uint64_t seed) {
    if (!(hi >= lo)) throw ParameterError("uniform noise: need lo <= hi");
    return NoiseSource(NoiseKind::kUniformForTest, hi - lo, lo, seed);
  }

  NoiseKind kind() const { return kind_; }
  double scale() const { return scale_; }
  double location() const { return location_; }

  // False for the test-only kinds, which void any privacy guarantee.
  bool is_private() const {
    return kind_ == NoiseKind::kLaplace || kind_ == NoiseKind::kGumbel;
  }

  // A uniform draw in [2^-53, 1 - 2^-53]; consumes one engine output.
  double NextUniform() {
    const double u =
        (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return ClampUniform(u);
  }

  // One draw from this source's own distribution.
  double Sample() {
    switch (kind_) {
      case NoiseKind::kLaplace:
        return location_ + LaplaceFromUniform(scale_, NextUniform());
      case NoiseKind::kGumbel:
        return GumbelFromUniform(location_, scale_, NextUniform());
      case NoiseKind::kZeroForTest:
        return 0.0;
      case NoiseKind::kUniformForTest:
        return location_ + scale_ * NextUniform();
    }
    return 0.0;
  }

 private:
  NoiseSource(NoiseKind kind, double scale, double location,
              std::uint64_t seed)
      : kind_(kind), scale_(scale), location_(location), engine_(seed) {}

  NoiseKind kind_;
  double scale_;
  double location_;
  std::mt19937_64 engine_;
};

// Draws Lap(scale) using `source` for randomness. A ZeroForTest source
// yields 0.
inline double SampleLaplace(double scale, NoiseSource& source) {
  RequirePositiveScale(scale, "sample_laplace");
  if (source.kind() == NoiseKind::kZeroForTest) return 0.0;
  return LaplaceFromUniform(scale, source.NextUniform());
}

// Draws Gumbel(location, scale) via x = location - scale * ln(-ln U).
inline double SampleGumbel(double location, double scale,
                           NoiseSource& source) {
  RequirePositiveScale(scale, "sample_gumbel");
  if (source.kind() == NoiseKind::kZeroForTest) return location;
  return GumbelFromUniform(location, scale, source.NextUniform());
}

inline double GumbelCdf(double x, double location, double scale) {
  RequirePositiveScale(scale, "gumbel_cdf");
  return std::exp(-std::exp(-(x - location) / scale));
}

inline double LaplaceCdf(double x, double scale) {
  RequirePositiveScale(scale, "laplace_cdf");
  return x < 0 ? 0.5 * std::exp(x / scale) : 1.0 - 0.5 * std::exp(-x / scale);
}

struct ScoredCandidate {
  std::size_t index = 0;
  double score = 0.0;
};

// Exponential-mechanism selection: returns the index of the candidate that
// maximizes score + Gumbel(0, 2 * sensitivity / epsilon). The selection
// distribution is proportional to exp(epsilon * score / (2 * sensitivity))
// without ever exponentiating a score. With a ZeroForTest source this is an
// exact argmax; ties go to the earliest candidate.
inline std::size_t PrivateArgmax(std::span<const ScoredCandidate> candidates,
                                 double epsilon, double sensitivity,
                                 NoiseSource& source) {
  if (candidates.empty()) {
    throw ParameterError("private_argmax: empty candidate set");
  }
  if (!(epsilon > 0)) throw ParameterError("private_argmax: epsilon <= 0");
  if (!(sensitivity > 0)) {
    throw ParameterError("private_argmax: sensitivity <= 0");
  }
  const double scale = 2.0 * sensitivity / epsilon;
  std::size_t best = candidates.front().index;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const ScoredCandidate& c : candidates) {
    const double noisy = c.score + SampleGumbel(0.0, scale, source);
    if (noisy > best_value) {
      best_value = noisy;
      best = c.index;
    }
  }
  return best;
}

}  // namespace pssm

#endif  // PSSM_NOISE_HPP_
