// Copyright 2026 The iPFL Simulator Authors.
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

#ifndef IPFL_RNG_HPP_
#define IPFL_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace ipfl {

// Stream labels used when deriving per-purpose seeds from the master seed.
// Values are arbitrary but frozen: changing them changes every simulation.
enum class StreamTag : std::uint64_t {
  kClassMeans = 1,
  kClientData = 2,
  kPool = 3,
  kAttack = 4,
  kFuzz = 5,
  kTest = 6,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Collapses (seed, tag, ids...) into one 64-bit stream seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t state = 0x243f6a8885a308d3ULL;
  std::uint64_t out = 0;
  for (std::uint64_t p : parts) {
    state ^= p + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
    out = splitmix64(state);
  }
  return out;
}

inline std::uint64_t mix_seed(std::uint64_t seed, StreamTag tag,
                              std::uint64_t a = 0, std::uint64_t b = 0) {
  return mix_seed({seed, static_cast<std::uint64_t>(tag), a, b});
}

// Deterministic random stream. All sampling is built on the standardized
// mt19937_64 output so sequences are identical across standard libraries;
// std::*_distribution is avoided on purpose.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Standard normal via Box-Muller; the second deviate of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * kPi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Marsaglia-Tsang for shape >= 1; the alpha < 1 case uses the boost trick.
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = 1.0 - uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = 1.0 - uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v;
      }
    }
  }

  // Symmetric Dirichlet(beta) over k categories.
  std::vector<double> dirichlet(double beta, int k) {
    std::vector<double> out(static_cast<std::size_t>(k));
    double sum = 0.0;
    for (auto& v : out) {
      v = gamma(beta);
      sum += v;
    }
    if (sum <= 0.0) {  // all-underflow corner; fall back to uniform
      for (auto& v : out) v = 1.0 / k;
      return out;
    }
    for (auto& v : out) v /= sum;
    return out;
  }

  template <typename T>
  void shuffle(std::span<T> values) {  // Fisher-Yates
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ipfl

#endif  // IPFL_RNG_HPP_
