#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "frob/error.hpp"
#include "frob/vectors.hpp"

namespace frob {

/// splitmix64 output function (Steele, Lea, Flood 2014). A bijection on
/// 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Seed of trial `trial_index` under `master_seed`:
///   mix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15)  (mod 2^64)
/// The odd multiplier and the bijective mix make it injective in the index.
constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + (trial_index + 1) * kGoldenGamma);
}

/// xoshiro256** 1.0 (Blackman and Vigna), state filled by splitmix64 from a
/// single 64-bit seed. Streams are identical on every platform.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) {
    for (auto& word : state_) {
      seed += kGoldenGamma;
      word = mix64(seed);
    }
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform integer in [lo, hi] without modulo bias: draws below
  /// 2^64 mod range are rejected.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return (*this)();  // full 64-bit span
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return lo + x % range;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

struct SamplerConfig {
  std::uint64_t n = 3;
  std::uint64_t k = 3;  // lower entry bound, defaults to n
  std::uint64_t m = 100;
  ConditionKind condition = ConditionKind::GcdOne;
  std::uint64_t master_seed = 0;
  std::uint64_t max_attempts_per_trial = 10'000;

  void validate() const {
    if (n < 2) throw ValidationError("dimension n must be >= 2");
    if (m < n) throw ValidationError("m must be >= n");
    if (k < n || k > m) {
      throw ValidationError("k must satisfy n <= k <= m (n=" + std::to_string(n) + ", k=" +
                            std::to_string(k) + ", m=" + std::to_string(m) + ")");
    }
    if (max_attempts_per_trial == 0) throw ValidationError("max attempts must be positive");
  }
};

/// Per-trial stream seed. Dimensions get separate streams so a run over an
/// n-range does not reuse draws between dimensions.
constexpr std::uint64_t trial_stream_seed(const SamplerConfig& cfg, std::uint64_t trial_index) {
  return derive_trial_seed(derive_trial_seed(cfg.master_seed, cfg.n), trial_index);
}

/// Draws n entries uniformly from [k, m], sorts them and accepts the first
/// draw satisfying cfg.condition.
inline CoinVector sample_vector(const SamplerConfig& cfg, std::uint64_t trial_index) {
  cfg.validate();
  Xoshiro256StarStar rng(trial_stream_seed(cfg, trial_index));
  std::vector<std::uint64_t> draw(cfg.n);
  for (std::uint64_t attempt = 0; attempt < cfg.max_attempts_per_trial; ++attempt) {
    for (auto& e : draw) e = rng.uniform(cfg.k, cfg.m);
    std::sort(draw.begin(), draw.end());
    const bool ok = cfg.condition == ConditionKind::GcdOne ? gcd_all(draw) == 1 : pairwise_coprime(draw);
    if (ok) return make_coin_vector(draw);
  }
  throw SamplingError("no admissible vector after " + std::to_string(cfg.max_attempts_per_trial) +
                      " attempts (n=" + std::to_string(cfg.n) + ", k=" + std::to_string(cfg.k) +
                      ", m=" + std::to_string(cfg.m) + ", condition=" + std::string(to_string(cfg.condition)) +
                      ")");
}

}  // namespace frob
