#pragma once

// Deterministic, platform-independent random generation.
//
// Generator: xoshiro256** (Blackman & Vigna), state seeded by four successive
// splitmix64 outputs of the 64-bit seed. Only 64-bit integer arithmetic and
// exact IEEE double conversions are used, so a seed yields the same stream on
// every platform. Per-trial seeds are master ^ (index * 0x9E3779B97F4A7C15).

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "supertrop/field_oracle.hpp"
#include "supertrop/linalg.hpp"

namespace supertrop {

inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return master ^ (index * 0x9E3779B97F4A7C15ull);
}

class Xoshiro256 {
public:
  explicit Xoshiro256(std::uint64_t seed) {
    for (auto &word : s_)
      word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] by rejection (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0)
      return static_cast<std::int64_t>(next());
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t x;
    do
      x = next();
    while (x < threshold);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                     x % range);
  }

private:
  std::array<std::uint64_t, 4> s_{};

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
};

/// Entry distribution: eps with p_eps, otherwise an integer uniform in
/// [-bound, bound], tangible with probability p_tangible / (p_tangible +
/// p_ghost).
struct ScalarDistribution {
  std::int64_t bound = 20;
  double p_tangible = 0.8;
  double p_ghost = 0.15;
  double p_eps = 0.05;
};

struct RejectionLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kRejectionLimit = 10000;

/// Draw order per entry: one uniform01 for eps; if not eps, one uniform_int
/// for the value and one uniform01 for the tag.
inline Scalar generate_scalar(Xoshiro256 &rng, const ScalarDistribution &d) {
  if (rng.uniform01() < d.p_eps)
    return Scalar::eps();
  const std::int64_t v = rng.uniform_int(-d.bound, d.bound);
  const double live = d.p_tangible + d.p_ghost;
  return rng.uniform01() * live < d.p_tangible ? Scalar::tangible(v)
                                               : Scalar::ghost(v);
}

inline Matrix generate_matrix(Xoshiro256 &rng, std::size_t n,
                              const ScalarDistribution &d) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = generate_scalar(rng, d);
  return m;
}

struct Drawn {
  Matrix matrix;
  std::size_t rejections;
};

/// Redraws until the determinant is tangible.
inline Drawn generate_nonsingular(Xoshiro256 &rng, std::size_t n,
                                  const ScalarDistribution &d,
                                  const DetOptions &opt = {}) {
  for (std::size_t rejected = 0; rejected < kRejectionLimit; ++rejected) {
    Matrix m = generate_matrix(rng, n, d);
    if (is_nonsingular(m, opt))
      return {std::move(m), rejected};
  }
  throw RejectionLimit("no non-singular matrix after " +
                       std::to_string(kRejectionLimit) +
                       " consecutive draws; check the entry distribution");
}

/// Integer entries uniform in [-bound, bound].
inline field::RatMatrix generate_int_matrix(Xoshiro256 &rng, std::size_t n,
                                            std::int64_t bound) {
  field::RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

} // namespace supertrop
