#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "vertexion/scalar.hpp"

namespace vertexion {

/*
 * Random rational points for exact identity testing.
 *
 * Numerators are uniform on [-99, 99] \ {0} and denominators uniform on
 * [1, 20]; the result is always nonzero. The range keeps bignum growth small
 * through 2^L contractions while giving about 2400 distinct values, which is
 * plenty for identities of the small fixed degrees checked here.
 */
class ScalarSampler {
 public:
  static constexpr long kMaxNumerator = 99;
  static constexpr long kMaxDenominator = 20;
  static constexpr int kMaxAttempts = 100000;

  explicit ScalarSampler(std::uint64_t seed) : engine_(seed) {}

  /// Nonzero rational not in `avoid`. Throws ExhaustedRange if none is found.
  Scalar draw(std::span<const Scalar> avoid = {});

  /// `count` pairwise-distinct values, none in `avoid`.
  std::vector<Scalar> draw_distinct(std::size_t count, std::span<const Scalar> avoid = {});

  std::size_t index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Single deterministic draw from a fresh sampler seeded with `seed`.
Scalar random_scalar(std::uint64_t seed, std::span<const Scalar> avoid = {});

/// Mixes a base seed with a label into a derived seed (splitmix64 over FNV-1a).
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

}  // namespace vertexion
