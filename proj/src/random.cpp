#include "vertexion/random.hpp"

#include <algorithm>

#include "vertexion/errors.hpp"

namespace vertexion {

Scalar ScalarSampler::draw(std::span<const Scalar> avoid) {
  std::uniform_int_distribution<long> num_dist(-kMaxNumerator, kMaxNumerator - 1);
  std::uniform_int_distribution<long> den_dist(1, kMaxDenominator);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    long num = num_dist(engine_);
    if (num >= 0) ++num;  // skip zero
    const Scalar candidate(num, den_dist(engine_));
    if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end()) return candidate;
  }
  throw ExhaustedRange("no admissible random scalar after " + std::to_string(kMaxAttempts) + " attempts");
}

std::vector<Scalar> ScalarSampler::draw_distinct(std::size_t count, std::span<const Scalar> avoid) {
  std::vector<Scalar> excluded(avoid.begin(), avoid.end());
  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(draw(excluded));
    excluded.push_back(out.back());
  }
  return out;
}

std::size_t ScalarSampler::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
  return dist(engine_);
}

Scalar random_scalar(std::uint64_t seed, std::span<const Scalar> avoid) {
  ScalarSampler sampler(seed);
  return sampler.draw(avoid);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vertexion
