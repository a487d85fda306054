#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aeup/spectral.hpp"

namespace aeup {

// Seed for trial `index` of a run with the given master seed (splitmix64 mix),
// so trials can be generated in any order without changing their content.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

// Uniformly random subset of {0..n-1} with exactly k elements, sorted.
std::vector<std::uint64_t> random_subset(Rng& rng, std::uint64_t n, std::uint64_t k);

// Signal with uniformly chosen support of size k and standard complex Gaussian values.
Signal random_sparse_signal(Rng& rng, const GroupParams& p, std::uint64_t k, Convention c = {});

}  // namespace aeup
