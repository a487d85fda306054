#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aeup/spectral.hpp"

namespace aeup {

// Cost guard for the brute-force cube sum: N^{d(k+1)} <= 2^26.
inline constexpr std::uint64_t kGowersLimit = std::uint64_t{1} << 26;

struct GowersReport {
  int k = 2;
  double norm_value = 0.0;     // ||f||_{U^k}
  double raw_sum = 0.0;        // ||f||_{U^k}^{2^k}
  double raw_imag = 0.0;       // discarded imaginary part of the raw sum
  double exponent_form = 0.0;  // ||f||_{U^k}^{2^k / (k + 1)}
};

// ||f||_{U^k}^{2^k} = N^{-d(k+1)} sum_x sum_{h_1..h_k} prod_{w in {0,1}^k}
// Conj^{|w|} f(x + w.h), for k in {2, 3}.
GowersReport gowers_norm(const Signal& f, int k);

enum class ScanSampler { exhaustive_small, random };

std::string to_string(ScanSampler s);

struct ScanWitness {
  std::vector<Complex> values;
  std::size_t e_size = 0;
  std::size_t sigma_size = 0;
  double exponent_form = 0.0;  // ||1_Sigma||_{U^k}^{2^k/(k+1)}
  double product = 0.0;        // |E| * exponent_form
};

struct ConjectureScanReport {
  GroupParams params;
  int k = 2;
  ScanSampler sampler = ScanSampler::random;
  std::uint64_t seed = 0;
  std::size_t signals_examined = 0;
  double min_product = 0.0;
  ScanWitness extremal;
  // Every signal whose product fell below 1 - 1e-9.
  std::vector<ScanWitness> violations;
};

// Evaluates |E| * ||1_Sigma||_{U^k}^{2^k/(k+1)} over sampled signals. The
// exhaustive sampler visits every nonzero {0, +1, -1}-valued signal on Z_N
// (d = 1, N <= 6); the random sampler draws complex Gaussian values on a
// uniformly chosen support.
ConjectureScanReport conjecture_scan(const GroupParams& params, int k, ScanSampler sampler,
                                     std::size_t trials, std::uint64_t seed);

}  // namespace aeup
