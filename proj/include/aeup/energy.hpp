#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aeup/lattice.hpp"

namespace aeup {

// Largest set accepted by the O(|A|^3) quadruple loop.
inline constexpr std::size_t kQuadrupleLimit = 256;
// Largest subset count visited by the exhaustive growth certificate.
inline constexpr std::uint64_t kSubsetLimit = 10'000'000;

// r(t) = #{(a, b) in A^2 : a + b = t}, listed by increasing t (flat index).
struct RepresentationFunction {
  GroupParams params;
  std::vector<std::pair<std::uint64_t, Count>> counts;

  Count total() const;            // sum r(t) = |A|^2
  Count sum_of_squares() const;   // sum r(t)^2 = Lambda_2(A)
  Count at(const RingVector& t) const;
};

RepresentationFunction representation_function(const SupportSet& a);

// #{(x1,x2,x3,x4) in A^4 : x1 + x2 = x3 + x4} by testing x1 + x2 - x3 in A.
// Throws CapacityError for |A| > kQuadrupleLimit.
Count energy_quadruple(const SupportSet& a);

// sum_t r(t)^2.
Count energy_representation(const SupportSet& a);

// N^d sum_m |1_A^(m)|^4 with the unitary transform. Floating cross-check only.
double energy_fourier_check(const SupportSet& a);

// ((2m^3 + m) / 3)^d, the energy of {0..m-1}^d when no sum wraps around.
Count grid_energy_closed_form(std::int64_t m, int d);

// Lambda_2(A) - 2|A|^2 + |A|: additive quadruples other than (z,y) = (x,w) or (w,x).
std::int64_t nontrivial_parallelogram_count(const SupportSet& a);

enum class EnergyMethod { quadruple, representation, fourier_check };

struct EnergyCertificate {
  std::size_t set_size = 0;
  Count energy = 0;
  // Lambda_2(A) / |A|^3 in lowest terms.
  Count normalized_numerator = 0;
  Count normalized_denominator = 1;
  double normalized_energy = 0.0;
  EnergyMethod method = EnergyMethod::representation;
  // Raw floating value when method is fourier_check.
  std::optional<double> fourier_value;
};

EnergyCertificate certify_energy(const SupportSet& a, EnergyMethod method);

enum class GrowthMode { trivial, exhaustive, sampled };

// (K, alpha) with Lambda_2(T) <= K |T|^alpha for every T with |T| <= size_cap.
struct GrowthCertificate {
  double K = 1.0;
  double alpha = 3.0;
  GrowthMode mode = GrowthMode::trivial;
  // False for sampled mode: the sampled K is only a lower bound.
  bool certifying = true;
  std::size_t size_cap = 0;
  // max Lambda_2(T) / |T|^alpha for each size 1..size_cap (empty for trivial).
  std::vector<double> per_size_max;
  std::uint64_t subsets_examined = 0;
};

struct GrowthOptions {
  double alpha = 3.0;
  std::uint64_t samples_per_size = 1000;
  std::uint64_t seed = 0;
};

GrowthCertificate energy_growth_certificate(const GroupParams& params, std::size_t size_cap,
                                            GrowthMode mode, const GrowthOptions& opts = {});

}  // namespace aeup
