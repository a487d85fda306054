#include "aeup/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "aeup/error.hpp"
#include "aeup/spectral.hpp"

namespace aeup {

namespace {

// Bitmaps are used for membership when the ambient group is at most this large.
constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 20;
// |A|^3 must stay below 2^63.
constexpr std::size_t kEnergySetLimit = std::size_t{1} << 21;

class Membership {
 public:
  explicit Membership(const SupportSet& a) : set_(a) {
    if (a.params().size() <= kBitmapLimit) {
      bits_.assign(a.params().size(), 0);
      for (auto i : a.indices()) bits_[i] = 1;
    }
  }
  bool operator()(std::uint64_t i) const { return bits_.empty() ? set_.contains_index(i) : bits_[i] != 0; }

 private:
  const SupportSet& set_;
  std::vector<char> bits_;
};

// Lambda_2 of a small explicit set given by flat indices.
Count small_set_energy(const GroupParams& p, std::span<const std::uint64_t> idx) {
  std::vector<std::uint64_t> sums;
  sums.reserve(idx.size() * idx.size());
  for (auto a : idx) {
    for (auto b : idx) sums.push_back(p.add_index(a, b));
  }
  std::sort(sums.begin(), sums.end());
  Count total = 0;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    const Count r = j - i;
    total += r * r;
    i = j;
  }
  return total;
}

// Sum_{k=1..cap} C(n, k), saturating at limit + 1.
std::uint64_t subset_count(std::uint64_t n, std::size_t cap, std::uint64_t limit) {
  std::uint64_t total = 0;
  long double binom = 1.0L;
  for (std::size_t k = 1; k <= cap && k <= n; ++k) {
    binom = binom * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
    total += static_cast<std::uint64_t>(std::min<long double>(std::round(binom), limit + 1.0L));
    if (total > limit) return limit + 1;
  }
  return total;
}

}  // namespace

Count RepresentationFunction::total() const {
  Count s = 0;
  for (const auto& [t, r] : counts) s += r;
  return s;
}

Count RepresentationFunction::sum_of_squares() const {
  Count s = 0;
  for (const auto& [t, r] : counts) s += r * r;
  return s;
}

Count RepresentationFunction::at(const RingVector& t) const {
  const auto key = params.index_of(t);
  auto it = std::lower_bound(counts.begin(), counts.end(), key,
                             [](const auto& entry, std::uint64_t k) { return entry.first < k; });
  return (it != counts.end() && it->first == key) ? it->second : 0;
}

RepresentationFunction representation_function(const SupportSet& a) {
  if (a.size() > kEnergySetLimit) throw CapacityError("representation_function: set too large");
  const auto& p = a.params();
  RepresentationFunction rep{p, {}};
  if (p.size() <= kBitmapLimit) {
    std::vector<Count> dense(p.size(), 0);
    for (auto x : a.indices()) {
      for (auto y : a.indices()) ++dense[p.add_index(x, y)];
    }
    for (std::uint64_t t = 0; t < dense.size(); ++t) {
      if (dense[t] != 0) rep.counts.emplace_back(t, dense[t]);
    }
  } else {
    std::unordered_map<std::uint64_t, Count> sparse;
    for (auto x : a.indices()) {
      for (auto y : a.indices()) ++sparse[p.add_index(x, y)];
    }
    rep.counts.assign(sparse.begin(), sparse.end());
    std::sort(rep.counts.begin(), rep.counts.end());
  }
  return rep;
}

Count energy_quadruple(const SupportSet& a) {
  if (a.size() > kQuadrupleLimit) {
    throw CapacityError("energy_quadruple: |A| = " + std::to_string(a.size()) + " exceeds " +
                        std::to_string(kQuadrupleLimit));
  }
  const auto& p = a.params();
  const Membership member(a);
  Count total = 0;
  for (auto x1 : a.indices()) {
    for (auto x2 : a.indices()) {
      const auto s = p.add_index(x1, x2);
      for (auto x3 : a.indices()) {
        if (member(p.sub_index(s, x3))) ++total;
      }
    }
  }
  return total;
}

Count energy_representation(const SupportSet& a) {
  return representation_function(a).sum_of_squares();
}

double energy_fourier_check(const SupportSet& a) {
  a.params().require_dense("energy_fourier_check");
  if (a.empty()) return 0.0;
  const auto spec = indicator_spectrum(a);
  double s = 0.0;
  for (const auto& v : spec.values) {
    const double q = std::norm(v);
    s += q * q;
  }
  return static_cast<double>(a.params().size()) * s;
}

Count grid_energy_closed_form(std::int64_t m, int d) {
  if (m < 1) throw ParameterError("grid_energy_closed_form: m must be >= 1");
  if (d < 1) throw ParameterError("grid_energy_closed_form: d must be >= 1");
  const unsigned __int128 mm = static_cast<unsigned __int128>(m);
  const unsigned __int128 base = (2 * mm * mm * mm + mm) / 3;
  unsigned __int128 out = 1;
  for (int i = 0; i < d; ++i) {
    out *= base;
    if (out > std::numeric_limits<Count>::max()) {
      throw CapacityError("grid_energy_closed_form: result exceeds 64 bits");
    }
  }
  return static_cast<Count>(out);
}

std::int64_t nontrivial_parallelogram_count(const SupportSet& a) {
  if (a.empty()) throw ParameterError("nontrivial_parallelogram_count: empty set");
  const auto e = static_cast<std::int64_t>(energy_representation(a));
  const auto n = static_cast<std::int64_t>(a.size());
  return e - 2 * n * n + n;
}

EnergyCertificate certify_energy(const SupportSet& a, EnergyMethod method) {
  EnergyCertificate cert;
  cert.set_size = a.size();
  cert.method = method;
  switch (method) {
    case EnergyMethod::quadruple:
      cert.energy = energy_quadruple(a);
      break;
    case EnergyMethod::representation:
      cert.energy = energy_representation(a);
      break;
    case EnergyMethod::fourier_check: {
      const double v = energy_fourier_check(a);
      cert.fourier_value = v;
      cert.energy = static_cast<Count>(std::llround(v));
      break;
    }
  }
  if (a.empty()) {
    cert.normalized_numerator = 0;
    cert.normalized_denominator = 1;
    cert.normalized_energy = 0.0;
    return cert;
  }
  const Count cube = static_cast<Count>(a.size()) * a.size() * a.size();
  const Count g = std::gcd(cert.energy, cube);
  cert.normalized_numerator = g == 0 ? 0 : cert.energy / g;
  cert.normalized_denominator = g == 0 ? 1 : cube / g;
  cert.normalized_energy = static_cast<double>(cert.energy) / static_cast<double>(cube);
  return cert;
}

GrowthCertificate energy_growth_certificate(const GroupParams& params, std::size_t size_cap,
                                            GrowthMode mode, const GrowthOptions& opts) {
  GrowthCertificate cert;
  cert.mode = mode;
  cert.size_cap = size_cap;
  if (mode == GrowthMode::trivial) {
    cert.K = 1.0;
    cert.alpha = 3.0;
    cert.certifying = true;
    return cert;
  }
  if (opts.alpha < 2.0 || opts.alpha > 3.0) {
    throw ParameterError("energy_growth_certificate: alpha must lie in [2, 3]");
  }
  if (size_cap < 1) throw ParameterError("energy_growth_certificate: size_cap must be >= 1");
  params.require_dense("energy_growth_certificate");
  const std::uint64_t n = params.size();
  const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(size_cap, n));
  cert.alpha = opts.alpha;
  cert.per_size_max.assign(cap, 0.0);

  if (mode == GrowthMode::exhaustive) {
    if (subset_count(n, cap, kSubsetLimit) > kSubsetLimit) {
      throw CapacityError("energy_growth_certificate: more than 1e7 subsets to enumerate");
    }
    cert.certifying = true;
    for (std::size_t k = 1; k <= cap; ++k) {
      std::vector<std::uint64_t> comb(k);
      std::iota(comb.begin(), comb.end(), std::uint64_t{0});
      const double denom = std::pow(static_cast<double>(k), opts.alpha);
      double best = 0.0;
      while (true) {
        best = std::max(best, static_cast<double>(small_set_energy(params, comb)) / denom);
        ++cert.subsets_examined;
        // Advance to the next k-combination of {0..n-1} in lexicographic order.
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
      cert.per_size_max[k - 1] = best;
    }
  } else {
    cert.certifying = false;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint64_t> pool(n);
    for (std::size_t k = 1; k <= cap; ++k) {
      const double denom = std::pow(static_cast<double>(k), opts.alpha);
      double best = 0.0;
      for (std::uint64_t s = 0; s < opts.samples_per_size; ++s) {
        std::iota(pool.begin(), pool.end(), std::uint64_t{0});
        for (std::size_t j = 0; j < k; ++j) {
          std::uniform_int_distribution<std::uint64_t> pick(j, n - 1);
          std::swap(pool[j], pool[pick(rng)]);
        }
        best = std::max(best, static_cast<double>(small_set_energy(
                                  params, std::span<const std::uint64_t>(pool.data(), k))) /
                                  denom);
        ++cert.subsets_examined;
      }
      cert.per_size_max[k - 1] = best;
    }
  }
  cert.K = *std::max_element(cert.per_size_max.begin(), cert.per_size_max.end());
  return cert;
}

}  // namespace aeup
