#include "aeup/gowers.hpp"

#include <cmath>
#include <map>

#include "aeup/error.hpp"
#include "aeup/random.hpp"

namespace aeup {

std::string to_string(ScanSampler s) {
  return s == ScanSampler::exhaustive_small ? "exhaustive-small" : "random";
}

namespace {

// Pairwise (tree) summation keeps the result independent of accumulation order.
Complex pairwise_sum(std::vector<Complex> v) {
  if (v.empty()) return {};
  while (v.size() > 1) {
    std::size_t half = (v.size() + 1) / 2;
    for (std::size_t i = 0; i + half < v.size(); ++i) v[i] += v[i + half];
    v.resize(half);
  }
  return v[0];
}

}  // namespace

GowersReport gowers_norm(const Signal& f, int k) {
  if (k < 2 || k > 3) throw ParameterError("gowers_norm: k must be 2 or 3");
  const auto& p = f.params;
  const std::uint64_t n = p.size();
  long double cost = 1.0L;
  for (int i = 0; i < k + 1; ++i) cost *= static_cast<long double>(n);
  if (cost > static_cast<long double>(kGowersLimit)) {
    throw CapacityError("gowers_norm: N^{d(k+1)} exceeds 2^26");
  }

  std::vector<std::uint32_t> add(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) add[a * n + b] = static_cast<std::uint32_t>(p.add_index(a, b));
  }
  std::vector<Complex> conj_f(n);
  for (std::uint64_t i = 0; i < n; ++i) conj_f[i] = std::conj(f[i]);

  const std::size_t vertices = std::size_t{1} << k;
  std::vector<bool> odd(vertices);
  for (std::size_t w = 0; w < vertices; ++w) odd[w] = (__builtin_popcountll(w) % 2) == 1;

  std::vector<Complex> partial(n);
  std::vector<std::uint32_t> h(static_cast<std::size_t>(k), 0);
  std::vector<std::uint32_t> point(vertices);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::fill(h.begin(), h.end(), 0);
    Complex acc{};
    while (true) {
      point[0] = static_cast<std::uint32_t>(x);
      for (int j = 0; j < k; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t w = 0; w < bit; ++w) point[w | bit] = add[point[w] * n + h[static_cast<std::size_t>(j)]];
      }
      Complex prod = 1.0;
      for (std::size_t w = 0; w < vertices; ++w) prod *= odd[w] ? conj_f[point[w]] : f[point[w]];
      acc += prod;

      int j = 0;
      while (j < k && ++h[static_cast<std::size_t>(j)] == n) h[static_cast<std::size_t>(j++)] = 0;
      if (j == k) break;
    }
    partial[x] = acc;
  }

  const Complex total = pairwise_sum(std::move(partial)) / static_cast<double>(cost);
  // Roundoff floor on the scale of the largest possible term.
  const double floor = 1e-12 * std::pow(f.max_abs(), static_cast<double>(vertices));
  if (std::abs(total.imag()) > 1e-9 * std::abs(total.real()) && std::abs(total.imag()) > floor) {
    throw Error("gowers_norm: raw sum has a non-negligible imaginary part");
  }
  GowersReport r;
  r.k = k;
  r.raw_sum = total.real();
  r.raw_imag = total.imag();
  if (r.raw_sum < -floor) throw Error("gowers_norm: raw sum is negative");
  const double raw = std::max(r.raw_sum, 0.0);
  r.norm_value = std::pow(raw, 1.0 / static_cast<double>(vertices));
  r.exponent_form = std::pow(raw, 1.0 / static_cast<double>(k + 1));
  return r;
}

ConjectureScanReport conjecture_scan(const GroupParams& params, int k, ScanSampler sampler,
                                     std::size_t trials, std::uint64_t seed) {
  if (k < 2 || k > 3) throw ParameterError("conjecture_scan: k must be 2 or 3");
  params.require_dense("conjecture_scan");
  ConjectureScanReport report{params, k, sampler, seed, 0, 0.0, {}, {}};

  std::vector<Signal> signals;
  if (sampler == ScanSampler::exhaustive_small) {
    if (params.dimension() != 1 || params.modulus() > 6) {
      throw ParameterError("conjecture_scan: exhaustive-small requires d = 1 and N <= 6");
    }
    const std::uint64_t n = params.size();
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 1; code < total; ++code) {
      auto f = Signal::zeros(params);
      std::uint64_t c = code;
      for (std::uint64_t i = 0; i < n; ++i) {
        const auto digit = c % 3;
        f[i] = digit == 0 ? 0.0 : (digit == 1 ? 1.0 : -1.0);
        c /= 3;
      }
      signals.push_back(std::move(f));
    }
  } else {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(trial_seed(seed, t));
      std::uniform_int_distribution<std::uint64_t> size_pick(1, params.size());
      const auto s = size_pick(rng);
      signals.push_back(random_sparse_signal(rng, params, s));
    }
  }

  std::map<std::vector<std::uint64_t>, double> cache;
  bool first = true;
  for (const auto& f : signals) {
    const auto e = support_of(f);
    const auto sigma = support_of(dft(f));
    const std::vector<std::uint64_t> key(sigma.indices().begin(), sigma.indices().end());
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, gowers_norm(indicator(sigma), k).exponent_form).first;
    }
    ScanWitness w{f.values, e.size(), sigma.size(), it->second,
                  static_cast<double>(e.size()) * it->second};
    ++report.signals_examined;
    if (first || w.product < report.min_product) {
      report.min_product = w.product;
      report.extremal = w;
      first = false;
    }
    if (w.product < 1.0 - 1e-9) report.violations.push_back(std::move(w));
  }
  return report;
}

}  // namespace aeup
