#include "aeup/random.hpp"

#include <algorithm>
#include <numeric>

#include "aeup/error.hpp"

namespace aeup {

std::vector<std::uint64_t> random_subset(Rng& rng, std::uint64_t n, std::uint64_t k) {
  if (k > n) throw ParameterError("random_subset: k exceeds n");
  std::vector<std::uint64_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  for (std::uint64_t j = 0; j < k; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(j, n - 1);
    std::swap(pool[j], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Signal random_sparse_signal(Rng& rng, const GroupParams& p, std::uint64_t k, Convention c) {
  auto f = Signal::zeros(p, c);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto i : random_subset(rng, p.size(), k)) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    f[i] = Complex(re, im);
  }
  return f;
}

}  // namespace aeup
