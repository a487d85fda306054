#pragma once

// Reference computations for the tests. Each one is a direct transcription of
// a definition and deliberately shares no code path with the library beyond
// the point and set types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "aeup/lattice.hpp"
#include "aeup/random.hpp"
#include "aeup/spectral.hpp"

namespace oracle {

using aeup::Complex;

// Exact Fourier sum sum_x f(x) exp(sign 2 pi i m.x / N) * scale, with m.x
// computed from coordinates in long double.
inline std::vector<Complex> naive_dft(const aeup::GroupParams& p, const std::vector<Complex>& f,
                                      double sign, double scale) {
  const std::uint64_t n = p.size();
  std::vector<Complex> out(n);
  for (std::uint64_t m = 0; m < n; ++m) {
    const auto mv = p.point_at(m);
    std::complex<long double> acc = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      const auto xv = p.point_at(x);
      long double dot = 0;
      for (int i = 0; i < p.dimension(); ++i) dot += static_cast<long double>(mv[i] * xv[i] % p.modulus());
      const long double ang = sign * 2.0L * 3.14159265358979323846264338327950288L * dot /
                              static_cast<long double>(p.modulus());
      acc += std::complex<long double>(f[x].real(), f[x].imag()) *
             std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    out[m] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag())) * scale;
  }
  return out;
}

// #{(x1,x2,x3,x4) in A^4 : x1 + x2 = x3 + x4} by a literal four-fold loop.
inline std::uint64_t energy_four_loop(const aeup::SupportSet& a) {
  const auto& p = a.params();
  const auto pts = a.points();
  std::uint64_t count = 0;
  for (const auto& x1 : pts)
    for (const auto& x2 : pts)
      for (const auto& x3 : pts)
        for (const auto& x4 : pts) count += p.add(x1, x2) == p.add(x3, x4);
  return count;
}

// Quadruples with x1 + x2 = x3 + x4 other than (x3, x4) = (x1, x2) or (x2, x1).
inline std::int64_t parallelograms_excluding_degenerate(const aeup::SupportSet& a) {
  const auto& p = a.params();
  const auto pts = a.points();
  std::int64_t count = 0;
  for (const auto& x1 : pts)
    for (const auto& x2 : pts)
      for (const auto& x3 : pts)
        for (const auto& x4 : pts) {
          if (!(p.add(x1, x2) == p.add(x3, x4))) continue;
          const bool degenerate = (x3 == x1 && x4 == x2) || (x3 == x2 && x4 == x1);
          count += !degenerate;
        }
  return count;
}

// The same count with the degenerate quadruples counted by inclusion-exclusion:
// |{(x3,x4)=(x1,x2)}| + |{(x3,x4)=(x2,x1)}| - |{x1=x2}| = 2|A|^2 - |A|.
inline std::int64_t degenerate_count(std::int64_t size) { return 2 * size * size - size; }

// ||f||_{U^2}^4 = sum_m |f~(m)|^4 with f~(m) = N^{-d} sum_x f(x) e(-m.x / N).
inline double u2_fourth_power_by_fourier(const aeup::Signal& f) {
  const double n = static_cast<double>(f.params.size());
  const auto spec = naive_dft(f.params, f.values, -1.0, 1.0 / n);
  double s = 0.0;
  for (const auto& z : spec) s += std::pow(std::abs(z), 4.0);
  return s;
}

inline aeup::SupportSet random_set(aeup::Rng& rng, const aeup::GroupParams& p, std::uint64_t k) {
  return aeup::SupportSet::from_indices(p, aeup::random_subset(rng, p.size(), k));
}

// All cyclic subgroups of Z_N, one per divisor.
inline std::vector<std::vector<std::int64_t>> cyclic_subgroups(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t g = 1; g <= n; ++g) {
    if (n % g) continue;
    std::vector<std::int64_t> h;
    for (std::int64_t x = 0; x < n; x += g) h.push_back(x);
    out.push_back(h);
  }
  return out;
}

}  // namespace oracle
