#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "aeup/lattice.hpp"

namespace aeup {

using Complex = std::complex<double>;

enum class Normalization {
  unitary,  // N^{-d/2} both ways
  analyst,  // 1 forward, N^{-d} inverse
};

enum class ExponentSign {
  minus_forward,  // forward kernel chi(-m.x)
  plus_forward,   // forward kernel chi(+m.x)
};

struct Convention {
  Normalization normalization = Normalization::unitary;
  ExponentSign exponent_sign = ExponentSign::minus_forward;

  static Convention unitary() { return {}; }
  static Convention analyst_plus() { return {Normalization::analyst, ExponentSign::plus_forward}; }

  friend bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(Normalization n);
std::string to_string(ExponentSign s);
std::string to_string(const Convention& c);

enum class Domain { time, frequency };

// A complex function on Z_N^d in row-major order. A spectrum is a Signal whose
// domain is `frequency`; the convention records how it was produced.
struct Signal {
  GroupParams params;
  std::vector<Complex> values;
  Convention convention{};
  Domain domain = Domain::time;

  Signal(GroupParams p, std::vector<Complex> v, Convention c = {}, Domain dom = Domain::time);

  static Signal zeros(GroupParams p, Convention c = {}, Domain dom = Domain::time);

  const Complex& operator[](std::uint64_t i) const { return values[i]; }
  Complex& operator[](std::uint64_t i) { return values[i]; }
  const Complex& at(const RingVector& v) const { return values[params.index_of(v)]; }

  double max_abs() const;
  double l1_norm() const;
  double l2_norm_squared() const;
};

Signal dft(const Signal& f);
Signal idft(const Signal& spectrum);

// {x : |f(x)| > tau}; the default tau is 1e-9 * max|f|.
SupportSet support_of(const Signal& f, std::optional<double> tau = std::nullopt);

// 0/1 indicator of A as a time-domain signal.
Signal indicator(const SupportSet& a, Convention c = {});

// dft of the indicator of A under the unitary convention; A must be nonempty.
Signal indicator_spectrum(const SupportSet& a);

// Re-expresses a spectrum in another convention. Time-domain signals only
// have their tag changed, since their values do not depend on the convention.
Signal convert_convention(const Signal& f, Convention target);

}  // namespace aeup
