#include "aeup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aeup/error.hpp"

namespace aeup {

std::string to_string(Normalization n) {
  return n == Normalization::unitary ? "unitary" : "analyst";
}

std::string to_string(ExponentSign s) {
  return s == ExponentSign::minus_forward ? "minus-forward" : "plus-forward";
}

std::string to_string(const Convention& c) {
  return to_string(c.normalization) + "/" + to_string(c.exponent_sign);
}

Signal::Signal(GroupParams p, std::vector<Complex> v, Convention c, Domain dom)
    : params(p), values(std::move(v)), convention(c), domain(dom) {
  if (values.size() != params.size()) {
    throw ParameterError("signal has " + std::to_string(values.size()) + " values, expected N^d = " +
                         std::to_string(params.size()));
  }
}

Signal Signal::zeros(GroupParams p, Convention c, Domain dom) {
  p.require_dense("signal");
  return Signal(p, std::vector<Complex>(p.size()), c, dom);
}

double Signal::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double Signal::l1_norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::abs(v);
  return s;
}

double Signal::l2_norm_squared() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return s;
}

namespace {

// Applies out(m) = sum_x in(x) exp(sign * 2 pi i m.x / N) by direct summation
// along each axis in turn. No scaling.
std::vector<Complex> transform(const GroupParams& p, const std::vector<Complex>& in, int sign) {
  p.require_dense("dft");
  const auto n = static_cast<std::size_t>(p.modulus());
  std::vector<Complex> twiddle(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    twiddle[t] = Complex(std::cos(angle), std::sin(angle));
  }

  std::vector<Complex> cur = in;
  std::vector<Complex> line(n);
  const std::size_t total = cur.size();
  std::size_t stride = total;
  for (int axis = 0; axis < p.dimension(); ++axis) {
    stride /= n;
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t start = base + off;
        for (std::size_t m = 0; m < n; ++m) {
          Complex acc{};
          std::size_t t = 0;
          for (std::size_t x = 0; x < n; ++x) {
            acc += cur[start + x * stride] * twiddle[t];
            t += m;
            if (t >= n) t -= n;
          }
          line[m] = acc;
        }
        for (std::size_t m = 0; m < n; ++m) cur[start + m * stride] = line[m];
      }
    }
  }
  return cur;
}

double forward_scale(const GroupParams& p, Normalization norm) {
  return norm == Normalization::unitary ? std::pow(static_cast<double>(p.size()), -0.5) : 1.0;
}

double inverse_scale(const GroupParams& p, Normalization norm) {
  return norm == Normalization::unitary ? std::pow(static_cast<double>(p.size()), -0.5)
                                        : 1.0 / static_cast<double>(p.size());
}

}  // namespace

Signal dft(const Signal& f) {
  const int sign = f.convention.exponent_sign == ExponentSign::minus_forward ? -1 : 1;
  auto out = transform(f.params, f.values, sign);
  const double s = forward_scale(f.params, f.convention.normalization);
  for (auto& v : out) v *= s;
  return Signal(f.params, std::move(out), f.convention, Domain::frequency);
}

Signal idft(const Signal& spectrum) {
  const int sign = spectrum.convention.exponent_sign == ExponentSign::minus_forward ? 1 : -1;
  auto out = transform(spectrum.params, spectrum.values, sign);
  const double s = inverse_scale(spectrum.params, spectrum.convention.normalization);
  for (auto& v : out) v *= s;
  return Signal(spectrum.params, std::move(out), spectrum.convention, Domain::time);
}

SupportSet support_of(const Signal& f, std::optional<double> tau) {
  const double threshold = tau.value_or(1e-9 * f.max_abs());
  if (threshold < 0.0) throw ParameterError("support threshold must be nonnegative");
  std::vector<std::uint64_t> idx;
  for (std::uint64_t i = 0; i < f.values.size(); ++i) {
    if (std::abs(f.values[i]) > threshold) idx.push_back(i);
  }
  return SupportSet::from_indices(f.params, std::move(idx));
}

Signal indicator(const SupportSet& a, Convention c) {
  auto s = Signal::zeros(a.params(), c);
  for (auto i : a.indices()) s[i] = 1.0;
  return s;
}

Signal indicator_spectrum(const SupportSet& a) {
  if (a.empty()) throw ParameterError("indicator_spectrum: empty set");
  return dft(indicator(a, Convention::unitary()));
}

Signal convert_convention(const Signal& f, Convention target) {
  if (f.domain == Domain::time) {
    Signal out = f;
    out.convention = target;
    return out;
  }
  const double ratio =
      forward_scale(f.params, target.normalization) / forward_scale(f.params, f.convention.normalization);
  const bool flip = target.exponent_sign != f.convention.exponent_sign;
  std::vector<Complex> out(f.values.size());
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    const std::uint64_t src = flip ? f.params.negate_index(m) : m;
    out[m] = ratio * f.values[src];
  }
  return Signal(f.params, std::move(out), target, Domain::frequency);
}

}  // namespace aeup
