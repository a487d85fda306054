#include <gtest/gtest.h>

#include "aeup/error.hpp"
#include "aeup/random.hpp"
#include "aeup/spectral.hpp"
#include "oracles.hpp"

using namespace aeup;

namespace {

const Convention kAll[] = {
    {Normalization::unitary, ExponentSign::minus_forward},
    {Normalization::unitary, ExponentSign::plus_forward},
    {Normalization::analyst, ExponentSign::minus_forward},
    {Normalization::analyst, ExponentSign::plus_forward},
};

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Dft, MatchesNaiveSumInEveryConvention) {
  Rng rng(11);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {7, 1}, {12, 1}, {5, 2}, {3, 3}}) {
    const GroupParams p(n, d);
    for (const auto& c : kAll) {
      const auto f = random_sparse_signal(rng, p, std::max<std::uint64_t>(1, p.size() / 2), c);
      const double sign = c.exponent_sign == ExponentSign::minus_forward ? -1.0 : 1.0;
      const double scale = c.normalization == Normalization::unitary ? 1.0 / std::sqrt(double(p.size())) : 1.0;
      const auto expect = oracle::naive_dft(p, f.values, sign, scale);
      const auto got = dft(f);
      EXPECT_EQ(got.domain, Domain::frequency);
      EXPECT_LT(max_diff(got.values, expect), 1e-12) << to_string(c) << " N=" << n << " d=" << d;
    }
  }
}

TEST(Dft, InverseRoundTrip) {
  Rng rng(12);
  for (const auto& c : kAll) {
    const GroupParams p(6, 2);
    const auto f = random_sparse_signal(rng, p, 10, c);
    const auto back = idft(dft(f));
    EXPECT_EQ(back.domain, Domain::time);
    EXPECT_LT(max_diff(back.values, f.values), 1e-12);
  }
}

TEST(Dft, UnitaryPlancherel) {
  Rng rng(13);
  const GroupParams p(9, 2);
  const auto f = random_sparse_signal(rng, p, 20);
  EXPECT_NEAR(dft(f).l2_norm_squared(), f.l2_norm_squared(), 1e-10 * f.l2_norm_squared());
}

TEST(Dft, WorkedExampleSpectrumUnderAnalystPlus) {
  const GroupParams p(4, 1);
  const Signal f(p, {1.0, 0.0, 0.0, 2.0}, Convention::analyst_plus());
  const auto s = dft(f);
  const std::vector<Complex> expect{{3, 0}, {1, -2}, {-1, 0}, {1, 2}};
  EXPECT_LT(max_diff(s.values, expect), 1e-12);
}

TEST(Dft, WorkedExampleUnderMinusSignSwapsOddFrequencies) {
  // The minus-sign kernel gives 1+2i at frequency 1 and 1-2i at frequency 3.
  const GroupParams p(4, 1);
  const Signal f(p, {1.0, 0.0, 0.0, 2.0}, {Normalization::analyst, ExponentSign::minus_forward});
  const auto s = dft(f);
  const std::vector<Complex> expect{{3, 0}, {1, 2}, {-1, 0}, {1, -2}};
  EXPECT_LT(max_diff(s.values, expect), 1e-12);
}

TEST(Dft, DeltaAndConstant) {
  const GroupParams p(8, 1);
  auto delta = Signal::zeros(p);
  delta[0] = 1.0;
  for (const auto& z : dft(delta).values) EXPECT_NEAR(std::abs(z - Complex(1.0 / std::sqrt(8.0))), 0.0, 1e-15);
  const Signal one(p, std::vector<Complex>(8, 1.0));
  const auto s = dft(one);
  EXPECT_NEAR(std::abs(s[0] - Complex(std::sqrt(8.0))), 0.0, 1e-14);
  for (std::uint64_t m = 1; m < 8; ++m) EXPECT_LT(std::abs(s[m]), 1e-14);
}

TEST(Signal, SizeMismatch) {
  const GroupParams p(4, 1);
  EXPECT_THROW(Signal(p, {1.0, 2.0}), ParameterError);
}

TEST(Support, DefaultRelativeThreshold) {
  const GroupParams p(5, 1);
  const Signal f(p, {1.0, 1e-12, 0.0, -3.0, Complex(0, 1e-8)});
  const auto s = support_of(f);
  EXPECT_EQ(s, SupportSet::from_indices(p, {0, 3, 4}));
  EXPECT_EQ(support_of(f, 0.0).size(), 4u);
  EXPECT_EQ(support_of(Signal::zeros(p)).size(), 0u);
  EXPECT_THROW(support_of(f, -1.0), ParameterError);
}

TEST(Support, CosetSpectrumIsTheAnnihilator) {
  for (std::int64_t n : {4, 6, 8, 9, 12}) {
    const GroupParams p(n, 1);
    for (const auto& hv : oracle::cyclic_subgroups(n)) {
      std::vector<std::uint64_t> idx;
      for (auto x : hv) idx.push_back(static_cast<std::uint64_t>((x + 1) % n));
      std::sort(idx.begin(), idx.end());
      const auto coset = SupportSet::from_indices(p, idx);
      const auto h = SupportSet::from_indices(p, std::vector<std::uint64_t>(hv.begin(), hv.end()));
      EXPECT_EQ(support_of(indicator_spectrum(coset)), annihilator(h));
    }
  }
}

TEST(Support, IndicatorSpectrumRejectsEmptySet) {
  const GroupParams p(4, 1);
  EXPECT_THROW(indicator_spectrum(SupportSet(p)), ParameterError);
}

TEST(Convention, ConvertedSpectrumEqualsDirectTransform) {
  Rng rng(14);
  const GroupParams p(5, 2);
  const auto base = random_sparse_signal(rng, p, 9);
  for (const auto& from : kAll) {
    for (const auto& to : kAll) {
      Signal f = base;
      f.convention = from;
      Signal g = base;
      g.convention = to;
      const auto converted = convert_convention(dft(f), to);
      EXPECT_EQ(converted.convention, to);
      EXPECT_LT(max_diff(converted.values, dft(g).values), 1e-12) << to_string(from) << " -> " << to_string(to);
    }
  }
}

TEST(Convention, TimeSignalsOnlyChangeTag) {
  const GroupParams p(3, 1);
  const Signal f(p, {1.0, 2.0, 3.0});
  const auto g = convert_convention(f, Convention::analyst_plus());
  EXPECT_EQ(g.values, f.values);
  EXPECT_EQ(g.convention, Convention::analyst_plus());
}

TEST(Convention, Names) {
  EXPECT_EQ(to_string(Convention::unitary()), "unitary/minus-forward");
  EXPECT_EQ(to_string(Convention::analyst_plus()), "analyst/plus-forward");
}
