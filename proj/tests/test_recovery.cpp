#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "aeup/error.hpp"
#include "aeup/random.hpp"
#include "aeup/recovery.hpp"
#include "oracles.hpp"

using namespace aeup;

namespace {

double max_diff(const Signal& a, const Signal& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct Worked {
  GroupParams p{4, 1};
  Signal f{p, {1.0, 0.0, 0.0, 2.0}, Convention::analyst_plus()};
  SupportSet missing{p, {p.point({1}), p.point({2})}};
  RecoveryProblem problem = RecoveryProblem::from_signal(f, missing);
};

}  // namespace

TEST(Recovery, WorkedExampleL1) {
  Worked w;
  const auto sol = l1_recover(w.problem);
  EXPECT_EQ(sol.status, SolveStatus::converged) << sol.diagnostic;
  EXPECT_LE(max_diff(sol.signal, w.f), 1e-6);
  EXPECT_NEAR(sol.objective, 3.0, 1e-6);
  EXPECT_LE(sol.feasibility_residual, 1e-8);
  EXPECT_EQ(sol.signal.convention, Convention::analyst_plus());
}

TEST(Recovery, WorkedExampleLeastSquaresOnTrueSupport) {
  Worked w;
  const auto sol = least_squares_recover(w.problem, support_of(w.f));
  EXPECT_EQ(sol.status, SolveStatus::converged);
  EXPECT_LE(max_diff(sol.signal, w.f), 1e-8);
}

TEST(Recovery, WorkedExampleProfile) {
  Worked w;
  const Signal dir(w.p, {-1.0, 1.0, -1.0, 1.0}, Convention::analyst_plus());
  std::vector<Complex> steps;
  for (int i = 0; i < 100; ++i) steps.push_back(std::polar(-2.0 + 4.0 * i / 99.0, 0.3 * i));
  const auto phi = l1_objective_profile(w.problem, w.f, dir, steps);
  ASSERT_EQ(phi.size(), steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    // |1 - s| + |s| + |s| + |2 + s| >= 3 + 2|s|
    const auto s = steps[i];
    EXPECT_NEAR(phi[i], std::abs(1.0 - s) + 2.0 * std::abs(s) + std::abs(2.0 + s), 1e-12);
    EXPECT_GE(phi[i], 3.0 + 2.0 * std::abs(s) - 1e-12);
  }
}

TEST(Recovery, ProfileRejectsBadInputs) {
  Worked w;
  const Signal bad_dir(w.p, {1.0, 0.0, 0.0, 0.0}, Convention::analyst_plus());
  EXPECT_THROW(l1_objective_profile(w.problem, w.f, bad_dir, {1.0}), ParameterError);
  const Signal bad_base(w.p, {0.0, 0.0, 0.0, 2.0}, Convention::analyst_plus());
  const Signal dir(w.p, {-1.0, 1.0, -1.0, 1.0}, Convention::analyst_plus());
  EXPECT_THROW(l1_objective_profile(w.problem, bad_base, dir, {1.0}), ParameterError);
}

TEST(Recovery, ObservedEntriesOnMissingAreIgnored) {
  const GroupParams p(4, 1);
  const SupportSet missing(p, {p.point({1})});
  const RecoveryProblem prob(Signal(p, {1.0, 5.0, 1.0, 1.0}, {}, Domain::frequency), missing);
  EXPECT_EQ(prob.spectrum[1], Complex(0.0));
  EXPECT_FALSE(prob.observed(1));
  EXPECT_TRUE(prob.observed(0));
}

TEST(Recovery, EmptyMissingSetIsInverseTransform) {
  Rng rng(31);
  const GroupParams p(6, 1);
  const auto f = random_sparse_signal(rng, p, 6);
  const auto sol = l1_recover(RecoveryProblem::from_signal(f, SupportSet(p)));
  EXPECT_EQ(sol.status, SolveStatus::converged);
  EXPECT_LT(max_diff(sol.signal, f), 1e-12);
}

TEST(Recovery, ExactUnderUniquenessConditionEveryConvention) {
  const Convention conventions[] = {Convention::unitary(), Convention::analyst_plus(),
                                    {Normalization::analyst, ExponentSign::minus_forward},
                                    {Normalization::unitary, ExponentSign::plus_forward}};
  int trials = 0;
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng(trial_seed(32, t));
    const std::int64_t n = 9 + static_cast<std::int64_t>(t % 8);
    const GroupParams p(n, 1);
    std::uniform_int_distribution<std::uint64_t> es(1, 2);
    const auto e = es(rng);
    const std::uint64_t s_max = (p.size() - 1) / (2 * e);
    std::uniform_int_distribution<std::uint64_t> ss(1, s_max);
    const auto s = oracle::random_set(rng, p, ss(rng));
    ASSERT_TRUE(uniqueness_check(e, s, p));
    const auto f = random_sparse_signal(rng, p, e, conventions[t % 4]);
    const auto prob = RecoveryProblem::from_signal(f, s);
    const auto l1 = l1_recover(prob);
    EXPECT_LE(max_diff(l1.signal, f), 1e-6) << "trial " << t << " N=" << n << " " << l1.diagnostic;
    const auto ls = least_squares_recover(prob, support_of(f));
    EXPECT_EQ(ls.status, SolveStatus::converged);
    EXPECT_LE(max_diff(ls.signal, f), 1e-8);
    ++trials;
  }
  EXPECT_EQ(trials, 40);
}

TEST(Recovery, DeterministicOutput) {
  Rng rng(33);
  const GroupParams p(11, 1);
  const auto f = random_sparse_signal(rng, p, 2);
  const auto prob = RecoveryProblem::from_signal(f, SupportSet::from_indices(p, {2, 5}));
  const auto a = l1_recover(prob);
  const auto b = l1_recover(prob);
  EXPECT_EQ(a.signal.values, b.signal.values);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Recovery, IterationCapReportsMaxIter) {
  Rng rng(34);
  const GroupParams p(16, 1);
  const auto f = random_sparse_signal(rng, p, 5);
  const auto prob = RecoveryProblem::from_signal(f, SupportSet::from_indices(p, {1, 2, 3, 4, 5, 6, 7, 8}));
  const auto sol = l1_recover(prob, {1e-8, 1e-12, 3});
  EXPECT_EQ(sol.status, SolveStatus::max_iter);
  EXPECT_LE(sol.iterations, 3);
  EXPECT_FALSE(sol.diagnostic.empty());
}

TEST(Recovery, ZeroObservationsGiveZeroSignal) {
  const GroupParams p(5, 1);
  const RecoveryProblem prob(Signal::zeros(p, {}, Domain::frequency), SupportSet::from_indices(p, {1, 2}));
  const auto sol = l1_recover(prob);
  EXPECT_EQ(sol.status, SolveStatus::converged);
  EXPECT_EQ(sol.objective, 0.0);
}

TEST(LeastSquares, UnderdeterminedAndRankDeficient) {
  const GroupParams p(4, 1);
  const Signal f(p, {1.0, 0.0, 0.0, 2.0});
  const auto prob = RecoveryProblem::from_signal(f, SupportSet::from_indices(p, {1, 2}));
  const auto under = least_squares_recover(prob, SupportSet::from_indices(p, {0, 1, 3}));
  EXPECT_EQ(under.status, SolveStatus::infeasible);
  EXPECT_NE(under.diagnostic.find("underdetermined"), std::string::npos);

  // Observing only the even frequencies of Z_4 cannot tell x from x + 2.
  const auto even = RecoveryProblem::from_signal(Signal(p, {1.0, 0.0, 0.0, 0.0}), SupportSet::from_indices(p, {1, 3}));
  const auto rank = least_squares_recover(even, SupportSet::from_indices(p, {0, 2}));
  EXPECT_EQ(rank.status, SolveStatus::infeasible);
  EXPECT_NE(rank.diagnostic.find("rank-deficient"), std::string::npos);
}

TEST(LeastSquares, InconsistentSupport) {
  const GroupParams p(8, 1);
  const Signal f(p, {1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0});
  const auto prob = RecoveryProblem::from_signal(f, SupportSet::from_indices(p, {1}));
  const auto sol = least_squares_recover(prob, SupportSet::from_indices(p, {0, 5}));
  EXPECT_EQ(sol.status, SolveStatus::infeasible);
  EXPECT_NE(sol.diagnostic.find("inconsistent"), std::string::npos);
}

TEST(LeastSquares, EmptySupportOnZeroData) {
  const GroupParams p(5, 1);
  const auto prob = RecoveryProblem::from_signal(Signal::zeros(p), SupportSet::from_indices(p, {0}));
  const auto sol = least_squares_recover(prob, SupportSet(p));
  EXPECT_EQ(sol.status, SolveStatus::converged);
  EXPECT_EQ(sol.objective, 0.0);
}

TEST(Uniqueness, StrictInequality) {
  const GroupParams p(12, 1);
  EXPECT_TRUE(uniqueness_check(1, SupportSet::from_indices(p, {0, 1, 2, 3, 4}), p));
  EXPECT_FALSE(uniqueness_check(1, SupportSet::from_indices(p, {0, 1, 2, 3, 4, 5}), p));
  EXPECT_TRUE(uniqueness_check(0, full_group(p), p));
}

TEST(Concentration, RandomSpectraInRandomSets) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(trial_seed(35, t));
    const std::int64_t n = 4 + static_cast<std::int64_t>(t % 9);
    const int d = t % 3 == 0 ? 2 : 1;
    const GroupParams p(d == 2 ? std::min<std::int64_t>(n, 6) : n, d);
    std::uniform_int_distribution<std::uint64_t> k(1, p.size());
    const auto s = oracle::random_set(rng, p, k(rng));
    const auto e = oracle::random_set(rng, p, k(rng));
    auto spec = Signal::zeros(p, {}, Domain::frequency);
    std::normal_distribution<double> g;
    for (auto m : s.indices()) spec[m] = Complex(g(rng), g(rng));
    const auto h = idft(spec);
    const auto r = concentration_check(h, e, s);
    double lhs = 0.0;
    for (auto x : e.indices()) lhs += std::abs(h[x]);
    EXPECT_NEAR(r.lhs, lhs, 1e-12 * std::max(1.0, lhs));
    EXPECT_TRUE(r.holds) << "trial " << t;
    EXPECT_LE(r.lhs, r.rhs * (1 + 1e-9));
  }
}

TEST(Concentration, EqualityOnCosetPair) {
  // h = indicator of a subgroup H, S = its annihilator, E = H: both sides equal |H|.
  const GroupParams p(12, 1);
  const auto h_set = make_cyclic_subgroup(p, p.point({3}));
  const auto r = concentration_check(indicator(h_set), h_set, annihilator(h_set));
  EXPECT_NEAR(r.lhs, 4.0, 1e-12);
  EXPECT_NEAR(r.rhs, 4.0, 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(Concentration, RejectsSpectrumOutsideS) {
  const GroupParams p(5, 1);
  const Signal h(p, {1.0, 0.0, 0.0, 0.0, 0.0});
  EXPECT_THROW(concentration_check(h, full_group(p), SupportSet::from_indices(p, {0})), ParameterError);
}
