#include "aeup/recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "aeup/error.hpp"

namespace aeup {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iter: return "max-iter";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

RecoveryProblem::RecoveryProblem(Signal observed_spectrum, SupportSet missing_frequencies)
    : spectrum(std::move(observed_spectrum)), missing(std::move(missing_frequencies)) {
  if (!(spectrum.params == missing.params())) {
    throw ParameterError("recovery problem: spectrum and missing set live in different groups");
  }
  spectrum.params.require_dense("recovery problem");
  spectrum.domain = Domain::frequency;
  for (auto m : missing.indices()) spectrum[m] = 0.0;
}

RecoveryProblem RecoveryProblem::from_signal(const Signal& f, const SupportSet& missing) {
  return RecoveryProblem(dft(f), missing);
}

double feasibility_residual(const RecoveryProblem& problem, const Signal& g) {
  Signal t = g;
  t.convention = problem.convention();
  t.domain = Domain::time;
  const auto spec = dft(t);
  double worst = 0.0;
  for (std::uint64_t m = 0; m < spec.values.size(); ++m) {
    if (problem.observed(m)) worst = std::max(worst, std::abs(spec[m] - problem.spectrum[m]));
  }
  return worst;
}

namespace {

Complex soft_threshold(Complex z, double t) {
  const double a = std::abs(z);
  return a <= t ? Complex{} : z * ((a - t) / a);
}

// Affine set {g : unitary g^ equals `target` wherever `keep` is set}.
class FrequencyProjector {
 public:
  FrequencyProjector(const GroupParams& p, std::vector<Complex> target, std::vector<char> keep)
      : params_(p), target_(std::move(target)), keep_(std::move(keep)) {}

  std::vector<Complex> operator()(const std::vector<Complex>& g) const {
    auto spec = dft(Signal(params_, g, Convention::unitary()));
    for (std::size_t m = 0; m < keep_.size(); ++m) {
      if (keep_[m]) spec[m] = target_[m];
    }
    return idft(spec).values;
  }

 private:
  GroupParams params_;
  std::vector<Complex> target_;
  std::vector<char> keep_;
};

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

RecoverySolution finish(const RecoveryProblem& problem, std::vector<Complex> g) {
  RecoverySolution sol{Signal(problem.params(), std::move(g), problem.convention(), Domain::time), 0.0, 0.0, 0, SolveStatus::converged, 0.0, false, false, {}};
  sol.objective = sol.signal.l1_norm();
  sol.feasibility_residual = feasibility_residual(problem, sol.signal);
  return sol;
}

}  // namespace

RecoverySolution l1_recover(const RecoveryProblem& problem, const SolverConfig& cfg) {
  const auto& p = problem.params();
  const std::size_t n = p.size();

  // Work in the unitary/minus-forward convention, where overwriting observed
  // coefficients is the Euclidean projection onto the feasible set.
  const auto unitary = convert_convention(problem.spectrum, Convention::unitary());
  const bool flipped = problem.convention().exponent_sign != ExponentSign::minus_forward;
  std::vector<char> keep(n, 1);
  std::vector<Complex> target = unitary.values;
  for (auto m : problem.missing.indices()) {
    const auto um = flipped ? p.negate_index(m) : m;
    keep[um] = 0;
    target[um] = 0.0;
  }

  Signal start = idft(Signal(p, target, Convention::unitary(), Domain::frequency));
  if (problem.missing.empty()) {
    auto sol = finish(problem, std::move(start.values));
    sol.iterations = 1;
    sol.dual_margin = 1.0;
    sol.status = sol.feasibility_residual <= cfg.feas_tol ? SolveStatus::converged : SolveStatus::infeasible;
    return sol;
  }

  const double scale = max_abs(start.values);
  if (scale == 0.0) {
    auto sol = finish(problem, std::vector<Complex>(n));
    sol.iterations = 0;
    sol.dual_margin = 1.0;
    return sol;
  }

  const FrequencyProjector project(p, std::move(target), std::move(keep));
  const double gamma = 0.1 * scale;
  std::vector<Complex> z = std::move(start.values);
  std::vector<Complex> x(n), reflect(n), y(n);
  int iter = 0;
  bool stopped = false;
  while (iter < cfg.max_iter) {
    ++iter;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = soft_threshold(z[i], gamma);
      reflect[i] = 2.0 * x[i] - z[i];
    }
    y = project(reflect);
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] += y[i] - x[i];
      gap = std::max(gap, std::abs(y[i] - x[i]));
    }
    if (gap <= cfg.obj_tol * std::max(1.0, max_abs(y))) {
      stopped = true;
      break;
    }
  }

  // (z - x) / gamma is a subgradient of ||.||_1 at x.
  double off_support = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == Complex{}) off_support = std::max(off_support, std::abs(z[i] - x[i]) / gamma);
  }

  // Entries below 1e-6 of the peak are treated as converging to zero.
  std::vector<std::uint64_t> active;
  const double floor = 1e-6 * max_abs(x);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(x[i]) > floor) active.push_back(i);
  }

  auto sol = finish(problem, std::move(y));
  sol.iterations = iter;
  // Polish: refit exactly on the active set, kept only if it stays feasible
  // and does not raise the objective.
  if (stopped && !active.empty()) {
    auto refit = least_squares_recover(problem, SupportSet::from_indices(p, std::move(active)));
    if (refit.status == SolveStatus::converged &&
        refit.objective <= sol.objective + cfg.obj_tol * std::max(1.0, sol.objective)) {
      sol.signal = std::move(refit.signal);
      sol.objective = refit.objective;
      sol.feasibility_residual = refit.feasibility_residual;
      sol.polished = true;
    }
  }
  sol.dual_margin = 1.0 - off_support;
  sol.near_degenerate = sol.dual_margin < 10.0 * cfg.obj_tol;
  if (stopped && sol.feasibility_residual <= cfg.feas_tol) {
    sol.status = SolveStatus::converged;
  } else {
    sol.status = SolveStatus::max_iter;
    sol.diagnostic = stopped ? "fixed point reached but feasibility tolerance missed"
                             : "iteration limit reached";
  }
  if (sol.near_degenerate) sol.diagnostic = "near-degenerate objective: dual certificate is tight off the support";
  return sol;
}

std::vector<double> l1_objective_profile(const RecoveryProblem& problem, const Signal& base,
                                         const Signal& direction, const std::vector<Complex>& steps) {
  if (!(base.params == problem.params()) || !(direction.params == problem.params())) {
    throw ParameterError("l1_objective_profile: mismatched groups");
  }
  const double base_tol = 1e-8 * std::max(1.0, problem.spectrum.max_abs());
  if (feasibility_residual(problem, base) > base_tol) {
    throw ParameterError("l1_objective_profile: base signal is not feasible");
  }
  Signal dir = direction;
  dir.convention = problem.convention();
  dir.domain = Domain::time;
  const auto dir_spec = dft(dir);
  const double dir_tol = 1e-10 * std::max(1.0, direction.max_abs());
  for (std::uint64_t m = 0; m < dir_spec.values.size(); ++m) {
    if (problem.observed(m) && std::abs(dir_spec[m]) > dir_tol) {
      throw ParameterError("l1_objective_profile: direction is not in the feasible null space");
    }
  }
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& s : steps) {
    double total = 0.0;
    for (std::size_t i = 0; i < base.values.size(); ++i) total += std::abs(base[i] + s * direction[i]);
    out.push_back(total);
  }
  return out;
}

RecoverySolution least_squares_recover(const RecoveryProblem& problem, const SupportSet& support) {
  const auto& p = problem.params();
  if (!(support.params() == p)) throw ParameterError("least_squares_recover: mismatched groups");
  const std::size_t n = p.size();
  std::vector<std::uint64_t> rows;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (problem.observed(m)) rows.push_back(m);
  }
  const auto cols = support.indices();

  if (cols.size() > rows.size()) {
    auto sol = finish(problem, std::vector<Complex>(n));
    sol.status = SolveStatus::infeasible;
    sol.diagnostic = "underdetermined: support larger than the number of observed frequencies";
    return sol;
  }

  const double nd = static_cast<double>(n);
  const double amp = problem.convention().normalization == Normalization::unitary ? 1.0 / std::sqrt(nd) : 1.0;
  const double sign = problem.convention().exponent_sign == ExponentSign::minus_forward ? -1.0 : 1.0;
  const double modulus = static_cast<double>(p.modulus());

  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  Eigen::VectorXcd b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    b(static_cast<Eigen::Index>(r)) = problem.spectrum[rows[r]];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const double t = static_cast<double>(p.dot_index(rows[r], cols[c]));
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          std::polar(amp, sign * 2.0 * M_PI * t / modulus);
    }
  }

  std::vector<Complex> g(n);
  if (!cols.empty()) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
    qr.setThreshold(1e-10);
    if (qr.rank() < static_cast<Eigen::Index>(cols.size())) {
      auto sol = finish(problem, std::vector<Complex>(n));
      sol.status = SolveStatus::infeasible;
      sol.diagnostic = "rank-deficient system: solution on the given support is not unique";
      return sol;
    }
    const Eigen::VectorXcd x = qr.solve(b);
    for (std::size_t c = 0; c < cols.size(); ++c) g[cols[c]] = x(static_cast<Eigen::Index>(c));
  }

  auto sol = finish(problem, std::move(g));
  sol.iterations = 1;
  const double tol = 1e-8 * std::max(1.0, problem.spectrum.max_abs());
  if (sol.feasibility_residual <= tol) {
    sol.status = SolveStatus::converged;
  } else {
    sol.status = SolveStatus::infeasible;
    sol.diagnostic = "inconsistent system: no signal on the given support matches the observations";
  }
  return sol;
}

bool uniqueness_check(Count e_size, const SupportSet& s, const GroupParams& params) {
  const auto lhs = 2 * static_cast<unsigned __int128>(e_size) * s.size();
  return lhs < params.size();
}

ConcentrationResult concentration_check(const Signal& h, const SupportSet& e, const SupportSet& s) {
  if (!(h.params == e.params()) || !(h.params == s.params())) {
    throw ParameterError("concentration_check: mismatched groups");
  }
  Signal t = h;
  t.domain = Domain::time;
  const auto spec = dft(t);
  const double tol = 1e-9 * spec.max_abs();
  for (std::uint64_t m = 0; m < spec.values.size(); ++m) {
    if (!s.contains_index(m) && std::abs(spec[m]) > tol) {
      throw ParameterError("concentration_check: spectrum of h is not supported in S");
    }
  }
  ConcentrationResult r;
  for (auto x : e.indices()) r.lhs += std::abs(h[x]);
  r.rhs = static_cast<double>(e.size()) * static_cast<double>(s.size()) /
          static_cast<double>(h.params.size()) * h.l1_norm();
  r.holds = r.lhs <= r.rhs + 1e-9 * r.rhs;
  return r;
}

}  // namespace aeup
