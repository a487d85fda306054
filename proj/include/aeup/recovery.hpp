#pragma once

#include <string>
#include <vector>

#include "aeup/lattice.hpp"
#include "aeup/spectral.hpp"

namespace aeup {

// Observed spectrum on the complement of `missing`. `spectrum` is a dense
// frequency-side signal whose entries on `missing` are ignored (stored as 0).
struct RecoveryProblem {
  Signal spectrum;
  SupportSet missing;

  RecoveryProblem(Signal observed_spectrum, SupportSet missing_frequencies);

  // Observes dft(f) under f's convention everywhere outside `missing`.
  static RecoveryProblem from_signal(const Signal& f, const SupportSet& missing);

  const GroupParams& params() const { return spectrum.params; }
  const Convention& convention() const { return spectrum.convention; }
  bool observed(std::uint64_t m) const { return !missing.contains_index(m); }
};

struct SolverConfig {
  double feas_tol = 1e-8;
  double obj_tol = 1e-8;
  int max_iter = 50000;
};

enum class SolveStatus { converged, max_iter, infeasible };

std::string to_string(SolveStatus s);

struct RecoverySolution {
  Signal signal;
  double objective = 0.0;             // ||g||_1
  double feasibility_residual = 0.0;  // max over observed m of |g^(m) - observed(m)|
  int iterations = 0;
  SolveStatus status = SolveStatus::converged;
  // l1 only: 1 - max |dual| off the support; small margins flag near-ties.
  double dual_margin = 0.0;
  bool near_degenerate = false;
  // l1 only: final iterate replaced by the exact fit on its active set.
  bool polished = false;
  std::string diagnostic;
};

// Max over observed frequencies of |g^(m) - observed(m)| in the problem's convention.
double feasibility_residual(const RecoveryProblem& problem, const Signal& g);

// Minimum-l1 signal consistent with the observed spectrum, by Douglas-Rachford
// splitting between complex soft-thresholding and the exact affine projection.
RecoverySolution l1_recover(const RecoveryProblem& problem, const SolverConfig& cfg = {});

// ||base + s * direction||_1 for every step s. `direction` must have a
// spectrum vanishing on every observed frequency.
std::vector<double> l1_objective_profile(const RecoveryProblem& problem, const Signal& base,
                                         const Signal& direction, const std::vector<Complex>& steps);

// Least-squares fit of the observed equations with g restricted to `support`.
RecoverySolution least_squares_recover(const RecoveryProblem& problem, const SupportSet& support);

// 2 |E| |S| < N^d.
bool uniqueness_check(Count e_size, const SupportSet& s, const GroupParams& params);

struct ConcentrationResult {
  double lhs = 0.0;  // ||h||_{L1(E)}
  double rhs = 0.0;  // |E| |S| / N^d * ||h||_1
  bool holds = false;
};

// Requires supp(h^) within S (relative threshold 1e-9); throws ParameterError otherwise.
ConcentrationResult concentration_check(const Signal& h, const SupportSet& e, const SupportSet& s);

}  // namespace aeup
