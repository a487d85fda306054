#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aeup/energy.hpp"
#include "aeup/lattice.hpp"

namespace aeup {

enum class BoundKind { classical, additive, refined };

// Which support carries the size factor: `E` means N^d <= |E| (...)^{1/3}
// built from the energy of Sigma, `Sigma` the mirrored form.
enum class BoundSide { E, Sigma };

enum class BoundStatus { applicable, vacuous };

std::string to_string(BoundKind k);
std::string to_string(BoundSide s);
std::string to_string(BoundStatus s);

struct BoundInputs {
  Count e_size = 0;
  Count sigma_size = 0;
  std::optional<Count> e_energy;
  std::optional<Count> sigma_energy;
};

// Evaluated sides of N^d <= rhs. `satisfied` applies the tolerance
// lhs <= rhs + 1e-9 lhs, decided on cubes where a cube root is involved.
struct UncertaintyCertificate {
  BoundKind kind = BoundKind::classical;
  BoundSide side = BoundSide::E;
  Count lhs = 0;
  double rhs = 0.0;
  double correction = 0.0;
  BoundInputs inputs;
  bool satisfied = false;
  double slack = 0.0;
  BoundStatus status = BoundStatus::applicable;
  // Classical kind only: |E| |S| < N^d / 2.
  std::optional<bool> recovery_certified;
  // Refined kind only: the matching additive rhs and whether refined <= additive.
  std::optional<double> additive_rhs;
  std::optional<bool> improves_on_additive;
};

inline constexpr double kBoundRelTol = 1e-9;

UncertaintyCertificate classical_bound(Count e_size, Count s_size, const GroupParams& params);

// N^d <= size * energy^{1/3}. Pass (|E|, Lambda_2(Sigma)) for the E side
// and (|Sigma|, Lambda_2(E)) for the Sigma side.
UncertaintyCertificate additive_bound(Count size, Count energy, const GroupParams& params,
                                      BoundSide side = BoundSide::E);

// C(E, Sigma) = |S|^2 (1 - r) + |S| (|S| - 1) (1 - sqrt(r) sqrt(Lambda_2(E) / |E|^3)),
// with r = N^d / (|E| |S|). Throws DomainError when |E| |Sigma| < N^d.
double correction_term(Count e_size, Count sigma_size, Count e_energy, const GroupParams& params);

struct RefinedPair {
  UncertaintyCertificate e_side;
  UncertaintyCertificate sigma_side;
};

RefinedPair refined_bound(const SupportSet& e, const SupportSet& sigma);
// Same evaluation from precomputed sizes and energies.
RefinedPair refined_bound(const BoundInputs& in, const GroupParams& params);

enum class RecoveryVariant { as_stated, proof_final };

std::string to_string(RecoveryVariant v);

struct RecoveryInputs {
  Count e_size = 0;
  Count s_size = 0;
  Count s_energy = 0;
  double K = 1.0;
  double alpha = 3.0;
};

// Energy-based recovery condition lhs < N^{3d} / 8 in both readings.
struct RecoveryCertificate {
  double lhs = 0.0;  // lhs of the selected variant
  double rhs = 0.0;  // N^{3d} / 8
  double lhs_as_stated = 0.0;
  double lhs_proof_final = 0.0;
  RecoveryInputs inputs;
  RecoveryVariant variant = RecoveryVariant::proof_final;
  bool certifies = false;
  bool certifies_as_stated = false;
  bool certifies_proof_final = false;
};

RecoveryCertificate recovery_condition(Count e_size, const SupportSet& s, double K, double alpha,
                                       RecoveryVariant variant = RecoveryVariant::proof_final);
RecoveryCertificate recovery_condition(const RecoveryInputs& in, const GroupParams& params,
                                       RecoveryVariant variant = RecoveryVariant::proof_final);

struct BoundScenario {
  std::string label;
  SupportSet e;
  SupportSet sigma;
};

struct ComparisonRow {
  std::string label;
  Count lhs = 0;
  BoundInputs inputs;
  double classical_rhs = 0.0;
  double additive_rhs_e = 0.0;
  double additive_rhs_sigma = 0.0;
  double refined_rhs_e = 0.0;
  double refined_rhs_sigma = 0.0;
  double correction_e = 0.0;
  double correction_sigma = 0.0;
  BoundStatus refined_status_e = BoundStatus::applicable;
  BoundStatus refined_status_sigma = BoundStatus::applicable;
  double min_slack = 0.0;
  // Name of the smallest applicable rhs, or "tie" when several agree within tolerance.
  std::string sharpest;
};

std::vector<ComparisonRow> bound_comparison_table(const std::vector<BoundScenario>& scenarios);

// CSV with columns kind,lhs,rhs,correction,slack,satisfied.
std::string certificates_csv(const std::vector<UncertaintyCertificate>& certs);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace aeup
