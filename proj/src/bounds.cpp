#include "aeup/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "aeup/error.hpp"

namespace aeup {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::classical: return "classical";
    case BoundKind::additive: return "additive";
    case BoundKind::refined: return "refined";
  }
  return "unknown";
}

std::string to_string(BoundSide s) { return s == BoundSide::E ? "E" : "Sigma"; }

std::string to_string(BoundStatus s) {
  return s == BoundStatus::applicable ? "applicable" : "vacuous";
}

std::string to_string(RecoveryVariant v) {
  return v == RecoveryVariant::as_stated ? "as-stated" : "proof-final";
}

namespace {

using Real = long double;

Real cube(Real x) { return x * x * x; }

// rhs >= lhs (1 - tol), compared on cubes.
bool cube_satisfied(Real lhs, Real rhs_cubed) {
  return rhs_cubed >= cube(lhs * (1.0L - kBoundRelTol));
}

Real correction_unchecked(Real e, Real s, Real e_energy, Real n) {
  const Real r = n / (e * s);
  return s * s * (1.0L - r) +
         s * (s - 1.0L) * (1.0L - std::sqrt(r) * std::sqrt(e_energy / cube(e)));
}

// N^d <= size * (energy - correction)^{1/3}.
UncertaintyCertificate refined_side(BoundSide side, Count size, Count energy, Real correction,
                                    const BoundInputs& in, Real n) {
  UncertaintyCertificate c;
  c.kind = BoundKind::refined;
  c.side = side;
  c.lhs = static_cast<Count>(n);
  c.inputs = in;
  c.correction = static_cast<double>(correction);
  const Real size_r = static_cast<Real>(size);
  const Real additive = size_r * std::cbrt(static_cast<Real>(energy));
  c.additive_rhs = static_cast<double>(additive);
  const Real arg = static_cast<Real>(energy) - correction;
  if (arg < 0.0L) {
    c.status = BoundStatus::vacuous;
    c.rhs = 0.0;
    c.satisfied = false;
    c.slack = -static_cast<double>(n);
    c.improves_on_additive = false;
    return c;
  }
  const Real rhs = size_r * std::cbrt(arg);
  c.rhs = static_cast<double>(rhs);
  c.satisfied = cube_satisfied(n, cube(size_r) * arg);
  c.slack = static_cast<double>(rhs - n);
  c.improves_on_additive = rhs <= additive;
  return c;
}

}  // namespace

UncertaintyCertificate classical_bound(Count e_size, Count s_size, const GroupParams& params) {
  if (e_size < 1 || s_size < 1) throw ParameterError("classical_bound: sizes must be >= 1");
  const auto n = static_cast<unsigned __int128>(params.size());
  const auto product = static_cast<unsigned __int128>(e_size) * s_size;
  UncertaintyCertificate c;
  c.kind = BoundKind::classical;
  c.lhs = params.size();
  c.rhs = static_cast<double>(product);
  c.inputs = BoundInputs{e_size, s_size, std::nullopt, std::nullopt};
  c.satisfied = n <= product;
  c.slack = static_cast<double>(static_cast<Real>(product) - static_cast<Real>(n));
  c.recovery_certified = 2 * product < n;
  return c;
}

UncertaintyCertificate additive_bound(Count size, Count energy, const GroupParams& params,
                                      BoundSide side) {
  if (size < 1) throw ParameterError("additive_bound: size must be >= 1");
  if (energy < 1) throw ParameterError("additive_bound: energy must be >= 1");
  const Real n = static_cast<Real>(params.size());
  const Real size_r = static_cast<Real>(size);
  const Real energy_r = static_cast<Real>(energy);
  UncertaintyCertificate c;
  c.kind = BoundKind::additive;
  c.side = side;
  c.lhs = params.size();
  const Real rhs = size_r * std::cbrt(energy_r);
  c.rhs = static_cast<double>(rhs);
  if (side == BoundSide::E) {
    c.inputs = BoundInputs{size, 0, std::nullopt, energy};
  } else {
    c.inputs = BoundInputs{0, size, energy, std::nullopt};
  }
  c.satisfied = cube_satisfied(n, cube(size_r) * energy_r);
  c.slack = static_cast<double>(rhs - n);
  return c;
}

double correction_term(Count e_size, Count sigma_size, Count e_energy, const GroupParams& params) {
  if (e_size < 1 || sigma_size < 1) throw ParameterError("correction_term: sizes must be >= 1");
  const auto product = static_cast<unsigned __int128>(e_size) * sigma_size;
  if (product < params.size()) {
    throw DomainError("correction_term: |E||Sigma| < N^d is not a realizable support pair");
  }
  return static_cast<double>(correction_unchecked(static_cast<Real>(e_size),
                                                  static_cast<Real>(sigma_size),
                                                  static_cast<Real>(e_energy),
                                                  static_cast<Real>(params.size())));
}

RefinedPair refined_bound(const BoundInputs& in, const GroupParams& params) {
  if (in.e_size < 1 || in.sigma_size < 1) throw ParameterError("refined_bound: empty support");
  if (!in.e_energy || !in.sigma_energy) throw ParameterError("refined_bound: energies required");
  const Real n = static_cast<Real>(params.size());
  const Real e = static_cast<Real>(in.e_size);
  const Real s = static_cast<Real>(in.sigma_size);
  const Real c_e_sigma = correction_unchecked(e, s, static_cast<Real>(*in.e_energy), n);
  const Real c_sigma_e = correction_unchecked(s, e, static_cast<Real>(*in.sigma_energy), n);
  return RefinedPair{
      refined_side(BoundSide::E, in.e_size, *in.sigma_energy, c_e_sigma, in, n),
      refined_side(BoundSide::Sigma, in.sigma_size, *in.e_energy, c_sigma_e, in, n),
  };
}

RefinedPair refined_bound(const SupportSet& e, const SupportSet& sigma) {
  if (!(e.params() == sigma.params())) throw ParameterError("refined_bound: mismatched groups");
  BoundInputs in{e.size(), sigma.size(), energy_representation(e), energy_representation(sigma)};
  return refined_bound(in, e.params());
}

RecoveryCertificate recovery_condition(const RecoveryInputs& in, const GroupParams& params,
                                       RecoveryVariant variant) {
  if (!(in.K >= 0.0)) throw ParameterError("recovery_condition: K must be >= 0");
  if (!(in.alpha >= 2.0 && in.alpha <= 3.0)) {
    throw ParameterError("recovery_condition: alpha must lie in [2, 3]");
  }
  if (in.e_size < 1) throw ParameterError("recovery_condition: |E| must be >= 1");
  const Real n = static_cast<Real>(params.size());
  RecoveryCertificate c;
  c.inputs = in;
  c.variant = variant;
  c.rhs = static_cast<double>(cube(n) / 8.0L);
  if (in.s_size == 0) {
    c.lhs_as_stated = 0.0;
    c.lhs_proof_final = 0.0;
  } else {
    const Real e = static_cast<Real>(in.e_size);
    const Real s = static_cast<Real>(in.s_size);
    const Real energy = static_cast<Real>(in.s_energy);
    const Real rho = n / (2.0L * e * s);
    const Real growth = std::sqrt(static_cast<Real>(in.K) /
                                  std::pow(2.0L * e, 3.0L - static_cast<Real>(in.alpha)));
    const Real bracket = 1.0L - growth * std::sqrt(rho);
    const Real e3 = cube(e);
    c.lhs_proof_final = static_cast<double>(e3 * (energy - s * (s - 1.0L) * bracket - s * s * (1.0L - rho)));
    c.lhs_as_stated =
        static_cast<double>(e3 * (energy - e3 * s * (s - 1.0L) * bracket - e3 * s * s * (1.0L - rho)));
  }
  c.certifies_as_stated = c.lhs_as_stated < c.rhs;
  c.certifies_proof_final = c.lhs_proof_final < c.rhs;
  c.lhs = variant == RecoveryVariant::as_stated ? c.lhs_as_stated : c.lhs_proof_final;
  c.certifies = variant == RecoveryVariant::as_stated ? c.certifies_as_stated : c.certifies_proof_final;
  return c;
}

RecoveryCertificate recovery_condition(Count e_size, const SupportSet& s, double K, double alpha,
                                       RecoveryVariant variant) {
  RecoveryInputs in{e_size, s.size(), s.empty() ? 0 : energy_representation(s), K, alpha};
  return recovery_condition(in, s.params(), variant);
}

std::vector<ComparisonRow> bound_comparison_table(const std::vector<BoundScenario>& scenarios) {
  std::vector<ComparisonRow> rows;
  rows.reserve(scenarios.size());
  for (const auto& sc : scenarios) {
    if (sc.e.empty() || sc.sigma.empty()) {
      throw ParameterError("bound_comparison_table: scenario '" + sc.label + "' has an empty set");
    }
    const auto& p = sc.e.params();
    ComparisonRow row;
    row.label = sc.label;
    row.lhs = p.size();
    row.inputs = BoundInputs{sc.e.size(), sc.sigma.size(), energy_representation(sc.e),
                             energy_representation(sc.sigma)};
    const auto cls = classical_bound(row.inputs.e_size, row.inputs.sigma_size, p);
    const auto add_e = additive_bound(row.inputs.e_size, *row.inputs.sigma_energy, p, BoundSide::E);
    const auto add_s = additive_bound(row.inputs.sigma_size, *row.inputs.e_energy, p, BoundSide::Sigma);
    const auto ref = refined_bound(row.inputs, p);
    row.classical_rhs = cls.rhs;
    row.additive_rhs_e = add_e.rhs;
    row.additive_rhs_sigma = add_s.rhs;
    row.refined_rhs_e = ref.e_side.rhs;
    row.refined_rhs_sigma = ref.sigma_side.rhs;
    row.correction_e = ref.e_side.correction;
    row.correction_sigma = ref.sigma_side.correction;
    row.refined_status_e = ref.e_side.status;
    row.refined_status_sigma = ref.sigma_side.status;

    std::vector<std::pair<std::string, double>> candidates{
        {"classical", cls.rhs}, {"additive-E", add_e.rhs}, {"additive-Sigma", add_s.rhs}};
    if (ref.e_side.status == BoundStatus::applicable) candidates.emplace_back("refined-E", ref.e_side.rhs);
    if (ref.sigma_side.status == BoundStatus::applicable) {
      candidates.emplace_back("refined-Sigma", ref.sigma_side.rhs);
    }
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    const double tol = kBoundRelTol * static_cast<double>(row.lhs);
    const auto ties = std::count_if(candidates.begin(), candidates.end(),
                                    [&](const auto& c) { return c.second - best->second <= tol; });
    row.sharpest = ties > 1 ? "tie" : best->first;
    row.min_slack = best->second - static_cast<double>(row.lhs);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string certificates_csv(const std::vector<UncertaintyCertificate>& certs) {
  std::ostringstream out;
  out << "kind,lhs,rhs,correction,slack,satisfied\n";
  for (const auto& c : certs) {
    out << to_string(c.kind) << ',' << c.lhs << ',' << fmt12(c.rhs) << ',' << fmt12(c.correction)
        << ',' << fmt12(c.slack) << ',' << (c.satisfied ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "label,lhs,e_size,sigma_size,e_energy,sigma_energy,classical_rhs,additive_rhs_e,"
         "additive_rhs_sigma,refined_rhs_e,refined_rhs_sigma,correction_e,correction_sigma,"
         "min_slack,sharpest\n";
  for (const auto& r : rows) {
    out << r.label << ',' << r.lhs << ',' << r.inputs.e_size << ',' << r.inputs.sigma_size << ','
        << r.inputs.e_energy.value_or(0) << ',' << r.inputs.sigma_energy.value_or(0) << ','
        << fmt12(r.classical_rhs) << ',' << fmt12(r.additive_rhs_e) << ','
        << fmt12(r.additive_rhs_sigma) << ',' << fmt12(r.refined_rhs_e) << ','
        << fmt12(r.refined_rhs_sigma) << ',' << fmt12(r.correction_e) << ','
        << fmt12(r.correction_sigma) << ',' << fmt12(r.min_slack) << ',' << r.sharpest << '\n';
  }
  return out.str();
}

}  // namespace aeup
