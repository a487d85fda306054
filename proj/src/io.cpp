#include "aeup/io.hpp"

#include <fstream>
#include <sstream>

#include "aeup/error.hpp"

namespace aeup {

namespace {

GroupParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("d")) {
    throw FormatError("expected an object with integer fields \"N\" and \"d\"");
  }
  if (!j["N"].is_number_integer() || !j["d"].is_number_integer()) {
    throw FormatError("\"N\" and \"d\" must be integers");
  }
  return GroupParams(j["N"].get<std::int64_t>(), j["d"].get<int>());
}

RingVector point_from_json(const Json& j, const GroupParams& p) {
  std::vector<std::int64_t> c;
  if (j.is_number_integer() && p.dimension() == 1) {
    c.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw FormatError("point coordinates must be integers");
      c.push_back(x.get<std::int64_t>());
    }
  } else {
    throw FormatError("point must be an array of integers");
  }
  if (c.size() != static_cast<std::size_t>(p.dimension())) {
    throw FormatError("point has " + std::to_string(c.size()) + " coordinates, expected " +
                      std::to_string(p.dimension()));
  }
  for (auto x : c) {
    if (x < 0 || x >= p.modulus()) {
      throw ParameterError("coordinate " + std::to_string(x) + " is outside [0, N)");
    }
  }
  return RingVector(std::move(c));
}

SupportSet points_from_json(const Json& pts, const GroupParams& p, const char* what) {
  if (!pts.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<RingVector> v;
  v.reserve(pts.size());
  for (const auto& x : pts) v.push_back(point_from_json(x, p));
  SupportSet s(p, v);
  if (s.size() != v.size()) throw FormatError(std::string(what) + " contains duplicate points");
  return s;
}

Json points_to_json(const SupportSet& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto pt = s.point(i);
    out.push_back(std::vector<std::int64_t>(pt.coords().begin(), pt.coords().end()));
  }
  return out;
}

Json complex_vector_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError("signal value must be a number or [re, im]");
}

Domain domain_from_json(const Json& j) {
  if (!j.contains("domain")) return Domain::time;
  const auto s = j["domain"].get<std::string>();
  if (s == "time") return Domain::time;
  if (s == "frequency") return Domain::frequency;
  throw FormatError("unknown domain \"" + s + "\"");
}

std::string to_string(GrowthMode m) {
  switch (m) {
    case GrowthMode::trivial: return "trivial";
    case GrowthMode::exhaustive: return "exhaustive";
    case GrowthMode::sampled: return "sampled";
  }
  return "trivial";
}

Json inputs_to_json(const BoundInputs& in) {
  Json j{{"e_size", in.e_size}, {"sigma_size", in.sigma_size}};
  j["e_energy"] = in.e_energy ? Json(*in.e_energy) : Json(nullptr);
  j["sigma_energy"] = in.sigma_energy ? Json(*in.sigma_energy) : Json(nullptr);
  return j;
}

}  // namespace

SupportSet set_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_object()) {
    return points_from_json(j[1], params_from_json(j[0]), "points");
  }
  const auto p = params_from_json(j);
  if (!j.contains("points")) throw FormatError("set file needs a \"points\" array");
  return points_from_json(j["points"], p, "points");
}

Json set_to_json(const SupportSet& s) {
  return {{"N", s.params().modulus()}, {"d", s.params().dimension()}, {"points", points_to_json(s)}};
}

Convention convention_from_json(const Json& j) {
  Convention c;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "unitary") return c;
    if (s == "analyst") return {Normalization::analyst, ExponentSign::minus_forward};
    if (s == "analyst-plus") return Convention::analyst_plus();
    throw FormatError("unknown convention \"" + s + "\"");
  }
  if (!j.is_object()) throw FormatError("convention must be a string or an object");
  if (j.contains("normalization")) {
    const auto n = j["normalization"].get<std::string>();
    if (n == "unitary") c.normalization = Normalization::unitary;
    else if (n == "analyst") c.normalization = Normalization::analyst;
    else throw FormatError("unknown normalization \"" + n + "\"");
  }
  if (j.contains("exponent_sign")) {
    const auto s = j["exponent_sign"].get<std::string>();
    if (s == "minus-forward") c.exponent_sign = ExponentSign::minus_forward;
    else if (s == "plus-forward") c.exponent_sign = ExponentSign::plus_forward;
    else throw FormatError("unknown exponent_sign \"" + s + "\"");
  }
  return c;
}

Json convention_to_json(const Convention& c) {
  return {{"normalization", to_string(c.normalization)}, {"exponent_sign", to_string(c.exponent_sign)}};
}

Signal signal_from_json(const Json& j) {
  const auto p = params_from_json(j);
  p.require_dense("signal file");
  if (!j.contains("values") || !j["values"].is_array()) {
    throw FormatError("signal file needs a \"values\" array");
  }
  const auto& vals = j["values"];
  if (vals.size() != p.size()) {
    throw FormatError("signal has " + std::to_string(vals.size()) + " values, expected N^d = " +
                      std::to_string(p.size()));
  }
  std::vector<Complex> v;
  v.reserve(vals.size());
  for (const auto& x : vals) v.push_back(complex_from_json(x));
  const Convention c = j.contains("convention") ? convention_from_json(j["convention"]) : Convention{};
  return Signal(p, std::move(v), c, domain_from_json(j));
}

Json signal_to_json(const Signal& f) {
  return {{"N", f.params.modulus()},
          {"d", f.params.dimension()},
          {"convention", convention_to_json(f.convention)},
          {"domain", f.domain == Domain::time ? "time" : "frequency"},
          {"values", complex_vector_to_json(f.values)}};
}

RecoveryProblem problem_from_json(const Json& j) {
  Signal f = signal_from_json(j);
  if (!j.contains("missing")) throw FormatError("problem file needs a \"missing\" array");
  SupportSet missing = points_from_json(j["missing"], f.params, "missing");
  if (f.domain == Domain::frequency) return RecoveryProblem(std::move(f), std::move(missing));
  return RecoveryProblem::from_signal(f, missing);
}

Json problem_to_json(const RecoveryProblem& p) {
  Json j = signal_to_json(p.spectrum);
  j["missing"] = points_to_json(p.missing);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

std::string to_string(EnergyMethod m) {
  switch (m) {
    case EnergyMethod::quadruple: return "quadruple";
    case EnergyMethod::representation: return "representation";
    case EnergyMethod::fourier_check: return "fourier-check";
  }
  return "representation";
}

EnergyMethod energy_method_from_string(const std::string& s) {
  if (s == "quadruple") return EnergyMethod::quadruple;
  if (s == "representation") return EnergyMethod::representation;
  if (s == "fourier-check" || s == "fourier") return EnergyMethod::fourier_check;
  throw ParameterError("unknown energy method \"" + s + "\"");
}

void to_json(Json& j, const EnergyCertificate& c) {
  j = {{"set_size", c.set_size},
       {"energy", c.energy},
       {"normalized_numerator", c.normalized_numerator},
       {"normalized_denominator", c.normalized_denominator},
       {"normalized_energy", c.normalized_energy},
       {"method", to_string(c.method)}};
  j["fourier_value"] = c.fourier_value ? Json(*c.fourier_value) : Json(nullptr);
}

void to_json(Json& j, const GrowthCertificate& c) {
  j = {{"K", c.K},
       {"alpha", c.alpha},
       {"mode", to_string(c.mode)},
       {"certifying", c.certifying},
       {"size_cap", c.size_cap},
       {"per_size_max", c.per_size_max},
       {"subsets_examined", c.subsets_examined}};
}

void to_json(Json& j, const UncertaintyCertificate& c) {
  j = {{"kind", to_string(c.kind)},
       {"side", to_string(c.side)},
       {"lhs", c.lhs},
       {"rhs", c.rhs},
       {"correction", c.correction},
       {"inputs", inputs_to_json(c.inputs)},
       {"satisfied", c.satisfied},
       {"slack", c.slack},
       {"status", to_string(c.status)}};
  if (c.recovery_certified) j["recovery_certified"] = *c.recovery_certified;
  if (c.additive_rhs) j["additive_rhs"] = *c.additive_rhs;
  if (c.improves_on_additive) j["improves_on_additive"] = *c.improves_on_additive;
}

void to_json(Json& j, const RecoveryCertificate& c) {
  j = {{"variant", to_string(c.variant)},
       {"lhs", c.lhs},
       {"rhs", c.rhs},
       {"certifies", c.certifies},
       {"lhs_as_stated", c.lhs_as_stated},
       {"certifies_as_stated", c.certifies_as_stated},
       {"lhs_proof_final", c.lhs_proof_final},
       {"certifies_proof_final", c.certifies_proof_final},
       {"inputs",
        {{"e_size", c.inputs.e_size},
         {"s_size", c.inputs.s_size},
         {"s_energy", c.inputs.s_energy},
         {"K", c.inputs.K},
         {"alpha", c.inputs.alpha}}}};
}

void to_json(Json& j, const ComparisonRow& r) {
  j = {{"label", r.label},
       {"lhs", r.lhs},
       {"inputs", inputs_to_json(r.inputs)},
       {"classical_rhs", r.classical_rhs},
       {"additive_rhs_e", r.additive_rhs_e},
       {"additive_rhs_sigma", r.additive_rhs_sigma},
       {"refined_rhs_e", r.refined_rhs_e},
       {"refined_rhs_sigma", r.refined_rhs_sigma},
       {"correction_e", r.correction_e},
       {"correction_sigma", r.correction_sigma},
       {"refined_status_e", to_string(r.refined_status_e)},
       {"refined_status_sigma", to_string(r.refined_status_sigma)},
       {"min_slack", r.min_slack},
       {"sharpest", r.sharpest}};
}

void to_json(Json& j, const RecoverySolution& s) {
  j = {{"status", to_string(s.status)},
       {"objective", s.objective},
       {"residual", s.feasibility_residual},
       {"iterations", s.iterations},
       {"dual_margin", s.dual_margin},
       {"near_degenerate", s.near_degenerate},
       {"polished", s.polished},
       {"diagnostic", s.diagnostic},
       {"signal", signal_to_json(s.signal)}};
}

void to_json(Json& j, const GowersReport& r) {
  j = {{"k", r.k},
       {"norm_value", r.norm_value},
       {"raw_sum", r.raw_sum},
       {"raw_imag", r.raw_imag},
       {"exponent_form", r.exponent_form}};
}

void to_json(Json& j, const ScanWitness& w) {
  j = {{"e_size", w.e_size},
       {"sigma_size", w.sigma_size},
       {"exponent_form", w.exponent_form},
       {"product", w.product},
       {"values", complex_vector_to_json(w.values)}};
}

void to_json(Json& j, const ConjectureScanReport& r) {
  j = {{"N", r.params.modulus()},
       {"d", r.params.dimension()},
       {"k", r.k},
       {"sampler", to_string(r.sampler)},
       {"seed", r.seed},
       {"signals_examined", r.signals_examined},
       {"min_product", r.min_product},
       {"violation_count", r.violations.size()},
       {"extremal", r.extremal},
       {"violations", r.violations}};
}

}  // namespace aeup
