#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aeup/error.hpp"
#include "aeup/harness.hpp"

namespace py = pybind11;
using namespace aeup;

namespace {

// Certificates and reports cross the boundary as plain dicts.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <class T>
py::object as_dict(const T& value) {
  Json j;
  to_json(j, value);
  return to_py(j);
}

Convention parse_convention(const std::string& s) { return convention_from_json(Json(s)); }

SupportSet make_set(const GroupParams& p, const std::vector<std::vector<std::int64_t>>& pts) {
  std::vector<RingVector> v;
  v.reserve(pts.size());
  for (const auto& c : pts) v.push_back(p.point(c));
  return SupportSet(p, v);
}

std::vector<std::vector<std::int64_t>> set_points(const SupportSet& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& pt : s.points()) out.emplace_back(pt.coords().begin(), pt.coords().end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_aeup, m) {
  m.doc() = "Additive-energy uncertainty certificates and sparse spectral recovery on Z_N^d";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<StructureError>(m, "StructureError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<FormatError>(m, "FormatError", base);

  py::class_<GroupParams>(m, "GroupParams")
      .def(py::init<std::int64_t, int>(), py::arg("N"), py::arg("d") = 1)
      .def_property_readonly("N", &GroupParams::modulus)
      .def_property_readonly("d", &GroupParams::dimension)
      .def_property_readonly("size", &GroupParams::size)
      .def("__eq__", [](const GroupParams& a, const GroupParams& b) { return a == b; })
      .def("__repr__", [](const GroupParams& p) {
        return "GroupParams(N=" + std::to_string(p.modulus()) + ", d=" + std::to_string(p.dimension()) + ")";
      });

  py::class_<SupportSet>(m, "SupportSet")
      .def(py::init(&make_set), py::arg("params"), py::arg("points"))
      .def_static("from_indices", &SupportSet::from_indices, py::arg("params"), py::arg("indices"))
      .def_property_readonly("params", &SupportSet::params)
      .def_property_readonly("indices", [](const SupportSet& s) {
        return std::vector<std::uint64_t>(s.indices().begin(), s.indices().end());
      })
      .def_property_readonly("points", &set_points)
      .def("__len__", &SupportSet::size)
      .def("__contains__", [](const SupportSet& s, const std::vector<std::int64_t>& c) {
        return s.contains(s.params().point(c));
      })
      .def("__eq__", [](const SupportSet& a, const SupportSet& b) { return a == b; });

  m.def("full_group", &full_group);
  m.def("make_interval_grid", &make_interval_grid, py::arg("params"), py::arg("m"));
  m.def("make_cyclic_subgroup", [](const GroupParams& p, const std::vector<std::int64_t>& g) {
    return make_cyclic_subgroup(p, p.point(g));
  });
  m.def("make_product_subgroup", [](const GroupParams& p, const std::vector<std::int64_t>& g) {
    return make_product_subgroup(p, g);
  });
  m.def("shift_set", [](const SupportSet& a, const std::vector<std::int64_t>& t) {
    return shift_set(a, a.params().point(t));
  });
  m.def("is_subgroup", &is_subgroup);
  m.def("annihilator", &annihilator);

  py::class_<Signal>(m, "Signal")
      .def(py::init([](const GroupParams& p, std::vector<Complex> v, const std::string& conv,
                       const std::string& domain) {
             if (domain != "time" && domain != "frequency") throw ParameterError("domain must be time or frequency");
             return Signal(p, std::move(v), parse_convention(conv),
                           domain == "time" ? Domain::time : Domain::frequency);
           }),
           py::arg("params"), py::arg("values"), py::arg("convention") = "unitary",
           py::arg("domain") = "time")
      .def_readonly("params", &Signal::params)
      .def_readonly("values", &Signal::values)
      .def_property_readonly("convention", [](const Signal& f) { return to_string(f.convention); })
      .def_property_readonly("domain",
                             [](const Signal& f) { return f.domain == Domain::time ? "time" : "frequency"; })
      .def("l1_norm", &Signal::l1_norm)
      .def("max_abs", &Signal::max_abs);

  m.def("dft", &dft);
  m.def("idft", &idft);
  m.def("support_of", &support_of, py::arg("f"), py::arg("tau") = py::none());
  m.def("indicator", [](const SupportSet& a, const std::string& conv) { return indicator(a, parse_convention(conv)); },
        py::arg("a"), py::arg("convention") = "unitary");
  m.def("convert_convention", [](const Signal& f, const std::string& conv) {
    return convert_convention(f, parse_convention(conv));
  });

  m.def("energy_quadruple", &energy_quadruple);
  m.def("energy_representation", &energy_representation);
  m.def("energy_fourier_check", &energy_fourier_check);
  m.def("grid_energy_closed_form", &grid_energy_closed_form, py::arg("m"), py::arg("d"));
  m.def("nontrivial_parallelogram_count", &nontrivial_parallelogram_count);
  m.def("certify_energy", [](const SupportSet& a, const std::string& method) {
    return as_dict(certify_energy(a, energy_method_from_string(method)));
  }, py::arg("a"), py::arg("method") = "representation");
  m.def("energy_growth_certificate",
        [](const GroupParams& p, std::size_t cap, const std::string& mode, double alpha, std::uint64_t samples,
           std::uint64_t seed) {
          GrowthMode gm;
          if (mode == "trivial") gm = GrowthMode::trivial;
          else if (mode == "exhaustive") gm = GrowthMode::exhaustive;
          else if (mode == "sampled") gm = GrowthMode::sampled;
          else throw ParameterError("mode must be trivial, exhaustive or sampled");
          return as_dict(energy_growth_certificate(p, cap, gm, GrowthOptions{alpha, samples, seed}));
        },
        py::arg("params"), py::arg("size_cap"), py::arg("mode") = "exhaustive", py::arg("alpha") = 3.0,
        py::arg("samples_per_size") = 1000, py::arg("seed") = 0);

  m.def("classical_bound", [](Count e, Count s, const GroupParams& p) { return as_dict(classical_bound(e, s, p)); });
  m.def("additive_bound",
        [](Count size, Count energy, const GroupParams& p, const std::string& side) {
          return as_dict(additive_bound(size, energy, p, side == "Sigma" ? BoundSide::Sigma : BoundSide::E));
        },
        py::arg("size"), py::arg("energy"), py::arg("params"), py::arg("side") = "E");
  m.def("correction_term", &correction_term, py::arg("e_size"), py::arg("sigma_size"), py::arg("e_energy"),
        py::arg("params"));
  m.def("refined_bound", [](const SupportSet& e, const SupportSet& sigma) {
    const auto r = refined_bound(e, sigma);
    py::dict d;
    d["E"] = as_dict(r.e_side);
    d["Sigma"] = as_dict(r.sigma_side);
    return d;
  });
  m.def("recovery_condition",
        [](Count e, const SupportSet& s, double K, double alpha, const std::string& variant) {
          RecoveryVariant v;
          if (variant == "proof-final") v = RecoveryVariant::proof_final;
          else if (variant == "as-stated") v = RecoveryVariant::as_stated;
          else throw ParameterError("variant must be proof-final or as-stated");
          return as_dict(recovery_condition(e, s, K, alpha, v));
        },
        py::arg("e_size"), py::arg("S"), py::arg("K") = 1.0, py::arg("alpha") = 3.0,
        py::arg("variant") = "proof-final");

  py::class_<RecoveryProblem>(m, "RecoveryProblem")
      .def(py::init<Signal, SupportSet>(), py::arg("spectrum"), py::arg("missing"))
      .def_static("from_signal", &RecoveryProblem::from_signal, py::arg("f"), py::arg("missing"))
      .def_readonly("spectrum", &RecoveryProblem::spectrum)
      .def_readonly("missing", &RecoveryProblem::missing);

  m.def("l1_recover",
        [](const RecoveryProblem& p, double tol, int max_iter) {
          const auto sol = l1_recover(p, SolverConfig{tol, tol, max_iter});
          return py::make_tuple(sol.signal, as_dict(sol));
        },
        py::arg("problem"), py::arg("tol") = 1e-8, py::arg("max_iter") = 50000,
        "Returns (signal, report dict).");
  m.def("least_squares_recover",
        [](const RecoveryProblem& p, const SupportSet& support) {
          const auto sol = least_squares_recover(p, support);
          return py::make_tuple(sol.signal, as_dict(sol));
        },
        py::arg("problem"), py::arg("support"));
  m.def("l1_objective_profile", &l1_objective_profile, py::arg("problem"), py::arg("base"), py::arg("direction"),
        py::arg("steps"));
  m.def("uniqueness_check", &uniqueness_check);
  m.def("concentration_check", [](const Signal& h, const SupportSet& e, const SupportSet& s) {
    const auto r = concentration_check(h, e, s);
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["holds"] = r.holds;
    return d;
  });

  m.def("gowers_norm", [](const Signal& f, int k) { return as_dict(gowers_norm(f, k)); }, py::arg("f"),
        py::arg("k") = 2);
  m.def("conjecture_scan",
        [](const GroupParams& p, int k, const std::string& sampler, std::size_t trials, std::uint64_t seed) {
          const auto s = sampler == "exhaustive-small" ? ScanSampler::exhaustive_small : ScanSampler::random;
          return as_dict(conjecture_scan(p, k, s, trials, seed));
        },
        py::arg("params"), py::arg("k") = 2, py::arg("sampler") = "random", py::arg("trials") = 500,
        py::arg("seed") = 0);

  m.def("run_experiment",
        [](const std::string& scenario, std::uint64_t seed, std::optional<std::size_t> trials,
           const std::map<std::string, std::string>& params, bool include_wall_time) {
          ExperimentConfig cfg;
          cfg.scenario = scenario_from_string(scenario);
          cfg.seed = seed;
          cfg.trials = trials;
          cfg.params = params;
          return to_py(report_to_json(run_experiment(cfg), include_wall_time));
        },
        py::arg("scenario"), py::arg("seed") = 0, py::arg("trials") = py::none(),
        py::arg("params") = std::map<std::string, std::string>{}, py::arg("include_wall_time") = true);

  m.attr("__version__") = kToolVersion;
}
