// aeup: command-line front end for the energy, bound, recovery and Gowers
// routines plus the reproducible experiments.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aeup/error.hpp"
#include "aeup/harness.hpp"

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::string output;
  std::string format = "json";
  bool check = false;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
  } else {
    aeup::write_text_file(c.output, text);
  }
}

std::string dump(const aeup::Json& j) { return j.dump(2) + "\n"; }

aeup::ReportFormat parse_format(const std::string& f) {
  if (f == "json") return aeup::ReportFormat::json;
  if (f == "csv") return aeup::ReportFormat::csv;
  throw aeup::ParameterError("--format must be json or csv");
}

int run_report(const Common& c, aeup::ExperimentConfig cfg) {
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.output = c.output;
  cfg.format = parse_format(c.format);
  const auto report = aeup::run_experiment(cfg);
  emit(c, aeup::render_report(report));
  std::cerr << aeup::to_string(cfg.scenario) << ": " << report.summary.pass_count << " pass, "
            << report.summary.fail_count << " fail\n";
  if (cfg.scenario == aeup::Scenario::conjecture_scan) {
    const auto& scan = report.aggregates["scan"];
    if (scan["violation_count"].get<std::size_t>() > 0) {
      std::cerr << "conjecture-scan: " << scan["violation_count"] << " signal(s) with product below 1\n";
    }
  }
  return c.check ? aeup::check_exit_code(report) : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive-energy uncertainty certificates and sparse spectral recovery on Z_N^d"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Master seed for randomized runs");
  app.add_option("--trials", common.trials, "Number of trials");
  app.add_option("--output", common.output, "Output file (default stdout)");
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--check", common.check, "Exit nonzero when any check fails");

  // energy
  auto* energy = app.add_subcommand("energy", "Additive energy of a set");
  std::string set_file, method = "representation";
  energy->add_option("--set", set_file, "Set JSON file")->required()->check(CLI::ExistingFile);
  energy->add_option("--method", method, "quadruple, representation or fourier-check");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Uncertainty certificates for a signal or a support pair");
  std::string signal_file, e_file, sigma_file;
  auto* sig_opt = bounds->add_option("--signal", signal_file, "Signal JSON file")->check(CLI::ExistingFile);
  auto* e_opt = bounds->add_option("--E", e_file, "Support set JSON file")->check(CLI::ExistingFile);
  auto* s_opt = bounds->add_option("--Sigma", sigma_file, "Fourier support set JSON file")->check(CLI::ExistingFile);
  e_opt->needs(s_opt)->excludes(sig_opt);
  s_opt->needs(e_opt);

  // recover
  auto* recover = app.add_subcommand("recover", "Recover a signal from a partially observed spectrum");
  std::string problem_file, support_file, rmethod = "l1";
  recover->add_option("--problem", problem_file, "Problem JSON file")->required()->check(CLI::ExistingFile);
  recover->add_option("--method", rmethod, "l1 or lsq")->check(CLI::IsMember({"l1", "lsq"}));
  recover->add_option("--support", support_file, "Support JSON file for lsq")->check(CLI::ExistingFile);
  aeup::SolverConfig solver;
  recover->add_option("--max-iter", solver.max_iter, "Iteration cap for l1");
  recover->add_option("--tol", solver.obj_tol, "Stopping tolerance for l1");

  // gowers
  auto* gowers = app.add_subcommand("gowers", "Gowers U^k norm of a signal");
  std::string g_signal;
  int k = 2;
  gowers->add_option("--signal", g_signal, "Signal JSON file")->required()->check(CLI::ExistingFile);
  gowers->add_option("--k", k, "2 or 3")->check(CLI::Range(2, 3));

  // conjecture-scan
  auto* scan = app.add_subcommand("conjecture-scan", "Scan |E| ||1_Sigma||_{U^k}^{2^k/(k+1)} over signals");
  std::int64_t scan_n = 5;
  int scan_d = 1, scan_k = 2;
  std::string sampler = "random";
  scan->add_option("--N", scan_n, "Modulus");
  scan->add_option("--d", scan_d, "Dimension");
  scan->add_option("--k", scan_k, "2 or 3")->check(CLI::Range(2, 3));
  scan->add_option("--sampler", sampler, "random or exhaustive-small")
      ->check(CLI::IsMember({"random", "exhaustive-small"}));

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a worked example");
  std::string example;
  std::string m_list = "2,3,4", n_list = "5,7,9,11";
  reproduce->add_option("example", example, "example1 or example2")
      ->required()
      ->check(CLI::IsMember({"example1", "example2"}));
  reproduce->add_option("--m", m_list, "example1: comma-separated m values");
  reproduce->add_option("--N", n_list, "example1: comma-separated N values");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Randomized sweeps");
  std::string sweep_kind;
  std::vector<std::string> kv;
  sweep->add_option("kind", sweep_kind, "soundness, recovery or improvement")
      ->required()
      ->check(CLI::IsMember({"soundness", "recovery", "improvement"}));
  sweep->add_option("--param", kv, "key=value scenario parameter (repeatable)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*energy) {
      const auto s = aeup::set_from_json(aeup::read_json_file(set_file));
      aeup::Json j = aeup::certify_energy(s, aeup::energy_method_from_string(method));
      emit(common, dump(j));
      return 0;
    }
    if (*bounds) {
      std::optional<aeup::SupportSet> e, sigma;
      if (!signal_file.empty()) {
        const auto f = aeup::signal_from_json(aeup::read_json_file(signal_file));
        if (f.domain != aeup::Domain::time) throw aeup::ParameterError("bounds --signal expects a time-domain signal");
        e = aeup::support_of(f);
        sigma = aeup::support_of(aeup::dft(f));
      } else if (!e_file.empty()) {
        e = aeup::set_from_json(aeup::read_json_file(e_file));
        sigma = aeup::set_from_json(aeup::read_json_file(sigma_file));
      } else {
        throw aeup::ParameterError("bounds needs --signal or --E with --Sigma");
      }
      const auto& p = e->params();
      const auto le = aeup::energy_representation(*e);
      const auto ls = aeup::energy_representation(*sigma);
      std::vector<aeup::UncertaintyCertificate> certs{
          aeup::classical_bound(e->size(), sigma->size(), p),
          aeup::additive_bound(e->size(), ls, p, aeup::BoundSide::E),
          aeup::additive_bound(sigma->size(), le, p, aeup::BoundSide::Sigma)};
      if (e->size() * sigma->size() >= p.size()) {
        const auto r = aeup::refined_bound(aeup::BoundInputs{e->size(), sigma->size(), le, ls}, p);
        certs.push_back(r.e_side);
        certs.push_back(r.sigma_side);
      }
      bool all = true;
      for (const auto& c : certs) all = all && c.satisfied;
      if (parse_format(common.format) == aeup::ReportFormat::csv) {
        emit(common, aeup::certificates_csv(certs));
      } else {
        emit(common, dump(aeup::Json{{"E", aeup::set_to_json(*e)},
                                     {"Sigma", aeup::set_to_json(*sigma)},
                                     {"certificates", certs}}));
      }
      return common.check && !all ? 1 : 0;
    }
    if (*recover) {
      const auto problem = aeup::problem_from_json(aeup::read_json_file(problem_file));
      if (rmethod == "lsq" && support_file.empty()) {
        throw aeup::ParameterError("recover --method lsq needs --support");
      }
      const auto sol =
          rmethod == "lsq"
              ? aeup::least_squares_recover(problem, aeup::set_from_json(aeup::read_json_file(support_file)))
              : aeup::l1_recover(problem, solver);
      emit(common, dump(aeup::Json(sol)));
      return common.check && sol.status != aeup::SolveStatus::converged ? 1 : 0;
    }
    if (*gowers) {
      const auto f = aeup::signal_from_json(aeup::read_json_file(g_signal));
      emit(common, dump(aeup::Json(aeup::gowers_norm(f, k))));
      return 0;
    }
    if (*scan) {
      aeup::ExperimentConfig cfg;
      cfg.scenario = aeup::Scenario::conjecture_scan;
      cfg.params = {{"N", std::to_string(scan_n)},
                    {"d", std::to_string(scan_d)},
                    {"k", std::to_string(scan_k)},
                    {"sampler", sampler}};
      return run_report(common, cfg);
    }
    if (*reproduce) {
      aeup::ExperimentConfig cfg;
      cfg.scenario = aeup::scenario_from_string(example);
      if (cfg.scenario == aeup::Scenario::example1) cfg.params = {{"m", m_list}, {"N", n_list}};
      return run_report(common, cfg);
    }
    if (*sweep) {
      aeup::ExperimentConfig cfg;
      cfg.scenario = aeup::scenario_from_string(sweep_kind + "-sweep");
      for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw aeup::ParameterError("--param expects key=value, got '" + item + "'");
        cfg.params[item.substr(0, eq)] = item.substr(eq + 1);
      }
      return run_report(common, cfg);
    }
  } catch (const aeup::Error& e) {
    std::cerr << "aeup: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
