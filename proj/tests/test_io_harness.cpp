#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "aeup/error.hpp"
#include "aeup/harness.hpp"
#include "aeup/io.hpp"
#include "aeup/random.hpp"

using namespace aeup;

TEST(Io, SetRoundTrip) {
  const GroupParams p(5, 2);
  const SupportSet s(p, {p.point({0, 0}), p.point({1, 2}), p.point({4, 3})});
  const auto j = set_to_json(s);
  EXPECT_EQ(j["N"], 5);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(set_from_json(j), s);
}

TEST(Io, SetAlternativeForms) {
  const auto a = set_from_json(Json::parse(R"([{"N": 7, "d": 1}, [0, 3, 5]])"));
  EXPECT_EQ(a, SupportSet::from_indices(GroupParams(7, 1), {0, 3, 5}));
  const auto b = set_from_json(Json::parse(R"({"N": 7, "d": 1, "points": [[3], 0]})"));
  EXPECT_EQ(b, SupportSet::from_indices(GroupParams(7, 1), {0, 3}));
}

TEST(Io, SetErrors) {
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "points": []})")), FormatError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "d": 1})")), FormatError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "d": 1, "points": [1, 1]})")), FormatError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "d": 2, "points": [[1]]})")), FormatError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "d": 1, "points": [5]})")), ParameterError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"N": 5, "d": 1, "points": [1.5]})")), FormatError);
}

TEST(Io, SignalRoundTripKeepsConventionAndDomain) {
  Rng rng(51);
  const GroupParams p(4, 2);
  auto f = dft(random_sparse_signal(rng, p, 5, Convention::analyst_plus()));
  const auto back = signal_from_json(signal_to_json(f));
  EXPECT_EQ(back.convention, f.convention);
  EXPECT_EQ(back.domain, Domain::frequency);
  EXPECT_EQ(back.values, f.values);
}

TEST(Io, SignalShorthand) {
  const auto f = signal_from_json(Json::parse(R"({"N": 3, "d": 1, "convention": "analyst", "values": [1, [0, 2], -1]})"));
  EXPECT_EQ(f.convention, (Convention{Normalization::analyst, ExponentSign::minus_forward}));
  EXPECT_EQ(f.domain, Domain::time);
  EXPECT_EQ(f[1], Complex(0, 2));
  EXPECT_EQ(convention_from_json("analyst-plus"), Convention::analyst_plus());
  EXPECT_THROW(convention_from_json("fancy"), FormatError);
  EXPECT_THROW(signal_from_json(Json::parse(R"({"N": 3, "d": 1, "values": [1, 2]})")), FormatError);
  EXPECT_THROW(signal_from_json(Json::parse(R"({"N": 3, "d": 1, "values": [1, "x", 2]})")), FormatError);
}

TEST(Io, ProblemFromTimeAndFrequencyFiles) {
  const auto t = problem_from_json(Json::parse(
      R"({"N": 4, "d": 1, "convention": "analyst-plus", "values": [1, 0, 0, 2], "missing": [1, 2]})"));
  EXPECT_NEAR(std::abs(t.spectrum[3] - Complex(1, 2)), 0.0, 1e-12);
  EXPECT_FALSE(t.observed(1));
  const auto back = problem_from_json(problem_to_json(t));
  EXPECT_EQ(back.missing, t.missing);
  EXPECT_EQ(back.spectrum.values, t.spectrum.values);
  EXPECT_THROW(problem_from_json(Json::parse(R"({"N": 4, "d": 1, "values": [1, 0, 0, 2]})")), FormatError);
}

TEST(Io, FilesAndMethods) {
  const auto dir = std::filesystem::temp_directory_path() / "aeup_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "s.json", R"({"N": 5, "d": 1, "points": [0, 1]})");
  EXPECT_EQ(set_from_json(read_json_file(dir / "s.json")).size(), 2u);
  write_text_file(dir / "bad.json", "{ not json");
  EXPECT_THROW(read_json_file(dir / "bad.json"), FormatError);
  EXPECT_THROW(read_json_file(dir / "missing.json"), FormatError);
  std::filesystem::remove_all(dir);
  for (auto m : {EnergyMethod::quadruple, EnergyMethod::representation, EnergyMethod::fourier_check}) {
    EXPECT_EQ(energy_method_from_string(to_string(m)), m);
  }
  EXPECT_THROW(energy_method_from_string("magic"), ParameterError);
}

TEST(Io, CertificateJsonFields) {
  const GroupParams p(4, 1);
  Json j;
  to_json(j, classical_bound(1, 4, p));
  EXPECT_EQ(j["kind"], "classical");
  EXPECT_EQ(j["satisfied"], true);
  Json e;
  to_json(e, certify_energy(SupportSet::from_indices(p, {0, 1}), EnergyMethod::representation));
  EXPECT_EQ(e["energy"], 6);
}

TEST(Harness, ScenarioNames) {
  for (auto s : {Scenario::example1, Scenario::example2, Scenario::soundness_sweep, Scenario::improvement_sweep,
                 Scenario::recovery_sweep, Scenario::conjecture_scan}) {
    EXPECT_EQ(scenario_from_string(to_string(s)), s);
  }
  EXPECT_THROW(scenario_from_string("nope"), ParameterError);
}

TEST(Harness, ReportsAreReproducibleWithoutWallTime) {
  ExperimentConfig cfg;
  cfg.scenario = Scenario::soundness_sweep;
  cfg.seed = 17;
  cfg.trials = 40;
  const auto a = render_report(run_experiment(cfg), false);
  const auto b = render_report(run_experiment(cfg), false);
  EXPECT_EQ(a, b);
  cfg.seed = 18;
  EXPECT_NE(render_report(run_experiment(cfg), false), a);
}

TEST(Harness, RecoverySweepReproducible) {
  ExperimentConfig cfg;
  cfg.scenario = Scenario::recovery_sweep;
  cfg.seed = 5;
  cfg.trials = 30;
  cfg.params["N"] = "7,8";
  const auto r = run_experiment(cfg);
  EXPECT_EQ(render_report(r, false), render_report(run_experiment(cfg), false));
  EXPECT_EQ(r.summary.fail_count, 0u);
  EXPECT_EQ(check_exit_code(r), 0);
}

TEST(Harness, JsonLayout) {
  const auto r = run_example2();
  const auto j = report_to_json(r, false);
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_FALSE(j.contains("wall_time_seconds"));
  EXPECT_TRUE(report_to_json(r, true).contains("wall_time_seconds"));
  EXPECT_EQ(j["rows"].size(), r.rows.size());
  EXPECT_EQ(j["summary"]["fail_count"], 0);
}

TEST(Harness, CheckExitCodeFollowsFailures) {
  RunReport r;
  r.rows.push_back({"a", true, 1.0, {}});
  summarize(r);
  EXPECT_EQ(check_exit_code(r), 0);
  r.rows.push_back({"b", false, -0.5, {}});
  summarize(r);
  EXPECT_EQ(r.summary.fail_count, 1u);
  EXPECT_DOUBLE_EQ(r.summary.min_slack, -0.5);
  EXPECT_EQ(check_exit_code(r), 1);
}

TEST(Harness, CsvHasOneLinePerRow) {
  RunReport r;
  r.rows.push_back({"x", true, 0.25, {{"n", 3}, {"name", "q"}, {"nested", Json::array({1})}}});
  r.rows.push_back({"y", false, -1.0, {{"n", 4}}});
  summarize(r);
  const auto csv = report_to_csv(r);
  std::istringstream in(csv);
  std::string header, l1, l2;
  std::getline(in, header);
  std::getline(in, l1);
  std::getline(in, l2);
  EXPECT_EQ(header.rfind("label,pass,slack", 0), 0u);
  EXPECT_EQ(header.find("nested"), std::string::npos);
  EXPECT_EQ(l1.rfind("x,true,0.25", 0), 0u);
  EXPECT_EQ(l2.rfind("y,false,-1", 0), 0u);
}

TEST(Harness, ExampleOneExcludesDivisiblePairs) {
  const auto r = run_example1({2, 3}, {4, 5, 6});
  // (2,4), (2,6), (3,6) have m | N; (3,4) wraps around and keeps its enumerated energy.
  EXPECT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.summary.fail_count, 0u);
  EXPECT_EQ(r.aggregates["excluded"].size(), 3u);
  EXPECT_EQ(r.rows[0].data["closed_form_applies"], false);
}

TEST(Harness, ConfigParams) {
  ExperimentConfig cfg;
  cfg.params["N"] = "5, 7,9";
  EXPECT_EQ(cfg.int_list("N", {}), (std::vector<std::int64_t>{5, 7, 9}));
  EXPECT_EQ(cfg.int_list("M", {2}), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(cfg.param("regime", "generic"), "generic");
  cfg.params["bad"] = "5,x";
  EXPECT_THROW(cfg.int_list("bad", {}), ParameterError);
}
