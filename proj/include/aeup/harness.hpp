#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aeup/io.hpp"

namespace aeup {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Scenario {
  example1,
  example2,
  soundness_sweep,
  improvement_sweep,
  recovery_sweep,
  conjecture_scan,
};

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

enum class ReportFormat { json, csv };

struct ExperimentConfig {
  Scenario scenario = Scenario::soundness_sweep;
  // Scenario-specific settings, e.g. "regime" -> "sparse", "N" -> "5,7,9".
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::string output;  // empty: stdout
  ReportFormat format = ReportFormat::json;

  std::string param(const std::string& key, const std::string& fallback) const;
  std::vector<std::int64_t> int_list(const std::string& key, std::vector<std::int64_t> fallback) const;
};

struct ReportRow {
  std::string label;
  bool pass = true;
  double slack = 0.0;
  Json data = Json::object();
};

struct RunSummary {
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  double min_slack = 0.0;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  RunSummary summary;
  // Scenario-level aggregates (tables, cross-tabulations, per-kind minima).
  Json aggregates = Json::object();
  std::string tool_version = kToolVersion;
  double wall_time_seconds = 0.0;
};

// Recomputes the summary from the rows.
void summarize(RunReport& r);

// With include_wall_time = false the output is a pure function of the config.
Json report_to_json(const RunReport& r, bool include_wall_time = true);
// One line per row: label,pass,slack followed by the row's scalar fields.
std::string report_to_csv(const RunReport& r);
std::string render_report(const RunReport& r, bool include_wall_time = true);

// Example 1 over every (m, N) with m < N not dividing N, on Z_N^2.
RunReport run_example1(const std::vector<std::int64_t>& m_list, const std::vector<std::int64_t>& n_list);
RunReport run_example2();

// params: "regime" generic|sparse|coset (default generic); trials default 500
// spread round-robin over the (N, d) settings.
RunReport run_soundness_sweep(const ExperimentConfig& cfg);
// Strict improvement of the refined bound over the additive one on random pairs.
RunReport run_improvement_sweep(const ExperimentConfig& cfg);
// params: "regime" generic|classical, "N" list (default 5,7,8,9,11,12,13,16),
// "s_types" (default random,sidon,subgroup).
RunReport run_recovery_sweep(const ExperimentConfig& cfg);
// params: "N", "d", "k", "sampler".
RunReport run_conjecture_scan(const ExperimentConfig& cfg);

RunReport run_experiment(const ExperimentConfig& cfg);

// --check contract: nonzero exactly when some row failed.
inline int check_exit_code(const RunReport& r) { return r.summary.fail_count > 0 ? 1 : 0; }

}  // namespace aeup
