#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coexplore/scenario.hpp"

namespace coexplore::bench {

enum class ExitCode : int {
  Ok = 0,
  ConfigError = 2,   // bad scenario, strategy, arguments or I/O
  DidNotFinish = 3,  // the run hit the simulation time limit
};

// What one run leaves behind next to its metrics.csv / snapshot.pgm.
struct RunSummary {
  std::string strategy;
  std::string world;
  int robots = 0;
  std::uint64_t seed = 0;
  std::optional<double> exploration_time;  // empty on DNF
  double final_coverage = 0.0;
  std::vector<double> distances;  // per-robot odometry, meters
  double distance_spread = 0.0;   // max - min traveled distance
  int replan_count = 0;
  int sample_count = 0;
};

struct RunOptions {
  std::filesystem::path scenario;
  std::optional<std::string> strategy;  // overrides the scenario
  std::optional<int> robots;
  std::optional<std::uint64_t> seed;
  std::optional<double> max_time;
  std::filesystem::path out_dir;
};

// Executes one run and writes metrics.csv, summary.json and snapshot.pgm
// into out_dir. Identical options produce byte-identical files.
ExitCode cmd_run(const RunOptions& options, std::ostream& log);

struct BenchOptions {
  std::filesystem::path scenario;
  std::vector<std::string> strategies;  // empty -> scenario list
  std::vector<int> robot_counts;        // empty -> scenario robots
  std::optional<int> runs;
  std::optional<std::uint64_t> base_seed;
  std::optional<double> max_time;
  std::filesystem::path out_dir;
  int jobs = 0;  // 0 -> hardware concurrency
};

// Runs x strategies x robot counts seeded runs (seed = base + run index),
// writes per-run artifacts plus report.json / report.csv.
ExitCode cmd_bench(const BenchOptions& options, std::ostream& log);

// Recomputes the report from the summary.json files under the directory and
// prints the plain-text table; rewrites report.json / report.csv.
ExitCode cmd_report(const std::filesystem::path& out_dir, std::ostream& out);

// One aggregated row per (strategy, robots, world).
struct ReportRow {
  std::string strategy;
  int robots = 0;
  std::string world;
  int runs = 0;
  int dnf = 0;
  std::optional<double> mean_time;  // over finished runs
  std::optional<double> std_time;
};

std::vector<ReportRow> aggregate(std::vector<RunSummary> summaries);
std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_table(const std::vector<ReportRow>& rows);

RunSummary read_summary(const std::filesystem::path& file);

}  // namespace coexplore::bench
