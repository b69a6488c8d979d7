#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coexplore/bench.hpp"

using namespace coexplore;
using namespace coexplore::bench;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "coexplore_bench_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_smoke_scenario(const fs::path& dir) {
  const fs::path file = dir / "one_room.scenario";
  std::ofstream out(file);
  out << "world.type = open\n"
      << "world.width = 15\n"
      << "world.height = 15\n"
      << "world.resolution = 0.5\n"
      << "world.obstacle_count = 0\n"
      << "starts = clustered\n"
      << "robots = 1\n"
      << "strategy = coexplore\n"
      << "lidar.range = 12\n"
      << "lidar.fov = 360\n"
      << "max_time = 300\n";
  return file;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cmd_run completes a trivial scenario with full coverage") {
  const fs::path dir = fresh_dir("run_ok");
  const fs::path scenario = write_smoke_scenario(dir);

  RunOptions options;
  options.scenario = scenario;
  options.seed = 3;
  options.out_dir = dir / "out";
  std::ostringstream log;
  CHECK(cmd_run(options, log) == ExitCode::Ok);

  CHECK(fs::exists(dir / "out" / "metrics.csv"));
  CHECK(fs::exists(dir / "out" / "snapshot.pgm"));
  const RunSummary summary = read_summary(dir / "out" / "summary.json");
  CHECK(summary.final_coverage == doctest::Approx(1.0));
  REQUIRE(summary.exploration_time.has_value());
  CHECK(summary.strategy == "coexplore");

  const std::string csv = slurp(dir / "out" / "metrics.csv");
  CHECK(csv.rfind("t,coverage,dist_r0\n", 0) == 0);
}

TEST_CASE("cmd_run maps failures to distinct exit codes") {
  const fs::path dir = fresh_dir("run_fail");
  const fs::path scenario = write_smoke_scenario(dir);
  std::ostringstream log;

  RunOptions missing;
  missing.scenario = dir / "does_not_exist.scenario";
  missing.out_dir = dir / "out1";
  CHECK(cmd_run(missing, log) == ExitCode::ConfigError);

  RunOptions bad_strategy;
  bad_strategy.scenario = scenario;
  bad_strategy.strategy = "bogus";
  bad_strategy.out_dir = dir / "out2";
  CHECK(cmd_run(bad_strategy, log) == ExitCode::ConfigError);

  RunOptions dnf;
  dnf.scenario = scenario;
  dnf.max_time = 0.2;  // cannot possibly finish... unless it finishes at t=0
  dnf.out_dir = dir / "out3";
  // one-room world finishes at t = 0, so force a bigger, slower scenario
  {
    std::ofstream out(dir / "slow.scenario");
    out << "world.type = maze\n"
        << "world.width = 41\n"
        << "world.height = 41\n"
        << "world.seed = 2\n"
        << "world.corridor_width = 1\n"
        << "world.resolution = 1.0\n"
        << "starts = clustered\n"
        << "robots = 1\n"
        << "lidar.range = 3\n"
        << "max_time = 4\n";
  }
  dnf.scenario = dir / "slow.scenario";
  dnf.max_time.reset();
  CHECK(cmd_run(dnf, log) == ExitCode::DidNotFinish);
  // artifacts still written for DNF runs
  const RunSummary summary = read_summary(dir / "out3" / "summary.json");
  CHECK_FALSE(summary.exploration_time.has_value());
}

TEST_CASE("cmd_run twice produces byte-identical artifacts") {
  const fs::path dir = fresh_dir("run_det");
  const fs::path scenario = write_smoke_scenario(dir);

  for (const char* sub : {"a", "b"}) {
    RunOptions options;
    options.scenario = scenario;
    options.seed = 11;
    options.out_dir = dir / sub;
    std::ostringstream log;
    REQUIRE(cmd_run(options, log) == ExitCode::Ok);
  }
  CHECK(slurp(dir / "a" / "metrics.csv") == slurp(dir / "b" / "metrics.csv"));
  CHECK(slurp(dir / "a" / "snapshot.pgm") == slurp(dir / "b" / "snapshot.pgm"));
  CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));
}

TEST_CASE("cmd_bench aggregates runs and cmd_report reproduces the table") {
  const fs::path dir = fresh_dir("bench");
  const fs::path scenario = write_smoke_scenario(dir);

  BenchOptions options;
  options.scenario = scenario;
  options.strategies = {"coexplore", "nearest"};
  options.robot_counts = {1, 2};
  options.runs = 2;
  options.base_seed = 7;
  options.out_dir = dir / "out";
  options.jobs = 2;
  std::ostringstream log;
  REQUIRE(cmd_bench(options, log) == ExitCode::Ok);

  const std::string report = slurp(dir / "out" / "report.csv");
  CHECK(report.rfind("strategy,robots,world,runs,dnf,mean_time,std_time\n", 0) == 0);

  // 2 strategies x 2 robot counts
  int lines = 0;
  for (char ch : report) lines += ch == '\n';
  CHECK(lines == 5);

  // per-run artifacts named by configuration and run index
  CHECK(fs::exists(dir / "out" / "coexplore_r1" / "run_000" / "metrics.csv"));
  CHECK(fs::exists(dir / "out" / "nearest_r2" / "run_001" / "summary.json"));

  // the mean over two runs is the average of the two exploration times
  const RunSummary run0 =
      read_summary(dir / "out" / "coexplore_r1" / "run_000" / "summary.json");
  const RunSummary run1 =
      read_summary(dir / "out" / "coexplore_r1" / "run_001" / "summary.json");
  REQUIRE(run0.exploration_time.has_value());
  REQUIRE(run1.exploration_time.has_value());
  const double mean =
      (*run0.exploration_time + *run1.exploration_time) / 2.0;
  std::istringstream rows(report);
  std::string line;
  std::getline(rows, line);  // header
  std::getline(rows, line);  // coexplore,1,...
  CHECK(line.rfind("coexplore,1,", 0) == 0);
  char world_name[32];
  int robots = 0, runs = 0, dnf = 0;
  double mean_time = 0.0, std_time = 0.0;
  REQUIRE(std::sscanf(line.c_str(), "coexplore,%d,%31[^,],%d,%d,%lf,%lf",
                      &robots, world_name, &runs, &dnf, &mean_time,
                      &std_time) == 6);
  CHECK(robots == 1);
  CHECK(runs == 2);
  CHECK(dnf == 0);
  CHECK(mean_time == doctest::Approx(mean).epsilon(1e-3));

  // identical invocation: identical report bytes
  BenchOptions again = options;
  again.out_dir = dir / "out2";
  std::ostringstream log2;
  REQUIRE(cmd_bench(again, log2) == ExitCode::Ok);
  CHECK(slurp(dir / "out2" / "report.csv") == report);

  // report recomputation is a pure function of the summaries
  std::ostringstream table;
  REQUIRE(cmd_report(dir / "out", table) == ExitCode::Ok);
  CHECK(slurp(dir / "out" / "report.csv") == report);
  CHECK(table.str().find("coexplore") != std::string::npos);
}

TEST_CASE("bench artifacts are independent of worker scheduling") {
  const fs::path dir = fresh_dir("jobs");
  const fs::path scenario = write_smoke_scenario(dir);

  BenchOptions options;
  options.scenario = scenario;
  options.strategies = {"coexplore", "minpos"};
  options.robot_counts = {1, 2};
  options.runs = 2;
  options.base_seed = 3;
  options.jobs = 1;
  options.out_dir = dir / "serial";
  std::ostringstream log;
  REQUIRE(cmd_bench(options, log) == ExitCode::Ok);

  options.jobs = 4;
  options.out_dir = dir / "parallel";
  std::ostringstream log2;
  REQUIRE(cmd_bench(options, log2) == ExitCode::Ok);

  CHECK(slurp(dir / "serial" / "report.csv") ==
        slurp(dir / "parallel" / "report.csv"));
  CHECK(slurp(dir / "serial" / "report.json") ==
        slurp(dir / "parallel" / "report.json"));
  for (const char* rel : {"coexplore_r1/run_000/metrics.csv",
                          "minpos_r2/run_001/metrics.csv",
                          "minpos_r2/run_001/snapshot.pgm"}) {
    CHECK(slurp(dir / "serial" / rel) == slurp(dir / "parallel" / rel));
  }
}

TEST_CASE("cmd_report fails on an empty directory") {
  const fs::path dir = fresh_dir("report_empty");
  std::ostringstream out;
  CHECK(cmd_report(dir, out) == ExitCode::ConfigError);
  CHECK(cmd_report(dir / "missing", out) == ExitCode::ConfigError);
}

TEST_CASE("DNF runs are counted but excluded from the mean") {
  std::vector<RunSummary> summaries;
  RunSummary a;
  a.strategy = "nearest";
  a.world = "maze";
  a.robots = 2;
  a.seed = 1;
  a.exploration_time = 100.0;
  RunSummary b = a;
  b.seed = 2;
  b.exploration_time = 140.0;
  RunSummary c = a;
  c.seed = 3;
  c.exploration_time.reset();  // DNF
  summaries = {a, b, c};

  const auto rows = aggregate(summaries);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].runs == 3);
  CHECK(rows[0].dnf == 1);
  REQUIRE(rows[0].mean_time.has_value());
  CHECK(*rows[0].mean_time == doctest::Approx(120.0));
  CHECK(*rows[0].std_time == doctest::Approx(std::sqrt(800.0)));

  // all-DNF group: no mean at all
  RunSummary d = c;
  d.strategy = "minpos";
  const auto rows2 = aggregate({d});
  REQUIRE(rows2.size() == 1);
  CHECK_FALSE(rows2[0].mean_time.has_value());
  const std::string csv = report_csv(rows2);
  CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("metrics rows follow the sample cadence") {
  const fs::path dir = fresh_dir("cadence");
  {
    std::ofstream out(dir / "cadence.scenario");
    out << "world.type = open\n"
        << "world.width = 31\n"
        << "world.height = 31\n"
        << "world.resolution = 1.0\n"
        << "world.obstacle_count = 5\n"
        << "world.seed = 4\n"
        << "starts = clustered\n"
        << "robots = 2\n"
        << "lidar.range = 4\n"
        << "max_time = 600\n";
  }
  RunOptions options;
  options.scenario = dir / "cadence.scenario";
  options.seed = 2;
  options.out_dir = dir / "out";
  std::ostringstream log;
  REQUIRE(cmd_run(options, log) == ExitCode::Ok);

  std::ifstream csv(dir / "out" / "metrics.csv");
  std::string line;
  std::getline(csv, line);  // header
  std::vector<double> times;
  while (std::getline(csv, line)) {
    times.push_back(std::stod(line.substr(0, line.find(','))));
  }
  REQUIRE(times.size() >= 2);
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    CHECK(times[i] == doctest::Approx(5.0 * static_cast<double>(i)));
  }
}
