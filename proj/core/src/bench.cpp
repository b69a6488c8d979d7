#include "coexplore/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace coexplore::bench {

namespace {

using nlohmann::json;

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string metrics_csv(const RunMetrics& metrics, std::size_t robots) {
  std::ostringstream out;
  out << "t,coverage";
  for (std::size_t i = 0; i < robots; ++i) out << ",dist_r" << i;
  out << '\n';
  for (const MetricsSample& s : metrics.samples) {
    out << format("%.3f", s.t) << ',' << format("%.6f", s.coverage);
    for (double d : s.odometry) out << ',' << format("%.6f", d);
    out << '\n';
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

json summary_json(const RunSummary& s) {
  json j;
  j["strategy"] = s.strategy;
  j["world"] = s.world;
  j["robots"] = s.robots;
  j["seed"] = s.seed;
  if (s.exploration_time) {
    j["exploration_time"] = *s.exploration_time;
  } else {
    j["exploration_time"] = nullptr;
  }
  j["dnf"] = !s.exploration_time.has_value();
  j["final_coverage"] = s.final_coverage;
  j["distances"] = s.distances;
  j["distance_spread"] = s.distance_spread;
  j["replan_count"] = s.replan_count;
  j["sample_count"] = s.sample_count;
  return j;
}

// Executes one configured run and writes its artifacts. Start placement and
// the in-run overflow draws use decorrelated streams of the same seed.
RunSummary execute_run(const ScenarioSpec& scenario, const WorldGrid& world,
                       StrategyId strategy, int robots, std::uint64_t seed,
                       std::optional<double> max_time,
                       const std::filesystem::path& out_dir) {
  SimConfig config = scenario.sim;
  config.strategy = strategy;
  config.seed = seed;
  if (max_time) config.max_sim_time = *max_time;

  Rng start_rng(derive_seed(seed, 0x5741525453ull));  // "STARTS"
  const std::vector<Cell> starts = resolve_starts(scenario, world, robots,
                                                  start_rng);
  const RunMetrics metrics = run(world, starts, config);

  RunSummary summary;
  summary.strategy = std::string(strategy_name(strategy));
  summary.world = scenario.world_label;
  summary.robots = robots;
  summary.seed = seed;
  summary.exploration_time = metrics.exploration_time;
  summary.final_coverage = metrics.final_coverage;
  summary.distances = metrics.final_odometry;
  if (!metrics.final_odometry.empty()) {
    const auto [lo, hi] = std::minmax_element(metrics.final_odometry.begin(),
                                              metrics.final_odometry.end());
    summary.distance_spread = *hi - *lo;
  }
  summary.replan_count = static_cast<int>(metrics.replan_times.size());
  summary.sample_count = static_cast<int>(metrics.samples.size());

  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "metrics.csv",
             metrics_csv(metrics, metrics.final_odometry.size()));
  write_file(out_dir / "summary.json", summary_json(summary).dump(2) + "\n");
  export_snapshot(metrics.final_belief, metrics.final_frontier_cells,
                  out_dir / "snapshot.pgm");
  return summary;
}

StrategyId resolve_strategy(const std::string& name) {
  const auto id = strategy_from_name(name);
  if (!id) throw std::runtime_error("unknown strategy '" + name + "'");
  return *id;
}

RunSummary summary_from_json(const json& j) {
  RunSummary s;
  s.strategy = j.at("strategy").get<std::string>();
  s.world = j.at("world").get<std::string>();
  s.robots = j.at("robots").get<int>();
  s.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("exploration_time").is_null()) {
    s.exploration_time = j.at("exploration_time").get<double>();
  }
  s.final_coverage = j.at("final_coverage").get<double>();
  s.distances = j.at("distances").get<std::vector<double>>();
  s.distance_spread = j.at("distance_spread").get<double>();
  s.replan_count = j.at("replan_count").get<int>();
  s.sample_count = j.at("sample_count").get<int>();
  return s;
}

json report_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const ReportRow& r : rows) {
    json j;
    j["strategy"] = r.strategy;
    j["robots"] = r.robots;
    j["world"] = r.world;
    j["runs"] = r.runs;
    j["dnf"] = r.dnf;
    j["mean_time"] = r.mean_time ? json(*r.mean_time) : json(nullptr);
    j["std_time"] = r.std_time ? json(*r.std_time) : json(nullptr);
    arr.push_back(std::move(j));
  }
  return json{{"rows", std::move(arr)}};
}

void write_reports(const std::filesystem::path& dir,
                   const std::vector<ReportRow>& rows) {
  write_file(dir / "report.csv", report_csv(rows));
  write_file(dir / "report.json", report_json(rows).dump(2) + "\n");
}

}  // namespace

RunSummary read_summary(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  json j;
  in >> j;
  return summary_from_json(j);
}

std::vector<ReportRow> aggregate(std::vector<RunSummary> summaries) {
  // Deterministic report order, independent of how runs were scheduled.
  std::sort(summaries.begin(), summaries.end(),
            [](const RunSummary& a, const RunSummary& b) {
              if (a.strategy != b.strategy) return a.strategy < b.strategy;
              if (a.robots != b.robots) return a.robots < b.robots;
              if (a.world != b.world) return a.world < b.world;
              return a.seed < b.seed;
            });
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < summaries.size();) {
    const RunSummary& first = summaries[i];
    ReportRow row;
    row.strategy = first.strategy;
    row.robots = first.robots;
    row.world = first.world;
    std::vector<double> finished;
    for (; i < summaries.size(); ++i) {
      const RunSummary& s = summaries[i];
      if (s.strategy != row.strategy || s.robots != row.robots ||
          s.world != row.world) {
        break;
      }
      ++row.runs;
      if (s.exploration_time) {
        finished.push_back(*s.exploration_time);
      } else {
        ++row.dnf;
      }
    }
    if (!finished.empty()) {
      double sum = 0.0;
      for (double t : finished) sum += t;
      const double mean = sum / static_cast<double>(finished.size());
      row.mean_time = mean;
      if (finished.size() > 1) {
        double sq = 0.0;
        for (double t : finished) sq += (t - mean) * (t - mean);
        row.std_time = std::sqrt(sq / static_cast<double>(finished.size() - 1));
      } else {
        row.std_time = 0.0;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "strategy,robots,world,runs,dnf,mean_time,std_time\n";
  for (const ReportRow& r : rows) {
    out << r.strategy << ',' << r.robots << ',' << r.world << ',' << r.runs
        << ',' << r.dnf << ','
        << (r.mean_time ? format("%.3f", *r.mean_time) : "nan") << ','
        << (r.std_time ? format("%.3f", *r.std_time) : "nan") << '\n';
  }
  return out.str();
}

std::string report_table(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "strategy      robots  world       runs  dnf  mean_time  std_time\n";
  for (const ReportRow& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-12s  %6d  %-10s  %4d  %3d  %9s  %8s\n",
                  r.strategy.c_str(), r.robots, r.world.c_str(), r.runs, r.dnf,
                  r.mean_time ? format("%.1f", *r.mean_time).c_str() : "-",
                  r.std_time ? format("%.1f", *r.std_time).c_str() : "-");
    out << buf;
  }
  return out.str();
}

ExitCode cmd_run(const RunOptions& options, std::ostream& log) {
  try {
    const ScenarioSpec scenario = load_scenario(options.scenario);
    const StrategyId strategy =
        options.strategy ? resolve_strategy(*options.strategy)
                         : scenario.sim.strategy;
    const int robots = options.robots.value_or(scenario.robots);
    const std::uint64_t seed = options.seed.value_or(scenario.base_seed);
    if (robots < 1) throw std::runtime_error("robots must be >= 1");

    const WorldGrid world = build_world(scenario);
    const RunSummary summary =
        execute_run(scenario, world, strategy, robots, seed, options.max_time,
                    options.out_dir);
    log << "run " << summary.strategy << " robots=" << robots
        << " seed=" << seed << " -> "
        << (summary.exploration_time
                ? format("%.1f", *summary.exploration_time) + " s"
                : std::string("DNF"))
        << ", coverage " << format("%.3f", summary.final_coverage) << '\n';
    return summary.exploration_time ? ExitCode::Ok : ExitCode::DidNotFinish;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return ExitCode::ConfigError;
  }
}

ExitCode cmd_bench(const BenchOptions& options, std::ostream& log) {
  try {
    const ScenarioSpec scenario = load_scenario(options.scenario);
    std::vector<StrategyId> strategies;
    if (!options.strategies.empty()) {
      for (const std::string& name : options.strategies) {
        strategies.push_back(resolve_strategy(name));
      }
    } else if (!scenario.strategies.empty()) {
      strategies = scenario.strategies;
    } else {
      strategies = {scenario.sim.strategy};
    }
    std::vector<int> robot_counts =
        options.robot_counts.empty() ? std::vector<int>{scenario.robots}
                                     : options.robot_counts;
    const int runs = options.runs.value_or(scenario.runs);
    const std::uint64_t base_seed = options.base_seed.value_or(scenario.base_seed);
    if (runs < 1) throw std::runtime_error("runs must be >= 1");
    for (int r : robot_counts) {
      if (r < 1) throw std::runtime_error("robot counts must be >= 1");
    }

    const WorldGrid world = build_world(scenario);
    std::filesystem::create_directories(options.out_dir);

    struct Task {
      StrategyId strategy;
      int robots;
      int run_index;
      std::filesystem::path dir;
    };
    std::vector<Task> tasks;
    for (const StrategyId strategy : strategies) {
      for (const int robots : robot_counts) {
        for (int i = 0; i < runs; ++i) {
          char dir_name[96];
          std::snprintf(dir_name, sizeof(dir_name), "%s_r%d/run_%03d",
                        std::string(strategy_name(strategy)).c_str(), robots, i);
          tasks.push_back({strategy, robots, i, options.out_dir / dir_name});
        }
      }
    }

    std::vector<RunSummary> summaries(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;

    unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                     : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, tasks.size());

    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || failed.load()) break;
        const Task& task = tasks[i];
        try {
          summaries[i] = execute_run(scenario, world, task.strategy,
                                     task.robots,
                                     base_seed + static_cast<std::uint64_t>(task.run_index),
                                     options.max_time, task.dir);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!failed.exchange(true)) first_error = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed.load()) throw std::runtime_error(first_error);

    const std::vector<ReportRow> rows = aggregate(summaries);
    write_reports(options.out_dir, rows);
    log << report_table(rows);
    return ExitCode::Ok;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return ExitCode::ConfigError;
  }
}

ExitCode cmd_report(const std::filesystem::path& out_dir, std::ostream& out) {
  try {
    std::vector<std::filesystem::path> files;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(out_dir)) {
      if (entry.is_regular_file() && entry.path().filename() == "summary.json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw std::runtime_error("no run summaries under " + out_dir.string());
    }
    std::vector<RunSummary> summaries;
    summaries.reserve(files.size());
    for (const auto& file : files) summaries.push_back(read_summary(file));

    const std::vector<ReportRow> rows = aggregate(std::move(summaries));
    write_reports(out_dir, rows);
    out << report_table(rows);
    out << report_csv(rows);
    return ExitCode::Ok;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << '\n';
    return ExitCode::ConfigError;
  }
}

}  // namespace coexplore::bench
