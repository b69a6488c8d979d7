// Command-line harness: single runs, batched benchmarks, report assembly
// and map generation.
//
// Exit codes: 0 success, 2 configuration/input error, 3 run hit the
// simulation time limit (DNF).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coexplore/bench.hpp"
#include "coexplore/worlds.hpp"

namespace {

std::string default_out_dir() {
  const char* env = std::getenv("COEXPLORE_OUT");
  return env ? std::string(env) : std::string("out");
}

int generate_map(const std::string& type, int width, int height,
                 int corridor, int room_min, int room_max, int door,
                 int obstacles, int obstacle_size, std::uint64_t seed,
                 double resolution, const std::string& out_file) {
  try {
    coexplore::WorldGrid world = [&] {
      if (type == "maze") {
        return coexplore::generate_maze(width, height, corridor, seed, resolution);
      }
      if (type == "office") {
        return coexplore::generate_office(width, height, room_min, room_max,
                                          door, seed, resolution);
      }
      if (type == "open") {
        return coexplore::generate_open(width, height, obstacles,
                                        obstacle_size, seed, resolution);
      }
      throw std::runtime_error("unknown map type '" + type + "'");
    }();
    coexplore::save_world_file(world, out_file);
    std::cout << "wrote " << out_file << " (" << width << "x" << height
              << ", " << world.free_cell_count() << " free cells)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot frontier exploration simulator and benchmark"};
  app.require_subcommand(1);

  std::string scenario;
  std::string strategy;
  std::vector<std::string> strategies;
  int robots = 0;
  std::vector<int> robot_counts;
  int runs = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double max_time = 0.0;
  bool max_time_set = false;
  std::string out_dir = default_out_dir();
  int jobs = 0;

  auto* run_cmd = app.add_subcommand("run", "Execute one exploration run");
  run_cmd->add_option("--scenario", scenario, "Scenario file")->required();
  run_cmd->add_option("--strategy", strategy, "Strategy name");
  run_cmd->add_option("--robots", robots, "Robot count");
  run_cmd->add_option("--seed", seed, "Run seed")->each([&](const std::string&) {
    seed_set = true;
  });
  run_cmd->add_option("--max-time", max_time, "Simulated time limit, seconds")
      ->each([&](const std::string&) { max_time_set = true; });
  run_cmd->add_option("--out", out_dir, "Output directory (default $COEXPLORE_OUT or ./out)");

  auto* bench_cmd = app.add_subcommand("bench", "Run a batched benchmark");
  bench_cmd->add_option("--scenario", scenario, "Scenario file")->required();
  bench_cmd->add_option("--strategy", strategies, "Strategy names")
      ->delimiter(',');
  bench_cmd->add_option("--robots", robot_counts, "Robot counts")
      ->delimiter(',');
  bench_cmd->add_option("--runs", runs, "Runs per configuration");
  bench_cmd->add_option("--seed", seed, "Base seed")->each([&](const std::string&) {
    seed_set = true;
  });
  bench_cmd->add_option("--max-time", max_time, "Simulated time limit, seconds")
      ->each([&](const std::string&) { max_time_set = true; });
  bench_cmd->add_option("--out", out_dir, "Output directory");
  bench_cmd->add_option("--jobs", jobs, "Parallel runs (default: all cores)");

  std::string report_dir;
  auto* report_cmd = app.add_subcommand("report", "Rebuild the report from run artifacts");
  report_cmd->add_option("dir", report_dir, "Benchmark output directory")
      ->required();

  std::string map_type, map_out;
  int map_width = 61, map_height = 61, map_corridor = 2;
  int map_room_min = 6, map_room_max = 18, map_door = 2;
  int map_obstacles = 12, map_obstacle_size = 4;
  std::uint64_t map_seed = 1;
  double map_resolution = 0.25;
  auto* genmap_cmd = app.add_subcommand("genmap", "Generate a map file");
  genmap_cmd->add_option("--type", map_type, "maze | office | open")->required();
  genmap_cmd->add_option("--width", map_width, "Cells");
  genmap_cmd->add_option("--height", map_height, "Cells");
  genmap_cmd->add_option("--corridor", map_corridor, "Maze corridor width");
  genmap_cmd->add_option("--room-min", map_room_min, "Office minimum room size");
  genmap_cmd->add_option("--room-max", map_room_max, "Office maximum room size");
  genmap_cmd->add_option("--door", map_door, "Office door width");
  genmap_cmd->add_option("--obstacles", map_obstacles, "Open-world obstacle count");
  genmap_cmd->add_option("--obstacle-size", map_obstacle_size, "Open-world obstacle size");
  genmap_cmd->add_option("--seed", map_seed, "Generator seed");
  genmap_cmd->add_option("--resolution", map_resolution, "Meters per cell");
  genmap_cmd->add_option("--out", map_out, "Output map file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using coexplore::bench::ExitCode;
  if (run_cmd->parsed()) {
    coexplore::bench::RunOptions options;
    options.scenario = scenario;
    if (!strategy.empty()) options.strategy = strategy;
    if (robots > 0) options.robots = robots;
    if (seed_set) options.seed = seed;
    if (max_time_set) options.max_time = max_time;
    options.out_dir = out_dir;
    return static_cast<int>(coexplore::bench::cmd_run(options, std::cout));
  }
  if (bench_cmd->parsed()) {
    coexplore::bench::BenchOptions options;
    options.scenario = scenario;
    options.strategies = strategies;
    options.robot_counts = robot_counts;
    if (runs > 0) options.runs = runs;
    if (seed_set) options.base_seed = seed;
    if (max_time_set) options.max_time = max_time;
    options.out_dir = out_dir;
    options.jobs = jobs;
    return static_cast<int>(coexplore::bench::cmd_bench(options, std::cout));
  }
  if (report_cmd->parsed()) {
    return static_cast<int>(coexplore::bench::cmd_report(report_dir, std::cout));
  }
  if (genmap_cmd->parsed()) {
    return generate_map(map_type, map_width, map_height, map_corridor,
                        map_room_min, map_room_max, map_door, map_obstacles,
                        map_obstacle_size, map_seed, map_resolution, map_out);
  }
  return 2;
}
