#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coexplore/sim.hpp"
#include "coexplore/worlds.hpp"

namespace coexplore {

// Parsed scenario file: world source, robot placement, simulation
// parameters, and the benchmark defaults. The format is 'key = value'
// lines with '#' comments; unknown keys are rejected.
struct ScenarioSpec {
  // world
  std::string world_type = "open";  // file | maze | office | open
  std::filesystem::path world_file;
  int world_width = 61;
  int world_height = 61;
  double world_resolution = 0.25;
  std::uint64_t world_seed = 1;
  int corridor_width = 2;
  int room_min = 6;
  int room_max = 18;
  int door_width = 2;
  int obstacle_count = 12;
  int obstacle_size = 4;
  std::string world_label;  // defaults to the file stem or generator name

  // robots
  bool clustered = true;
  std::vector<Cell> starts;  // used when not clustered
  int robots = 2;

  // simulation
  SimConfig sim;

  // benchmark defaults; an empty strategy list means "the run strategy"
  int runs = 1;
  std::uint64_t base_seed = 1;
  std::vector<StrategyId> strategies;
};

ScenarioSpec load_scenario(const std::filesystem::path& path);
ScenarioSpec parse_scenario(std::string_view text,
                            const std::filesystem::path& base_dir = {});

// Builds the world named by the scenario (loading or generating it).
WorldGrid build_world(const ScenarioSpec& scenario);

// Explicit starts from the file, or seeded clustered placement.
std::vector<Cell> resolve_starts(const ScenarioSpec& scenario,
                                 const WorldGrid& world, int robots, Rng& rng);

}  // namespace coexplore
