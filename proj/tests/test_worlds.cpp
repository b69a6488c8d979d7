#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "coexplore/scenario.hpp"
#include "coexplore/worlds.hpp"

using namespace coexplore;
namespace fs = std::filesystem;

namespace {

double free_fraction(const WorldGrid& world) {
  return static_cast<double>(world.free_cell_count()) /
         static_cast<double>(world.frame().cell_count());
}

void check_world_contract(const WorldGrid& world) {
  CHECK(world.has_closed_border());
  REQUIRE(world.free_cell_count() > 0);
  CHECK(free_components(world).size() == 1);
}

}  // namespace

TEST_CASE("maze generator: connected, deterministic, reasonable density") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check_world_contract(generate_maze(21, 17, 1, seed));
  }
  CHECK(generate_maze(41, 41, 2, 9) == generate_maze(41, 41, 2, 9));
  CHECK(generate_maze(41, 41, 2, 9) != generate_maze(41, 41, 2, 10));

  const WorldGrid m = generate_maze(41, 41, 1, 7);
  check_world_contract(m);
  const double fraction = free_fraction(m);
  CHECK(fraction >= 0.3);
  CHECK(fraction <= 0.7);

  CHECK_THROWS_AS(generate_maze(5, 5, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_maze(41, 41, 0, 1), std::invalid_argument);
}

TEST_CASE("office generator: connected rooms with doors") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check_world_contract(generate_office(31, 31, 4, 10, 2, seed));
  }
  CHECK(generate_office(61, 61, 6, 18, 2, 3) ==
        generate_office(61, 61, 6, 18, 2, 3));

  // regression band: partition walls on a 61x61 floor with room_min 6
  // (measured 378..426 interior wall cells over several seeds)
  const WorldGrid office = generate_office(61, 61, 6, 18, 2, 3);
  check_world_contract(office);
  const double fraction = free_fraction(office);
  CHECK(fraction >= 0.7);
  CHECK(fraction <= 0.97);
  int interior_walls = 0;
  for (int y = 1; y < 60; ++y) {
    for (int x = 1; x < 60; ++x) {
      if (office.at({x, y}) == CellState::Occupied) ++interior_walls;
    }
  }
  CHECK(interior_walls >= 300);
  CHECK(interior_walls <= 520);

  CHECK_THROWS_AS(generate_office(61, 61, 1, 18, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate_office(61, 61, 6, 4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate_office(61, 61, 6, 18, 9, 3), std::invalid_argument);
}

TEST_CASE("open generator: scattered obstacles never disconnect the arena") {
  const WorldGrid empty = generate_open(31, 31, 0, 4, 5);
  check_world_contract(empty);
  CHECK(empty.free_cell_count() == 29 * 29);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check_world_contract(generate_open(41, 41, 10, 4, seed));
  }
  CHECK(generate_open(61, 61, 12, 4, 8) == generate_open(61, 61, 12, 4, 8));

  const WorldGrid open = generate_open(61, 61, 12, 4, 8);
  CHECK(free_fraction(open) >= 0.8);
}

TEST_CASE("frozen benchmark maps match their generators cell for cell") {
  const fs::path maps = fs::path(COEXPLORE_SOURCE_DIR) / "maps";

  const WorldGrid maze = load_world_file(maps / "maze.map");
  CHECK(maze == generate_maze(61, 61, 4, 11, 0.25));
  CHECK(maze.free_cell_count() == 2876);

  const WorldGrid office = load_world_file(maps / "office.map");
  CHECK(office == generate_office(91, 91, 8, 24, 3, 11, 0.25));
  CHECK(office.free_cell_count() == 7205);

  const WorldGrid open = load_world_file(maps / "open.map");
  CHECK(open == generate_open(141, 141, 24, 6, 11, 0.25));
  CHECK(open.free_cell_count() == 18957);

  for (const WorldGrid* world : {&maze, &office, &open}) {
    CHECK(world->has_closed_border());
    CHECK(free_components(*world).size() == 1);
  }
}

TEST_CASE("generated worlds round-trip through the map text format") {
  const WorldGrid maze = generate_maze(21, 21, 1, 3);
  CHECK(load_world(serialize(maze)) == maze);
  const WorldGrid open = generate_open(25, 19, 6, 3, 4);
  CHECK(load_world(serialize(open)) == open);
}

TEST_CASE("clustered starts sit together inside the free space") {
  const WorldGrid world = generate_open(41, 41, 8, 4, 2);
  Rng rng(5);
  const std::vector<Cell> starts = clustered_starts(world, 4, rng);
  REQUIRE(starts.size() == 4);

  std::set<std::pair<int, int>> unique;
  for (const Cell& c : starts) {
    CHECK(world.at(c) == CellState::Free);
    unique.insert({c.x, c.y});
  }
  CHECK(unique.size() == 4);

  // all within a small neighborhood of the anchor
  for (const Cell& c : starts) {
    CHECK(std::abs(c.x - starts[0].x) <= 4);
    CHECK(std::abs(c.y - starts[0].y) <= 4);
  }

  // deterministic per rng state, varying across seeds
  Rng rng_a(5);
  Rng rng_b(5);
  CHECK(clustered_starts(world, 4, rng_a) == clustered_starts(world, 4, rng_b));
  Rng rng_c(6);
  CHECK(clustered_starts(world, 4, rng_c) != starts);
}

TEST_CASE("scenario files parse with strict keys") {
  const std::string text = R"(
# comment
world.type = open
world.width = 41
world.height = 41
world.seed = 9
starts = clustered
robots = 3
strategy = co122
runs = 5
seed = 100
dt = 0.1
replan_period = 2.0
sample_period = 5.0
max_time = 400
speed = 0.4
lidar.range = 8.0
lidar.fov = 240
lidar.angular_resolution = 0.5
)";
  const ScenarioSpec spec = parse_scenario(text);
  CHECK(spec.world_type == "open");
  CHECK(spec.world_width == 41);
  CHECK(spec.robots == 3);
  CHECK(spec.sim.strategy == StrategyId::Co122);
  CHECK(spec.runs == 5);
  CHECK(spec.base_seed == 100);
  CHECK(spec.sim.dt == doctest::Approx(0.1));
  CHECK(spec.sim.robot_speed == doctest::Approx(0.4));
  CHECK(spec.sim.lidar.range == doctest::Approx(8.0));
  CHECK(spec.world_label == "open");

  const WorldGrid world = build_world(spec);
  CHECK(world.width() == 41);

  Rng rng(1);
  const std::vector<Cell> starts = resolve_starts(spec, world, 3, rng);
  CHECK(starts.size() == 3);
}

TEST_CASE("scenario parsing rejects unknown keys and bad values") {
  CHECK_THROWS_WITH_AS(parse_scenario("bogus_key = 1\n"),
                       doctest::Contains("unknown key"), std::runtime_error);
  CHECK_THROWS_AS(parse_scenario("world.type = desert\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_scenario("strategy = warp\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_scenario("runs = three\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_scenario("world.type = file\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_scenario("runs\n"), std::runtime_error);
}

TEST_CASE("explicit starts and relative world files resolve") {
  const fs::path dir = fs::temp_directory_path() / "coexplore_scenario_test";
  fs::create_directories(dir);
  save_world_file(generate_open(21, 21, 3, 3, 4), dir / "tiny.map");
  {
    std::ofstream scn(dir / "tiny.scenario");
    scn << "world.type = file\n"
        << "world.file = tiny.map\n"
        << "starts = 2,2; 3,3\n";
  }
  const ScenarioSpec spec = load_scenario(dir / "tiny.scenario");
  CHECK(spec.world_label == "tiny");
  const WorldGrid world = build_world(spec);
  CHECK(world.width() == 21);
  Rng rng(1);
  const auto starts = resolve_starts(spec, world, 2, rng);
  CHECK(starts == std::vector<Cell>{{2, 2}, {3, 3}});
  CHECK_THROWS_AS(resolve_starts(spec, world, 3, rng), std::runtime_error);
}
