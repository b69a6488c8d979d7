#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "coexplore/frontier.hpp"
#include "coexplore/grid.hpp"
#include "coexplore/rng.hpp"
#include "support/grids.hpp"

using namespace coexplore;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "coexplore_grid_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("load_world parses a minimal map") {
  const WorldGrid world = load_world("3 3 0.25\n###\n#.#\n###\n");
  CHECK(world.width() == 3);
  CHECK(world.height() == 3);
  CHECK(world.resolution() == doctest::Approx(0.25));
  CHECK(world.free_cell_count() == 1);
  CHECK(world.at({1, 1}) == CellState::Free);
  CHECK(world.at({0, 0}) == CellState::Occupied);
}

TEST_CASE("load_world rejects illegal characters with position info") {
  try {
    load_world("3 3 0.25\n###\n#x#\n###\n");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
    CHECK(msg.find('x') != std::string::npos);
  }
}

TEST_CASE("load_world rejects bad shapes and headers") {
  CHECK_THROWS_WITH_AS(load_world("4 3 0.25\n####\n####\n"),
                       doctest::Contains("expected 3 rows"), std::runtime_error);
  CHECK_THROWS_AS(load_world("3 3 0.25\n###\n#.##\n###\n"), std::runtime_error);
  CHECK_THROWS_AS(load_world("3 3 0\n###\n#.#\n###\n"), std::runtime_error);
  CHECK_THROWS_AS(load_world("3 3 -1\n###\n#.#\n###\n"), std::runtime_error);
  CHECK_THROWS_AS(load_world("nonsense\n"), std::runtime_error);
  CHECK_THROWS_AS(load_world(""), std::runtime_error);
  // open border
  CHECK_THROWS_AS(load_world("3 3 0.25\n#.#\n#.#\n###\n"), std::runtime_error);
}

TEST_CASE("serialize round-trips cell for cell") {
  const WorldGrid world = testing::world_from_rows({
      "#######",
      "#..#..#",
      "#.....#",
      "#..#..#",
      "#######",
  }, 0.5);
  const WorldGrid reloaded = load_world(serialize(world));
  CHECK(reloaded == world);
}

TEST_CASE("coverage_ratio counts known free cells") {
  // 6x4 closed world: 8 interior free cells.
  const WorldGrid world = testing::world_from_rows({
      "######",
      "#....#",
      "#....#",
      "######",
  });
  REQUIRE(world.free_cell_count() == 8);

  BeliefGrid belief(world);
  CHECK(coverage_ratio(belief, world) == 0.0);

  belief.reveal(world, {1, 1});
  belief.reveal(world, {2, 1});
  CHECK(coverage_ratio(belief, world) == doctest::Approx(0.25));

  // revealing walls does not change coverage
  belief.reveal(world, {0, 0});
  CHECK(coverage_ratio(belief, world) == doctest::Approx(0.25));

  const BeliefGrid full = testing::full_belief(world);
  CHECK(coverage_ratio(full, world) == 1.0);
}

TEST_CASE("coverage_ratio rejects shape mismatches") {
  const WorldGrid a = testing::world_from_rows({"####", "#..#", "####"});
  const WorldGrid b = testing::world_from_rows({"###", "#.#", "###"});
  const BeliefGrid belief(a);
  CHECK_THROWS_AS(coverage_ratio(belief, b), std::invalid_argument);
}

TEST_CASE("belief reveal never contradicts the world") {
  const WorldGrid world = testing::world_from_rows({
      "#####",
      "#...#",
      "#####",
  });
  BeliefGrid belief(world);
  CHECK(belief.reveal(world, {1, 1}));
  CHECK_FALSE(belief.reveal(world, {1, 1}));  // idempotent
  CHECK(belief.at({1, 1}) == world.at({1, 1}));
  CHECK(belief.known_cell_count() == 1);
}

TEST_CASE("export_snapshot writes a deterministic PGM") {
  const WorldGrid world = testing::world_from_rows({
      "###",
      "#.#",
      "###",
  });
  BeliefGrid belief(world);
  belief.reveal(world, {1, 1});
  belief.reveal(world, {0, 0});

  const fs::path dir = temp_dir();
  const fs::path a = dir / "a.pgm";
  const fs::path b = dir / "b.pgm";

  SUBCASE("no frontiers: base tones only") {
    export_snapshot(belief, {}, a);
    const std::string bytes = slurp(a);
    const std::string header = "P5\n3 3\n255\n";
    REQUIRE(bytes.size() == header.size() + 9);
    CHECK(bytes.substr(0, header.size()) == header);
    for (std::size_t i = header.size(); i < bytes.size(); ++i) {
      const auto tone = static_cast<unsigned char>(bytes[i]);
      CHECK((tone == kSnapshotFree || tone == kSnapshotOccupied ||
             tone == kSnapshotUnknown));
    }
  }

  SUBCASE("byte identical for identical inputs") {
    export_snapshot(belief, {}, a);
    export_snapshot(belief, {}, b);
    CHECK(slurp(a) == slurp(b));
  }

  SUBCASE("frontier pixel lands at its row-major offset") {
    const std::vector<Cell> frontier_cells{{1, 1}};
    export_snapshot(belief, frontier_cells, a);
    const std::string bytes = slurp(a);
    const std::size_t header = std::string("P5\n3 3\n255\n").size();
    CHECK(static_cast<unsigned char>(bytes[header + 1 * 3 + 1]) ==
          kSnapshotFrontier);
    CHECK(static_cast<unsigned char>(bytes[header + 0]) == kSnapshotOccupied);
  }

  SUBCASE("unwritable path raises") {
    CHECK_THROWS_AS(export_snapshot(belief, {}, "/nonexistent_dir_x/y.pgm"),
                    std::runtime_error);
  }
}

TEST_CASE("random worlds survive the text round trip") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 4 + static_cast<int>(uniform_below(rng, 10));
    const int h = 4 + static_cast<int>(uniform_below(rng, 10));
    WorldGrid world(w, h, 0.25, CellState::Occupied);
    for (int y = 1; y < h - 1; ++y) {
      for (int x = 1; x < w - 1; ++x) {
        world.set({x, y}, uniform_below(rng, 2) ? CellState::Free
                                                : CellState::Occupied);
      }
    }
    CHECK(load_world(serialize(world)) == world);
  }
}
