#include "support/grids.hpp"

#include <stdexcept>

namespace coexplore::testing {

WorldGrid world_from_rows(const std::vector<std::string>& rows,
                          double resolution) {
  if (rows.empty()) throw std::invalid_argument("no rows");
  const int width = static_cast<int>(rows.front().size());
  const int height = static_cast<int>(rows.size());
  WorldGrid world(width, height, resolution, CellState::Occupied);
  for (int y = 0; y < height; ++y) {
    if (static_cast<int>(rows[y].size()) != width) {
      throw std::invalid_argument("ragged rows");
    }
    for (int x = 0; x < width; ++x) {
      const char ch = rows[y][static_cast<std::size_t>(x)];
      if (ch == '.') {
        world.set({x, y}, CellState::Free);
      } else if (ch == '#') {
        world.set({x, y}, CellState::Occupied);
      } else {
        throw std::invalid_argument("world rows use '#' and '.' only");
      }
    }
  }
  return world;
}

BeliefGrid belief_from_rows(const WorldGrid& world,
                            const std::vector<std::string>& rows) {
  if (static_cast<int>(rows.size()) != world.height()) {
    throw std::invalid_argument("belief rows/world height mismatch");
  }
  BeliefGrid belief(world);
  for (int y = 0; y < world.height(); ++y) {
    if (static_cast<int>(rows[y].size()) != world.width()) {
      throw std::invalid_argument("belief rows/world width mismatch");
    }
    for (int x = 0; x < world.width(); ++x) {
      const char ch = rows[y][static_cast<std::size_t>(x)];
      if (ch == '?') continue;
      const CellState expected =
          ch == '#' ? CellState::Occupied : CellState::Free;
      if (world.at({x, y}) != expected) {
        throw std::invalid_argument("belief row disagrees with world");
      }
      belief.reveal(world, {x, y});
    }
  }
  return belief;
}

BeliefGrid full_belief(const WorldGrid& world) {
  BeliefGrid belief(world);
  for (int y = 0; y < world.height(); ++y) {
    for (int x = 0; x < world.width(); ++x) {
      belief.reveal(world, {x, y});
    }
  }
  return belief;
}

}  // namespace coexplore::testing
