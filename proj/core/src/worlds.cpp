#include "coexplore/worlds.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coexplore {

namespace {

constexpr int kNeighbor4X[4] = {0, -1, 1, 0};
constexpr int kNeighbor4Y[4] = {-1, 0, 0, 1};
constexpr int kNeighbor8X[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighbor8Y[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

bool free_space_connected(const WorldGrid& world) {
  const auto components = free_components(world);
  return components.size() == 1;
}

struct Rect {
  int x0, y0, x1, y1;  // inclusive
  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
};

void split_rooms(WorldGrid& grid, Rect rect, int room_min, int room_max,
                 int door_width, Rng& rng) {
  const bool can_split_v = rect.width() >= 2 * room_min + 1;
  const bool can_split_h = rect.height() >= 2 * room_min + 1;
  const bool too_wide = rect.width() > room_max;
  const bool too_tall = rect.height() > room_max;
  if ((!too_wide && !too_tall) || (!can_split_v && !can_split_h)) return;

  bool vertical;
  if (too_wide && can_split_v && (!too_tall || !can_split_h)) {
    vertical = true;
  } else if (too_tall && can_split_h && (!too_wide || !can_split_v)) {
    vertical = false;
  } else {
    vertical = rect.width() >= rect.height();
  }

  if (vertical) {
    const int wall_x =
        rect.x0 + room_min + uniform_int(rng, 0, rect.width() - 2 * room_min - 1);
    const int door = door_width > rect.height() ? rect.height() : door_width;
    const int door_y = rect.y0 + uniform_int(rng, 0, rect.height() - door);
    for (int y = rect.y0; y <= rect.y1; ++y) {
      if (y >= door_y && y < door_y + door) continue;
      grid.set({wall_x, y}, CellState::Occupied);
    }
    split_rooms(grid, {rect.x0, rect.y0, wall_x - 1, rect.y1}, room_min,
                room_max, door_width, rng);
    split_rooms(grid, {wall_x + 1, rect.y0, rect.x1, rect.y1}, room_min,
                room_max, door_width, rng);
  } else {
    const int wall_y =
        rect.y0 + room_min + uniform_int(rng, 0, rect.height() - 2 * room_min - 1);
    const int door = door_width > rect.width() ? rect.width() : door_width;
    const int door_x = rect.x0 + uniform_int(rng, 0, rect.width() - door);
    for (int x = rect.x0; x <= rect.x1; ++x) {
      if (x >= door_x && x < door_x + door) continue;
      grid.set({x, wall_y}, CellState::Occupied);
    }
    split_rooms(grid, {rect.x0, rect.y0, rect.x1, wall_y - 1}, room_min,
                room_max, door_width, rng);
    split_rooms(grid, {rect.x0, wall_y + 1, rect.x1, rect.y1}, room_min,
                room_max, door_width, rng);
  }
}

}  // namespace

std::vector<std::vector<Cell>> free_components(const WorldGrid& world) {
  std::vector<char> visited(world.frame().cell_count(), 0);
  std::vector<std::vector<Cell>> components;
  std::vector<Cell> stack;
  for (int y = 0; y < world.height(); ++y) {
    for (int x = 0; x < world.width(); ++x) {
      const Cell seed{x, y};
      if (world.at(seed) != CellState::Free) continue;
      if (visited[world.frame().index(seed)]) continue;
      std::vector<Cell> component;
      stack.assign(1, seed);
      visited[world.frame().index(seed)] = 1;
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        component.push_back(c);
        for (int n = 0; n < 4; ++n) {
          const Cell nb{c.x + kNeighbor4X[n], c.y + kNeighbor4Y[n]};
          if (!world.in_bounds(nb)) continue;
          if (world.at(nb) != CellState::Free) continue;
          const std::size_t i = world.frame().index(nb);
          if (visited[i]) continue;
          visited[i] = 1;
          stack.push_back(nb);
        }
      }
      std::sort(component.begin(), component.end(),
                [&](const Cell& a, const Cell& b) {
                  return world.frame().index(a) < world.frame().index(b);
                });
      components.push_back(std::move(component));
    }
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return components;
}

WorldGrid generate_maze(int width, int height, int corridor_width,
                        std::uint64_t seed, double resolution) {
  if (corridor_width < 1) {
    throw std::invalid_argument("maze corridor width must be >= 1");
  }
  const int period = corridor_width + 1;
  const int cols = (width - 1) / period;
  const int rows = (height - 1) / period;
  if (cols < 2 || rows < 2) {
    throw std::invalid_argument("maze dimensions too small for corridor width");
  }

  WorldGrid grid(width, height, resolution, CellState::Occupied);
  auto carve = [&](int cx0, int cy0, int w, int h) {
    for (int y = cy0; y < cy0 + h; ++y) {
      for (int x = cx0; x < cx0 + w; ++x) {
        grid.set({x, y}, CellState::Free);
      }
    }
  };
  auto cell_origin = [&](int mx, int my) {
    return Cell{1 + mx * period, 1 + my * period};
  };

  Rng rng(seed);
  std::vector<char> visited(static_cast<std::size_t>(cols) * rows, 0);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  visited[0] = 1;
  carve(1, 1, corridor_width, corridor_width);

  while (!stack.empty()) {
    const auto [mx, my] = stack.back();
    int nx[4], ny[4];
    int n = 0;
    const int dx[4] = {0, 1, 0, -1};
    const int dy[4] = {-1, 0, 1, 0};
    for (int d = 0; d < 4; ++d) {
      const int cx = mx + dx[d], cy = my + dy[d];
      if (cx < 0 || cy < 0 || cx >= cols || cy >= rows) continue;
      if (visited[static_cast<std::size_t>(cy) * cols + cx]) continue;
      nx[n] = cx;
      ny[n] = cy;
      ++n;
    }
    if (n == 0) {
      stack.pop_back();
      continue;
    }
    const int pick = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    const int cx = nx[pick], cy = ny[pick];
    // Carve the destination block and the wall strip between the two blocks.
    const Cell from = cell_origin(mx, my);
    const Cell to = cell_origin(cx, cy);
    carve(to.x, to.y, corridor_width, corridor_width);
    carve(std::min(from.x, to.x), std::min(from.y, to.y),
          cx != mx ? period + corridor_width : corridor_width,
          cy != my ? period + corridor_width : corridor_width);
    visited[static_cast<std::size_t>(cy) * cols + cx] = 1;
    stack.emplace_back(cx, cy);
  }
  return grid;
}

WorldGrid generate_office(int width, int height, int room_min, int room_max,
                          int door_width, std::uint64_t seed,
                          double resolution) {
  if (room_min < 2 || room_max < room_min || door_width < 1 ||
      door_width > room_min) {
    throw std::invalid_argument("invalid office room/door parameters");
  }
  if (width < room_min + 2 || height < room_min + 2) {
    throw std::invalid_argument("office dimensions too small");
  }

  // Perpendicular child walls can land on a parent door; rejection keeps
  // only layouts whose free space stays connected.
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    WorldGrid grid(width, height, resolution, CellState::Occupied);
    for (int y = 1; y < height - 1; ++y) {
      for (int x = 1; x < width - 1; ++x) {
        grid.set({x, y}, CellState::Free);
      }
    }
    split_rooms(grid, {1, 1, width - 2, height - 2}, room_min, room_max,
                door_width, rng);
    if (free_space_connected(grid)) return grid;
  }
  throw std::runtime_error("could not generate a connected office layout");
}

WorldGrid generate_open(int width, int height, int obstacle_count,
                        int obstacle_size, std::uint64_t seed,
                        double resolution) {
  if (obstacle_count < 0 || obstacle_size < 1) {
    throw std::invalid_argument("invalid open-world obstacle parameters");
  }
  if (width < 3 || height < 3) {
    throw std::invalid_argument("open-world dimensions too small");
  }

  WorldGrid grid(width, height, resolution, CellState::Occupied);
  for (int y = 1; y < height - 1; ++y) {
    for (int x = 1; x < width - 1; ++x) {
      grid.set({x, y}, CellState::Free);
    }
  }

  Rng rng(seed);
  for (int k = 0; k < obstacle_count; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      const int ow = uniform_int(rng, 1, obstacle_size);
      const int oh = uniform_int(rng, 1, obstacle_size);
      if (width - 2 - ow < 1 || height - 2 - oh < 1) continue;
      const int x0 = uniform_int(rng, 1, width - 1 - ow);
      const int y0 = uniform_int(rng, 1, height - 1 - oh);
      bool clear = true;
      for (int y = y0; y < y0 + oh && clear; ++y) {
        for (int x = x0; x < x0 + ow && clear; ++x) {
          if (grid.at({x, y}) != CellState::Free) clear = false;
        }
      }
      if (!clear) continue;
      for (int y = y0; y < y0 + oh; ++y) {
        for (int x = x0; x < x0 + ow; ++x) {
          grid.set({x, y}, CellState::Occupied);
        }
      }
      if (free_space_connected(grid)) {
        placed = true;
      } else {
        for (int y = y0; y < y0 + oh; ++y) {
          for (int x = x0; x < x0 + ow; ++x) {
            grid.set({x, y}, CellState::Free);
          }
        }
      }
    }
    if (!placed) {
      throw std::runtime_error("failed to place obstacle without disconnecting "
                               "the free space");
    }
  }
  return grid;
}

std::vector<Cell> clustered_starts(const WorldGrid& world, int count, Rng& rng) {
  if (count < 1) throw std::invalid_argument("need at least one start");
  const auto components = free_components(world);
  if (components.empty()) {
    throw std::invalid_argument("world has no free cells");
  }
  const std::vector<Cell>& region = components.front();
  if (static_cast<int>(region.size()) < count) {
    throw std::invalid_argument("largest free region too small for the robots");
  }

  const Cell anchor = region[uniform_below(rng, region.size())];

  // Nearest free cells around the anchor in BFS order.
  std::vector<char> visited(world.frame().cell_count(), 0);
  std::deque<Cell> queue{anchor};
  visited[world.frame().index(anchor)] = 1;
  std::vector<Cell> starts;
  while (!queue.empty() && static_cast<int>(starts.size()) < count) {
    const Cell c = queue.front();
    queue.pop_front();
    starts.push_back(c);
    for (int n = 0; n < 8; ++n) {
      const Cell nb{c.x + kNeighbor8X[n], c.y + kNeighbor8Y[n]};
      if (!world.in_bounds(nb)) continue;
      if (world.at(nb) != CellState::Free) continue;
      const std::size_t i = world.frame().index(nb);
      if (visited[i]) continue;
      visited[i] = 1;
      queue.push_back(nb);
    }
  }
  if (static_cast<int>(starts.size()) < count) {
    throw std::invalid_argument("not enough connected free cells for starts");
  }
  return starts;
}

}  // namespace coexplore
