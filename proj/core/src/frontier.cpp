#include "coexplore/frontier.hpp"

#include <algorithm>
#include <unordered_map>

namespace coexplore {

namespace {

constexpr int kNeighborX[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborY[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kEdgeX[4] = {0, -1, 1, 0};
constexpr int kEdgeY[4] = {-1, 0, 0, 1};

}  // namespace

std::vector<Cell> detect_frontier_cells(const BeliefGrid& belief) {
  // Edge adjacency for the unknown-contact test: a cell that touches
  // unknown space only across a corner offers no surface a ray could ever
  // enter, so treating it as explorable would leave frontiers that sensing
  // cannot resolve.
  std::vector<Cell> result;
  for (int y = 0; y < belief.height(); ++y) {
    for (int x = 0; x < belief.width(); ++x) {
      const Cell c{x, y};
      if (belief.at(c) != CellState::Free) continue;
      bool frontier = false;
      for (int n = 0; n < 4 && !frontier; ++n) {
        const Cell nb{x + kEdgeX[n], y + kEdgeY[n]};
        if (belief.in_bounds(nb) && belief.at(nb) == CellState::Unknown) {
          frontier = true;
        }
      }
      if (frontier) result.push_back(c);
    }
  }
  return result;
}

std::vector<Frontier> cluster_frontiers(const GridFrame& frame,
                                        std::span<const Cell> cells) {
  std::unordered_map<std::size_t, int> component;  // cell index -> component
  component.reserve(cells.size());
  for (const Cell& c : cells) component.emplace(frame.index(c), -1);

  std::vector<Frontier> frontiers;
  std::vector<Cell> stack;
  // Seeds are scanned in row-major order, so each component is discovered at
  // its minimum row-major cell and component ids are already sorted.
  std::vector<Cell> seeds(cells.begin(), cells.end());
  std::sort(seeds.begin(), seeds.end(), [&](const Cell& a, const Cell& b) {
    return frame.index(a) < frame.index(b);
  });

  for (const Cell& seed : seeds) {
    if (component.at(frame.index(seed)) >= 0) continue;
    const int id = static_cast<int>(frontiers.size());
    Frontier f;
    f.id = id;
    stack.assign(1, seed);
    component[frame.index(seed)] = id;
    while (!stack.empty()) {
      const Cell c = stack.back();
      stack.pop_back();
      f.cells.push_back(c);
      for (int n = 0; n < 8; ++n) {
        const Cell nb{c.x + kNeighborX[n], c.y + kNeighborY[n]};
        if (!frame.in_bounds(nb)) continue;
        auto it = component.find(frame.index(nb));
        if (it == component.end() || it->second >= 0) continue;
        it->second = id;
        stack.push_back(nb);
      }
    }
    std::sort(f.cells.begin(), f.cells.end(), [&](const Cell& a, const Cell& b) {
      return frame.index(a) < frame.index(b);
    });
    double sx = 0.0, sy = 0.0;
    for (const Cell& c : f.cells) {
      const Vec2 center = frame.cell_center(c);
      sx += center.x;
      sy += center.y;
    }
    f.centroid = {sx / static_cast<double>(f.cells.size()),
                  sy / static_cast<double>(f.cells.size())};
    frontiers.push_back(std::move(f));
  }
  return frontiers;
}

std::vector<Frontier> find_frontiers(const BeliefGrid& belief) {
  return cluster_frontiers(belief.frame(), detect_frontier_cells(belief));
}

std::vector<Cell> all_frontier_cells(std::span<const Frontier> frontiers) {
  std::vector<Cell> cells;
  for (const Frontier& f : frontiers) {
    cells.insert(cells.end(), f.cells.begin(), f.cells.end());
  }
  return cells;
}

}  // namespace coexplore
