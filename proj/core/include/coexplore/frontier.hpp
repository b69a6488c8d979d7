#pragma once

#include <span>
#include <vector>

#include "coexplore/grid.hpp"

namespace coexplore {

// One cluster of frontier cells. Cells are stored sorted by row-major
// index; the centroid is the mean of the member cell centers in meters and
// may itself land on a cell that is not part of the frontier.
struct Frontier {
  int id = 0;
  std::vector<Cell> cells;
  Vec2 centroid;
  int size() const { return static_cast<int>(cells.size()); }
};

// All free belief cells sharing an edge with at least one Unknown cell,
// sorted by row-major index. Corner-only contact does not count: such a
// cell exposes no surface that a ray could ever enter.
std::vector<Cell> detect_frontier_cells(const BeliefGrid& belief);

// Partitions frontier cells into 8-connected components. Components are
// ordered by their minimum row-major cell index and ids assigned 0..k-1 in
// that order, so identical beliefs always produce identical frontiers.
std::vector<Frontier> cluster_frontiers(const GridFrame& frame,
                                        std::span<const Cell> cells);

// detect + cluster in one call.
std::vector<Frontier> find_frontiers(const BeliefGrid& belief);

// Flattens frontier cell lists, e.g. for snapshot export.
std::vector<Cell> all_frontier_cells(std::span<const Frontier> frontiers);

}  // namespace coexplore
