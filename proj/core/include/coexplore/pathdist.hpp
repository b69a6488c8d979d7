#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "coexplore/frontier.hpp"
#include "coexplore/grid.hpp"
#include "coexplore/matrix.hpp"

namespace coexplore {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Obstacle-aware distances from one source cell over the free belief cells,
// 8-connected with axis steps costing one resolution and diagonal steps
// resolution * sqrt(2). Diagonal moves require both adjacent side cells to
// be free: a robot cannot cut through a zero-width wall corner.
//
// Distances are stored as (axis, diagonal) step counts and turned into
// meters through one fixed expression, so equal-length paths always produce
// bit-identical values no matter the relaxation order.
class DistanceField {
 public:
  DistanceField(const GridFrame& frame, Cell source);

  const GridFrame& frame() const { return frame_; }
  Cell source() const { return source_; }

  bool reachable(Cell c) const { return axis_[frame_.index(c)] >= 0; }
  // Meters, or kUnreachable.
  double at(Cell c) const;

  // Internal step counts; exposed for tests and the wavefront itself.
  std::int32_t axis_steps(Cell c) const { return axis_[frame_.index(c)]; }
  std::int32_t diag_steps(Cell c) const { return diag_[frame_.index(c)]; }
  void set_steps(Cell c, std::int32_t axis, std::int32_t diag);

  bool traversable(Cell c) const { return free_[frame_.index(c)] != 0; }

 private:
  friend DistanceField wavefront_distances(const BeliefGrid&, Cell);
  GridFrame frame_;
  Cell source_;
  std::vector<std::int32_t> axis_;
  std::vector<std::int32_t> diag_;
  std::vector<char> free_;  // traversability snapshot of the belief
};

// Shortest-path distances from the source to every reachable free cell.
// Unknown and occupied cells are not traversable. Throws if the source is
// not free in the belief.
DistanceField wavefront_distances(const BeliefGrid& belief, Cell source);

// Navigation target of a frontier: the member cell closest to the centroid
// (Euclidean, ties by row-major order). The centroid itself can be
// unreachable or even occupied, the goal cell never is.
Cell frontier_goal_cell(const GridFrame& frame, const Frontier& frontier);

// Robots x frontiers distance matrix; one wavefront per robot, entries are
// kUnreachable where no path exists.
Matrix distance_matrix(const BeliefGrid& belief, std::span<const Cell> robots,
                       std::span<const Frontier> frontiers);

// Walks from the goal back to the source, always stepping to the neighbor
// with the smallest distance (ties by row-major order), and returns the
// cells source -> goal. Throws if the goal is unreachable.
std::vector<Cell> extract_path(const DistanceField& field, Cell goal);

}  // namespace coexplore
