#include "coexplore/pathdist.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace coexplore {

namespace {

// Row-major neighbor order; used for deterministic tie-breaking.
constexpr int kNeighborX[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborY[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

const double kSqrt2 = std::sqrt(2.0);

double step_cost(std::int32_t axis, std::int32_t diag, double resolution) {
  return (static_cast<double>(axis) + static_cast<double>(diag) * kSqrt2) *
         resolution;
}

}  // namespace

DistanceField::DistanceField(const GridFrame& frame, Cell source)
    : frame_(frame),
      source_(source),
      axis_(frame.cell_count(), -1),
      diag_(frame.cell_count(), -1),
      free_(frame.cell_count(), 0) {}

double DistanceField::at(Cell c) const {
  const std::size_t i = frame_.index(c);
  if (axis_[i] < 0) return kUnreachable;
  return step_cost(axis_[i], diag_[i], frame_.resolution);
}

void DistanceField::set_steps(Cell c, std::int32_t axis, std::int32_t diag) {
  const std::size_t i = frame_.index(c);
  axis_[i] = axis;
  diag_[i] = diag;
}

DistanceField wavefront_distances(const BeliefGrid& belief, Cell source) {
  if (!belief.in_bounds(source) || belief.at(source) != CellState::Free) {
    throw std::invalid_argument("wavefront source must be a free belief cell");
  }
  const GridFrame& frame = belief.frame();
  DistanceField field(frame, source);
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      field.free_[frame.index({x, y})] =
          belief.at({x, y}) == CellState::Free ? 1 : 0;
    }
  }

  struct Entry {
    double cost;
    std::size_t index;
    Cell cell;
    bool operator>(const Entry& other) const {
      if (cost != other.cost) return cost > other.cost;
      return index > other.index;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;

  field.set_steps(source, 0, 0);
  queue.push({0.0, frame.index(source), source});

  while (!queue.empty()) {
    const Entry top = queue.top();
    queue.pop();
    const Cell c = top.cell;
    if (top.cost != field.at(c)) continue;  // stale entry

    const std::int32_t axis = field.axis_steps(c);
    const std::int32_t diag = field.diag_steps(c);
    for (int n = 0; n < 8; ++n) {
      const Cell nb{c.x + kNeighborX[n], c.y + kNeighborY[n]};
      if (!frame.in_bounds(nb)) continue;
      if (belief.at(nb) != CellState::Free) continue;
      const bool diagonal = kNeighborX[n] != 0 && kNeighborY[n] != 0;
      if (diagonal) {
        // no corner cutting: both side cells must be free
        if (belief.at({c.x + kNeighborX[n], c.y}) != CellState::Free) continue;
        if (belief.at({c.x, c.y + kNeighborY[n]}) != CellState::Free) continue;
      }
      const std::int32_t na = axis + (diagonal ? 0 : 1);
      const std::int32_t nd = diag + (diagonal ? 1 : 0);
      const double cost = step_cost(na, nd, frame.resolution);
      if (cost < field.at(nb)) {
        field.set_steps(nb, na, nd);
        queue.push({cost, frame.index(nb), nb});
      }
    }
  }
  return field;
}

Cell frontier_goal_cell(const GridFrame& frame, const Frontier& frontier) {
  if (frontier.cells.empty()) {
    throw std::invalid_argument("frontier has no cells");
  }
  Cell best = frontier.cells.front();
  double best_d2 = std::numeric_limits<double>::infinity();
  // Member cells are sorted by row-major index, so the first strict minimum
  // is also the row-major tie-break winner.
  for (const Cell& c : frontier.cells) {
    const Vec2 center = frame.cell_center(c);
    const double dx = center.x - frontier.centroid.x;
    const double dy = center.y - frontier.centroid.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

Matrix distance_matrix(const BeliefGrid& belief, std::span<const Cell> robots,
                       std::span<const Frontier> frontiers) {
  std::vector<Cell> goals;
  goals.reserve(frontiers.size());
  for (const Frontier& f : frontiers) {
    goals.push_back(frontier_goal_cell(belief.frame(), f));
  }
  Matrix d(robots.size(), frontiers.size());
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const DistanceField field = wavefront_distances(belief, robots[i]);
    for (std::size_t j = 0; j < goals.size(); ++j) {
      d.at(i, j) = field.at(goals[j]);
    }
  }
  return d;
}

std::vector<Cell> extract_path(const DistanceField& field, Cell goal) {
  if (!field.frame().in_bounds(goal) || !field.reachable(goal)) {
    throw std::invalid_argument("extract_path: goal is unreachable");
  }
  std::vector<Cell> path{goal};
  Cell cur = goal;
  while (!(cur == field.source())) {
    const double cur_dist = field.at(cur);
    Cell best{};
    double best_dist = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int n = 0; n < 8; ++n) {
      const Cell nb{cur.x + kNeighborX[n], cur.y + kNeighborY[n]};
      if (!field.frame().in_bounds(nb) || !field.reachable(nb)) continue;
      if (kNeighborX[n] != 0 && kNeighborY[n] != 0) {
        if (!field.traversable({cur.x + kNeighborX[n], cur.y}) ||
            !field.traversable({cur.x, cur.y + kNeighborY[n]})) {
          continue;
        }
      }
      const double d = field.at(nb);
      if (d < cur_dist && d < best_dist) {
        best = nb;
        best_dist = d;
        found = true;
      }
    }
    if (!found) {
      throw std::logic_error("extract_path: no descending neighbor");
    }
    cur = best;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace coexplore
