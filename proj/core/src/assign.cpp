#include "coexplore/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coexplore {

std::vector<int> rank_robots(std::span<const double> column) {
  std::vector<std::size_t> order(column.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (column[a] != column[b]) return column[a] < column[b];
    return a < b;
  });
  std::vector<int> ranks(column.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<int>(r);
  }
  return ranks;
}

std::vector<int> rank_sizes(std::span<const double> sizes) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];  // bigger first
    return a < b;
  });
  std::vector<int> ranks(sizes.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<int>(r);
  }
  return ranks;
}

Matrix normalize_max(Matrix m) {
  const double max = m.max_value();
  if (max == 0.0) return m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(r, c) /= max;
    }
  }
  return m;
}

CostTableau build_tableau(const Matrix& finite_distance,
                          std::span<const double> sizes, Weights weights) {
  const std::size_t robots = finite_distance.rows();
  const std::size_t frontiers = finite_distance.cols();
  if (sizes.size() != frontiers) {
    throw std::invalid_argument("build_tableau: size vector/matrix mismatch");
  }

  CostTableau t;
  t.weights = weights;
  t.distance = finite_distance;

  t.robot_rank = Matrix(robots, frontiers);
  std::vector<double> column(robots);
  for (std::size_t j = 0; j < frontiers; ++j) {
    for (std::size_t i = 0; i < robots; ++i) column[i] = finite_distance.at(i, j);
    const std::vector<int> ranks = rank_robots(column);
    for (std::size_t i = 0; i < robots; ++i) {
      t.robot_rank.at(i, j) = static_cast<double>(ranks[i]);
    }
  }

  const std::vector<int> size_ranks = rank_sizes(sizes);
  t.size_rank = Matrix(robots, frontiers);
  for (std::size_t i = 0; i < robots; ++i) {
    for (std::size_t j = 0; j < frontiers; ++j) {
      t.size_rank.at(i, j) = static_cast<double>(size_ranks[j]);
    }
  }

  t.distance_norm = normalize_max(t.distance);
  t.robot_rank_norm = normalize_max(t.robot_rank);
  t.size_rank_norm = normalize_max(t.size_rank);
  return t;
}

Matrix combine_cost(const CostTableau& t) {
  Matrix x(t.distance_norm.rows(), t.distance_norm.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      x.at(r, c) = t.weights.size_rank * t.size_rank_norm.at(r, c) +
                   t.weights.robot_rank * t.robot_rank_norm.at(r, c) +
                   t.weights.distance * t.distance_norm.at(r, c);
    }
  }
  return x;
}

Matrix pad_mock_frontiers(Matrix x) {
  if (x.cols() >= x.rows()) return x;
  Matrix padded(x.rows(), x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.rows(); ++c) {
      padded.at(r, c) = c < x.cols() ? x.at(r, c) : kMockFrontierCost;
    }
  }
  return padded;
}

// Potential-based Kuhn-Munkres, O(rows^2 * cols). Indices are 1-based
// internally; column 0 is the virtual unmatched slot.
std::vector<std::size_t> hungarian(const Matrix& cost) {
  const std::size_t n = cost.rows();
  const std::size_t m = cost.cols();
  if (n == 0) return {};
  if (n > m) {
    throw std::invalid_argument("hungarian: more rows than columns; pad first");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!std::isfinite(cost.at(r, c))) {
        throw std::invalid_argument("hungarian: entries must be finite");
      }
    }
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_slack(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double slack = cost.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> result(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (match[j] != 0) result[match[j] - 1] = j - 1;
  }
  return result;
}

double substitute_unreachable(Matrix& d) {
  double max_finite = 0.0;
  bool any_finite = false;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const double v = d.at(r, c);
      if (std::isfinite(v) && v > max_finite) {
        max_finite = v;
        any_finite = true;
      }
    }
  }
  // Keep the sentinel strictly above every finite entry even when the best
  // finite distance is 0 (robot standing on a goal cell).
  const double sentinel = 10.0 * (any_finite && max_finite > 0.0 ? max_finite : 1.0);
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (!std::isfinite(d.at(r, c))) d.at(r, c) = sentinel;
    }
  }
  return sentinel;
}

FrontierCosts compute_frontier_costs(const BeliefGrid& belief,
                                     std::span<const Cell> robots,
                                     std::span<const Frontier> frontiers) {
  FrontierCosts costs;
  costs.fields.reserve(robots.size());
  for (const Cell& robot : robots) {
    costs.fields.push_back(wavefront_distances(belief, robot));
  }

  std::vector<Cell> goals;
  goals.reserve(frontiers.size());
  for (const Frontier& f : frontiers) {
    goals.push_back(frontier_goal_cell(belief.frame(), f));
  }

  // Drop frontiers no robot can reach; they cannot be explored this cycle.
  for (std::size_t j = 0; j < frontiers.size(); ++j) {
    bool reachable = false;
    for (const DistanceField& field : costs.fields) {
      if (field.reachable(goals[j])) {
        reachable = true;
        break;
      }
    }
    if (reachable) {
      costs.frontier_ids.push_back(j);
      costs.sizes.push_back(static_cast<double>(frontiers[j].size()));
    }
  }

  costs.raw_distance = Matrix(robots.size(), costs.frontier_ids.size());
  for (std::size_t i = 0; i < robots.size(); ++i) {
    for (std::size_t j = 0; j < costs.frontier_ids.size(); ++j) {
      costs.raw_distance.at(i, j) = costs.fields[i].at(goals[costs.frontier_ids[j]]);
    }
  }
  costs.distance = costs.raw_distance;
  costs.unreachable_sentinel = substitute_unreachable(costs.distance);
  return costs;
}

Assignment fused_cost_assign(const FrontierCosts& costs, Weights weights,
                             Rng& rng) {
  const std::size_t robots = costs.distance.rows();
  const std::size_t frontiers = costs.frontier_ids.size();
  Assignment assignment;
  if (frontiers == 0) return assignment;

  const CostTableau tableau = build_tableau(costs.distance, costs.sizes, weights);
  const Matrix x = pad_mock_frontiers(combine_cost(tableau));
  const std::vector<std::size_t> columns = hungarian(x);

  assignment.goals.resize(robots);
  for (std::size_t i = 0; i < robots; ++i) {
    if (columns[i] < frontiers) {
      assignment.goals[i] = {costs.frontier_ids[columns[i]], false};
    } else {
      const std::size_t pick = uniform_below(rng, frontiers);
      assignment.goals[i] = {costs.frontier_ids[pick], true};
    }
  }
  return assignment;
}

Assignment assign_robots(const BeliefGrid& belief, std::span<const Cell> robots,
                         std::span<const Frontier> frontiers, Weights weights,
                         Rng& rng) {
  if (robots.empty()) {
    throw std::invalid_argument("assign_robots: need at least one robot");
  }
  const FrontierCosts costs = compute_frontier_costs(belief, robots, frontiers);
  return fused_cost_assign(costs, weights, rng);
}

}  // namespace coexplore
