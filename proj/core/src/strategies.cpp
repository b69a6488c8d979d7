#include "coexplore/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coexplore {

namespace {

Assignment remap_to_original_ids(Assignment a, const FrontierCosts& costs) {
  for (RobotGoal& goal : a.goals) {
    goal.frontier_id = costs.frontier_ids[goal.frontier_id];
  }
  return a;
}

}  // namespace

std::optional<StrategyId> strategy_from_name(std::string_view name) {
  if (name == "coexplore") return StrategyId::CoExplore;
  if (name == "co122") return StrategyId::Co122;
  if (name == "nearest") return StrategyId::Nearest;
  if (name == "minpos") return StrategyId::MinPos;
  if (name == "nextfrontier") return StrategyId::NextFrontier;
  return std::nullopt;
}

std::string_view strategy_name(StrategyId id) {
  switch (id) {
    case StrategyId::CoExplore: return "coexplore";
    case StrategyId::Co122: return "co122";
    case StrategyId::Nearest: return "nearest";
    case StrategyId::MinPos: return "minpos";
    case StrategyId::NextFrontier: return "nextfrontier";
  }
  return "unknown";
}

Assignment nearest_assign(const Matrix& distance) {
  if (distance.cols() == 0) {
    throw std::invalid_argument("nearest_assign: need at least one frontier");
  }
  Assignment a;
  a.goals.resize(distance.rows());
  for (std::size_t i = 0; i < distance.rows(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < distance.cols(); ++j) {
      if (distance.at(i, j) < distance.at(i, best)) best = j;
    }
    a.goals[i] = {best, false};
  }
  return a;
}

Assignment minpos_assign(const Matrix& distance) {
  if (distance.cols() == 0) {
    throw std::invalid_argument("minpos_assign: need at least one frontier");
  }
  const std::size_t robots = distance.rows();
  const std::size_t frontiers = distance.cols();

  Matrix robot_rank(robots, frontiers);
  std::vector<double> column(robots);
  for (std::size_t j = 0; j < frontiers; ++j) {
    for (std::size_t i = 0; i < robots; ++i) column[i] = distance.at(i, j);
    const std::vector<int> ranks = rank_robots(column);
    for (std::size_t i = 0; i < robots; ++i) {
      robot_rank.at(i, j) = static_cast<double>(ranks[i]);
    }
  }

  Assignment a;
  a.goals.resize(robots);
  for (std::size_t i = 0; i < robots; ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < frontiers; ++j) {
      const double rank = robot_rank.at(i, j);
      const double best_rank = robot_rank.at(i, best);
      if (rank < best_rank ||
          (rank == best_rank && distance.at(i, j) < distance.at(i, best))) {
        best = j;
      }
    }
    a.goals[i] = {best, false};
  }
  return a;
}

Assignment nextfrontier_assign(const Matrix& distance,
                               std::span<const double> sizes) {
  const std::size_t robots = distance.rows();
  const std::size_t frontiers = distance.cols();
  if (frontiers == 0) {
    throw std::invalid_argument("nextfrontier_assign: need at least one frontier");
  }
  if (sizes.size() != frontiers) {
    throw std::invalid_argument("nextfrontier_assign: size vector mismatch");
  }

  double max_size = 0.0;
  for (double s : sizes) max_size = std::max(max_size, s);

  Assignment a;
  a.goals.resize(robots);
  std::vector<double> rev_num(frontiers);
  for (std::size_t i = 0; i < robots; ++i) {
    double d_min = std::numeric_limits<double>::infinity();
    double d_max = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < frontiers; ++j) {
      d_min = std::min(d_min, distance.at(i, j));
      d_max = std::max(d_max, distance.at(i, j));
    }

    // Reverse distance: how far a frontier is from the closest other robot.
    double rev_den = 0.0;
    for (std::size_t j = 0; j < frontiers; ++j) {
      double other = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < robots; ++k) {
        if (k == i) continue;
        other = std::min(other, distance.at(k, j));
      }
      rev_num[j] = robots > 1 ? other : 0.0;
      rev_den = std::max(rev_den, rev_num[j]);
    }

    std::size_t best = 0;
    double best_utility = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < frontiers; ++j) {
      const double gain = max_size > 0.0 ? sizes[j] / max_size : 1.0;
      double dist_util = 1.0;
      if (d_max > d_min) {
        const double t = 2.0 * (distance.at(i, j) - d_min) / (d_max - d_min) - 1.0;
        dist_util = 1.0 - std::abs(t);
      }
      double rev = 1.0;
      if (robots > 1) rev = rev_den > 0.0 ? rev_num[j] / rev_den : 1.0;
      const double utility = gain + dist_util + rev;
      if (utility > best_utility) {
        best_utility = utility;
        best = j;
      }
    }
    a.goals[i] = {best, false};
  }
  return a;
}

Assignment strategy_assign(StrategyId id, const FrontierCosts& costs, Rng& rng) {
  if (costs.frontier_ids.empty()) return {};
  switch (id) {
    case StrategyId::CoExplore:
      return fused_cost_assign(costs, kCoExploreWeights, rng);
    case StrategyId::Co122:
      return fused_cost_assign(costs, kCo122Weights, rng);
    case StrategyId::Nearest:
      return remap_to_original_ids(nearest_assign(costs.distance), costs);
    case StrategyId::MinPos:
      return remap_to_original_ids(minpos_assign(costs.distance), costs);
    case StrategyId::NextFrontier:
      return remap_to_original_ids(
          nextfrontier_assign(costs.distance, costs.sizes), costs);
  }
  throw std::invalid_argument("strategy_assign: unknown strategy");
}

Assignment strategy_assign(StrategyId id, const BeliefGrid& belief,
                           std::span<const Cell> robots,
                           std::span<const Frontier> frontiers, Rng& rng) {
  const FrontierCosts costs = compute_frontier_costs(belief, robots, frontiers);
  return strategy_assign(id, costs, rng);
}

}  // namespace coexplore
