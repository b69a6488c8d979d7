#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "coexplore/assign.hpp"

namespace coexplore {

enum class StrategyId { CoExplore, Co122, Nearest, MinPos, NextFrontier };

inline constexpr std::array<StrategyId, 5> kAllStrategies{
    StrategyId::CoExplore, StrategyId::Co122, StrategyId::Nearest,
    StrategyId::MinPos, StrategyId::NextFrontier};

std::optional<StrategyId> strategy_from_name(std::string_view name);
std::string_view strategy_name(StrategyId id);

// Each robot independently takes its minimum-distance frontier, ties broken
// by the smaller frontier id; several robots may share a goal. Goals are
// column indices of the given matrix.
Assignment nearest_assign(const Matrix& distance);

// Per frontier, robots are ranked by distance; each robot picks the
// frontier where its rank is minimal, equal ranks resolved by distance and
// then by frontier id. Entries must be finite.
Assignment minpos_assign(const Matrix& distance);

// Utility-based pick: per robot, U = gain + distance utility + reverse
// distance, each term normalized to [0, 1] over the current frontier set.
// The distance utility is triangular with its peak midway between the
// robot's nearest and farthest frontier; the reverse distance favors
// frontiers far from the other robots. Entries must be finite.
Assignment nextfrontier_assign(const Matrix& distance,
                               std::span<const double> sizes);

// Dispatches by id on shared precomputed costs. Baseline goals are mapped
// back to original frontier ids.
Assignment strategy_assign(StrategyId id, const FrontierCosts& costs, Rng& rng);

// Convenience overload that computes the costs itself.
Assignment strategy_assign(StrategyId id, const BeliefGrid& belief,
                           std::span<const Cell> robots,
                           std::span<const Frontier> frontiers, Rng& rng);

}  // namespace coexplore
