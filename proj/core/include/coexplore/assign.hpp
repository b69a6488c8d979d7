#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coexplore/matrix.hpp"
#include "coexplore/pathdist.hpp"
#include "coexplore/rng.hpp"

namespace coexplore {

// Weights of the fused cost X = w_s * Rs + w_r * Ra + w_d * D.
struct Weights {
  double size_rank = 1.0;   // w_s
  double robot_rank = 1.0;  // w_r
  double distance = 1.0;    // w_d
};

inline constexpr Weights kCoExploreWeights{1.0, 1.0, 1.0};
inline constexpr Weights kCo122Weights{2.0, 1.0, 2.0};

// Sentinel cost of a mock frontier column; far above any real fused cost,
// which never exceeds w_s + w_r + w_d.
inline constexpr double kMockFrontierCost = 1e6;

// Per-frontier robot ranks: the closest robot gets rank 0, ties broken by
// the smaller robot index. Entries must be finite.
std::vector<int> rank_robots(std::span<const double> column);

// Frontier size ranks (Fs): the biggest frontier gets rank 0, ties broken
// by the smaller frontier id.
std::vector<int> rank_sizes(std::span<const double> sizes);

// Divides every entry by the matrix-wide maximum; an all-zero matrix passes
// through unchanged. No minimum subtraction.
Matrix normalize_max(Matrix m);

// D, Ra, Rs before and after normalization, plus the fusion weights.
struct CostTableau {
  Matrix distance;          // D, unreachable entries already substituted
  Matrix robot_rank;        // Ra
  Matrix size_rank;         // Rs (size ranks broadcast across robots)
  Matrix distance_norm;
  Matrix robot_rank_norm;
  Matrix size_rank_norm;
  Weights weights;
};

// Ranks and normalizes a finite distance matrix and the frontier sizes.
CostTableau build_tableau(const Matrix& finite_distance,
                          std::span<const double> sizes, Weights weights);

// X = w_s * Rs + w_r * Ra + w_d * D over the normalized matrices.
Matrix combine_cost(const CostTableau& tableau);

// Appends mock-frontier columns (cost kMockFrontierCost) until the matrix
// has at least as many columns as rows; returns the input unchanged
// otherwise.
Matrix pad_mock_frontiers(Matrix x);

// Minimum-cost injective row -> column map (Kuhn-Munkres). Requires
// rows <= cols and finite entries.
std::vector<std::size_t> hungarian(const Matrix& cost);

// Replaces non-finite entries with 10x the largest finite entry (10 if the
// matrix has no positive finite entry) and returns the sentinel used.
double substitute_unreachable(Matrix& d);

struct RobotGoal {
  std::size_t frontier_id = 0;
  bool random_overflow = false;  // goal came from the random spillover
};

// One goal per robot; empty when there was no reachable frontier.
// Non-overflow goals are pairwise distinct.
struct Assignment {
  std::vector<RobotGoal> goals;
};

// Shared preprocessing for every strategy: per-robot wavefronts, the raw
// distance matrix, and the surviving frontier columns (frontiers reachable
// by no robot are dropped for the cycle).
struct FrontierCosts {
  Matrix distance;                         // finite, sentinel-substituted
  Matrix raw_distance;                     // kUnreachable entries preserved
  std::vector<std::size_t> frontier_ids;   // surviving column -> original id
  std::vector<double> sizes;               // sizes of surviving frontiers
  std::vector<DistanceField> fields;       // one wavefront per robot
  double unreachable_sentinel = 0.0;
};

FrontierCosts compute_frontier_costs(const BeliefGrid& belief,
                                     std::span<const Cell> robots,
                                     std::span<const Frontier> frontiers);

// The full fused-cost pipeline on precomputed costs: tableau, padding,
// Hungarian solve, and random dispatch of robots that landed on mock
// columns. Goals are reported as original frontier ids.
Assignment fused_cost_assign(const FrontierCosts& costs, Weights weights,
                             Rng& rng);

// Convenience entry point: distances, ranking, normalization, fusion,
// padding, Hungarian solve and overflow dispatch in one call.
Assignment assign_robots(const BeliefGrid& belief, std::span<const Cell> robots,
                         std::span<const Frontier> frontiers, Weights weights,
                         Rng& rng);

}  // namespace coexplore
