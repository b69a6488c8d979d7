#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coexplore/frontier.hpp"
#include "coexplore/grid.hpp"
#include "coexplore/rng.hpp"
#include "coexplore/sensor.hpp"
#include "coexplore/strategies.hpp"

namespace coexplore {

struct RobotState {
  RobotPose pose;
  double speed = 0.5;                    // meters per second
  std::optional<std::size_t> goal;       // frontier id of the current pass
  bool goal_from_overflow = false;
  std::vector<Cell> path;                // cells toward the committed target
  std::size_t path_cursor = 0;           // next waypoint
  double odometry = 0.0;                 // meters traveled
  bool arrival_pending = false;          // reached the path end this tick
};

struct SimConfig {
  double dt = 0.2;              // seconds per tick
  double replan_period = 2.0;   // 0.5 Hz reassignment cadence
  double sample_period = 5.0;   // metrics sampling cadence
  double max_sim_time = 900.0;  // DNF past this point
  double robot_speed = 0.5;
  LidarSpec lidar{};
  StrategyId strategy = StrategyId::CoExplore;
  std::uint64_t seed = 0;
  int min_frontier_size = 1;
};

struct MetricsSample {
  double t = 0.0;
  double coverage = 0.0;
  std::vector<double> odometry;  // per robot, meters
};

struct RunMetrics {
  std::vector<MetricsSample> samples;
  std::optional<double> exploration_time;  // empty when the run did not finish
  std::vector<double> replan_times;
  double final_coverage = 0.0;
  std::vector<double> final_odometry;
  BeliefGrid final_belief;
  std::vector<Cell> final_frontier_cells;

  bool finished() const { return exploration_time.has_value(); }
};

// Advances the robot along its remaining waypoints by at most `budget`
// meters, clamping at the path end. Updates position, heading (direction of
// last motion) and odometry.
void advance_along_path(RobotState& robot, const GridFrame& frame,
                        double budget);

// Discrete-time exploration loop. Each tick the robots advance along their
// paths, sense, and on replan ticks the strategy reassigns everyone against
// the frontiers of the updated belief. The run ends when no reachable
// frontier remains.
class Simulation {
 public:
  Simulation(WorldGrid world, std::span<const Cell> starts, SimConfig config);

  // Advances one tick; must not be called after termination.
  void step();

  bool finished() const { return finished_; }
  double time() const;
  const WorldGrid& world() const { return world_; }
  const BeliefGrid& belief() const { return belief_; }
  const SimConfig& config() const { return config_; }
  std::span<const RobotState> robots() const { return robots_; }
  const std::vector<Frontier>& current_frontiers() const { return frontiers_; }
  std::optional<double> exploration_time() const { return exploration_time_; }
  const std::vector<MetricsSample>& samples() const { return samples_; }
  const std::vector<double>& replan_times() const { return replan_times_; }

  // Steps until termination or the configured time limit, then returns the
  // collected metrics (with the terminal row appended).
  RunMetrics finish();

 private:
  void move_robot(RobotState& robot);
  void sense_robot(RobotState& robot);
  void reveal_neighborhood(const RobotState& robot);
  bool is_frontier_cell(Cell c) const;
  void replan();
  void sample_metrics();
  std::vector<Cell> robot_cells() const;

  WorldGrid world_;
  BeliefGrid belief_;
  SimConfig config_;
  std::vector<RobotState> robots_;
  std::vector<Frontier> frontiers_;
  Rng rng_;

  std::int64_t tick_ = 0;
  std::int64_t replan_every_ = 1;
  std::int64_t sample_every_ = 1;
  bool finished_ = false;
  std::optional<double> exploration_time_;
  std::vector<MetricsSample> samples_;
  std::vector<double> replan_times_;
};

// One full run: initial sensing, t = 0 assignment, stepping until the
// reachable frontier set is empty or max_sim_time elapses.
RunMetrics run(const WorldGrid& world, std::span<const Cell> starts,
               const SimConfig& config);

}  // namespace coexplore
