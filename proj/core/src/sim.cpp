#include "coexplore/sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "coexplore/pathdist.hpp"

namespace coexplore {

namespace {

constexpr int kNeighborX[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kNeighborY[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

std::int64_t ticks_per_period(double period, double dt, const char* name) {
  const double ratio = period / dt;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9) {
    throw std::invalid_argument(std::string(name) +
                                " must be a positive integer multiple of dt");
  }
  return static_cast<std::int64_t>(rounded);
}

}  // namespace

Simulation::Simulation(WorldGrid world, std::span<const Cell> starts,
                       SimConfig config)
    : world_(std::move(world)), belief_(world_), config_(config),
      rng_(config.seed) {
  if (config_.dt <= 0.0) throw std::invalid_argument("dt must be > 0");
  replan_every_ = ticks_per_period(config_.replan_period, config_.dt,
                                   "replan_period");
  sample_every_ = ticks_per_period(config_.sample_period, config_.dt,
                                   "sample_period");
  validate(config_.lidar);

  if (starts.empty()) {
    throw std::invalid_argument("need at least one start cell");
  }
  std::set<std::pair<int, int>> seen;
  for (const Cell& start : starts) {
    if (!world_.in_bounds(start) || world_.at(start) != CellState::Free) {
      throw std::invalid_argument("start cells must be free world cells");
    }
    if (!seen.insert({start.x, start.y}).second) {
      throw std::invalid_argument("start cells must be distinct");
    }
    RobotState robot;
    robot.pose.position = world_.cell_center(start);
    robot.pose.heading = 0.0;
    robot.speed = config_.robot_speed;
    robots_.push_back(std::move(robot));
  }

  for (RobotState& robot : robots_) {
    sense(world_, belief_, robot.pose, config_.lidar);
    reveal_neighborhood(robot);
  }
  replan();
  sample_metrics();
}

double Simulation::time() const {
  return static_cast<double>(tick_) * config_.dt;
}

std::vector<Cell> Simulation::robot_cells() const {
  std::vector<Cell> cells;
  cells.reserve(robots_.size());
  for (const RobotState& robot : robots_) {
    cells.push_back(world_.cell_at(robot.pose.position));
  }
  return cells;
}

void advance_along_path(RobotState& robot, const GridFrame& frame,
                        double budget) {
  while (budget > 1e-12 && robot.path_cursor < robot.path.size()) {
    const Vec2 target = frame.cell_center(robot.path[robot.path_cursor]);
    const double dx = target.x - robot.pose.position.x;
    const double dy = target.y - robot.pose.position.y;
    const double dist = std::hypot(dx, dy);
    if (dist <= 1e-12) {
      ++robot.path_cursor;
      if (robot.path_cursor == robot.path.size()) robot.arrival_pending = true;
      continue;
    }
    if (dist <= budget) {
      robot.pose.position = target;
      robot.pose.heading = std::atan2(dy, dx);
      robot.odometry += dist;
      budget -= dist;
      ++robot.path_cursor;
      if (robot.path_cursor == robot.path.size()) robot.arrival_pending = true;
    } else {
      robot.pose.position.x += dx / dist * budget;
      robot.pose.position.y += dy / dist * budget;
      robot.pose.heading = std::atan2(dy, dx);
      robot.odometry += budget;
      budget = 0.0;
    }
  }
}

void Simulation::move_robot(RobotState& robot) {
  advance_along_path(robot, world_.frame(), robot.speed * config_.dt);
}

bool Simulation::is_frontier_cell(Cell c) const {
  if (belief_.at(c) != CellState::Free) return false;
  constexpr int kEdgeX[4] = {0, -1, 1, 0};
  constexpr int kEdgeY[4] = {-1, 0, 0, 1};
  for (int n = 0; n < 4; ++n) {
    const Cell nb{c.x + kEdgeX[n], c.y + kEdgeY[n]};
    if (belief_.in_bounds(nb) && belief_.at(nb) == CellState::Unknown) {
      return true;
    }
  }
  return false;
}

void Simulation::reveal_neighborhood(const RobotState& robot) {
  // Near-field perception: the robot always knows the cells it is touching
  // and, when not walled off, the ring one step further out. Rays cannot
  // enter a cell wedged diagonally behind a wall corner, so without this,
  // wedge cells would stay unknown forever and spawn frontiers that no
  // sensing can ever resolve.
  const Cell own = world_.cell_at(robot.pose.position);
  for (int n = 0; n < 8; ++n) {
    const Cell nb{own.x + kNeighborX[n], own.y + kNeighborY[n]};
    if (world_.in_bounds(nb)) belief_.reveal(world_, nb);
  }
  for (int dy = -2; dy <= 2; ++dy) {
    for (int dx = -2; dx <= 2; ++dx) {
      if (std::abs(dx) < 2 && std::abs(dy) < 2) continue;
      const Cell target{own.x + dx, own.y + dy};
      if (!world_.in_bounds(target)) continue;
      const Cell mid{own.x + std::clamp(dx, -1, 1), own.y + std::clamp(dy, -1, 1)};
      if (world_.at(mid) == CellState::Occupied) continue;  // walled off
      belief_.reveal(world_, target);
    }
  }
}

void Simulation::sense_robot(RobotState& robot) {
  if (robot.arrival_pending) {
    // Arrival sweep: a robot that just reached its goal scans in place so a
    // frontier visited head-on cannot survive in its rear blind cone.
    LidarSpec sweep = config_.lidar;
    sweep.fov_deg = 360.0;
    sense(world_, belief_, robot.pose, sweep);
    robot.arrival_pending = false;
  } else {
    sense(world_, belief_, robot.pose, config_.lidar);
  }
  reveal_neighborhood(robot);
}

void Simulation::replan() {
  const std::vector<Frontier> all = find_frontiers(belief_);
  frontiers_.clear();
  for (const Frontier& f : all) {
    if (f.size() >= config_.min_frontier_size) frontiers_.push_back(f);
  }

  const std::vector<Cell> cells = robot_cells();
  const FrontierCosts costs = compute_frontier_costs(belief_, cells, frontiers_);
  if (costs.frontier_ids.empty()) {
    finished_ = true;
    exploration_time_ = (static_cast<double>(tick_) / replan_every_) *
                        config_.replan_period;
    for (RobotState& robot : robots_) {
      robot.goal.reset();
      robot.path.clear();
      robot.path_cursor = 0;
    }
    return;
  }

  const Assignment assignment =
      strategy_assign(config_.strategy, costs, rng_);
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    RobotState& robot = robots_[i];
    const RobotGoal& goal = assignment.goals[i];
    robot.goal = goal.frontier_id;
    robot.goal_from_overflow = goal.random_overflow;
    const Cell target =
        frontier_goal_cell(belief_.frame(), frontiers_[goal.frontier_id]);

    const bool in_transit =
        !robot.path.empty() && robot.path_cursor < robot.path.size();
    if (in_transit) {
      const Cell committed = robot.path.back();
      // Same target: keep walking the existing path (revealed free cells
      // never change, so it stays valid).
      if (committed == target) continue;
      // The mid-distance preference of nextfrontier disfavors whichever
      // frontier the robot approaches, so free reassignment trades goals
      // forever and the robots commute without ever arriving. Its original
      // form is goal-driven: drive to the selected frontier, then decide
      // again from there.
      if (config_.strategy == StrategyId::NextFrontier) continue;
    }

    if (costs.fields[i].reachable(target)) {
      robot.path = extract_path(costs.fields[i], target);
    } else {
      robot.path.clear();  // randomly assigned a frontier it cannot reach
    }
    robot.path_cursor = 0;
    // The path starts at the robot's own cell. Heading back to that center
    // first costs travel time; go straight for the second waypoint when the
    // direct segment cannot clip an untraversable cell.
    if (robot.path.size() >= 2) {
      const Cell a = robot.path[0];
      const Cell b = robot.path[1];
      bool direct = a.x == b.x || a.y == b.y;
      if (!direct) {
        const Cell s1{a.x, b.y};
        const Cell s2{b.x, a.y};
        direct = belief_.at(s1) == CellState::Free &&
                 belief_.at(s2) == CellState::Free;
      }
      if (direct) robot.path_cursor = 1;
    }
  }
  replan_times_.push_back((static_cast<double>(tick_) / replan_every_) *
                          config_.replan_period);
}

void Simulation::sample_metrics() {
  MetricsSample sample;
  sample.t = (static_cast<double>(tick_) / sample_every_) * config_.sample_period;
  sample.coverage = coverage_ratio(belief_, world_);
  for (const RobotState& robot : robots_) {
    sample.odometry.push_back(robot.odometry);
  }
  samples_.push_back(std::move(sample));
}

void Simulation::step() {
  if (finished_) throw std::logic_error("step after termination");
  ++tick_;
  for (RobotState& robot : robots_) move_robot(robot);
  for (RobotState& robot : robots_) sense_robot(robot);
  if (tick_ % replan_every_ == 0) replan();
  if (tick_ % sample_every_ == 0 && !finished_) sample_metrics();
}

RunMetrics Simulation::finish() {
  while (!finished_ && time() < config_.max_sim_time - 1e-9) step();

  RunMetrics metrics{.final_belief = belief_};
  metrics.samples = samples_;
  metrics.exploration_time = exploration_time_;
  metrics.replan_times = replan_times_;
  metrics.final_coverage = coverage_ratio(belief_, world_);
  for (const RobotState& robot : robots_) {
    metrics.final_odometry.push_back(robot.odometry);
  }
  metrics.final_frontier_cells = all_frontier_cells(frontiers_);

  const double end_time = exploration_time_.value_or(time());
  if (metrics.samples.empty() || metrics.samples.back().t < end_time) {
    MetricsSample last;
    last.t = end_time;
    last.coverage = metrics.final_coverage;
    last.odometry = metrics.final_odometry;
    metrics.samples.push_back(std::move(last));
  }
  return metrics;
}

RunMetrics run(const WorldGrid& world, std::span<const Cell> starts,
               const SimConfig& config) {
  Simulation sim(world, starts, config);
  return sim.finish();
}

}  // namespace coexplore
