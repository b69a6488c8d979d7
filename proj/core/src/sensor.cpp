#include "coexplore/sensor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coexplore {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double normalize_angle(double rad) {
  double a = std::fmod(rad, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

// Amanatides & Woo traversal along one ray. Reveals each entered cell until
// the range is exceeded (a boundary crossing at exactly the range still
// enters the next cell) or an occupied cell blocks the ray. A crossing that
// hits a cell corner exactly steps diagonally.
int cast_ray(const WorldGrid& world, BeliefGrid& belief, Vec2 origin,
             double angle, double range) {
  const double res = world.resolution();
  const double dx = std::cos(angle);
  const double dy = std::sin(angle);

  Cell cell = world.cell_at(origin);
  const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);

  double t_max_x = kInf, t_delta_x = kInf;
  if (step_x != 0) {
    const double boundary = (cell.x + (step_x > 0 ? 1 : 0)) * res;
    t_max_x = (boundary - origin.x) / dx;
    t_delta_x = res / std::abs(dx);
  }
  double t_max_y = kInf, t_delta_y = kInf;
  if (step_y != 0) {
    const double boundary = (cell.y + (step_y > 0 ? 1 : 0)) * res;
    t_max_y = (boundary - origin.y) / dy;
    t_delta_y = res / std::abs(dy);
  }

  int revealed = 0;
  while (true) {
    const double t_next = std::min(t_max_x, t_max_y);
    if (t_next > range) break;
    if (t_max_x < t_max_y) {
      cell.x += step_x;
      t_max_x += t_delta_x;
    } else if (t_max_y < t_max_x) {
      cell.y += step_y;
      t_max_y += t_delta_y;
    } else {
      cell.x += step_x;
      cell.y += step_y;
      t_max_x += t_delta_x;
      t_max_y += t_delta_y;
    }
    if (!world.in_bounds(cell)) break;
    if (belief.reveal(world, cell)) ++revealed;
    if (world.at(cell) == CellState::Occupied) break;
  }
  return revealed;
}

}  // namespace

void validate(const LidarSpec& lidar) {
  if (lidar.range <= 0.0) {
    throw std::invalid_argument("lidar range must be > 0");
  }
  if (lidar.fov_deg <= 0.0 || lidar.fov_deg > 360.0) {
    throw std::invalid_argument("lidar fov must be in (0, 360]");
  }
  if (lidar.angular_resolution_deg <= 0.0) {
    throw std::invalid_argument("lidar angular resolution must be > 0");
  }
  const double steps = lidar.fov_deg / lidar.angular_resolution_deg;
  if (std::abs(steps - std::round(steps)) > 1e-9) {
    throw std::invalid_argument(
        "lidar fov must be an integer multiple of its angular resolution");
  }
}

int sense(const WorldGrid& world, BeliefGrid& belief, const RobotPose& pose,
          const LidarSpec& lidar) {
  validate(lidar);
  if (world.frame() != belief.frame()) {
    throw std::invalid_argument("sense: belief/world shape mismatch");
  }
  const Cell origin = world.cell_at(pose.position);
  if (!world.in_bounds(origin)) {
    throw std::invalid_argument("sense: pose outside the grid");
  }
  if (world.at(origin) != CellState::Free) {
    throw std::invalid_argument("sense: pose not inside a free cell");
  }

  int revealed = belief.reveal(world, origin) ? 1 : 0;

  const int steps =
      static_cast<int>(std::llround(lidar.fov_deg / lidar.angular_resolution_deg));
  const double step_rad = lidar.angular_resolution_deg * kPi / 180.0;
  const double heading = normalize_angle(pose.heading);
  for (int k = 0; k <= steps; ++k) {
    const double angle = heading + (k - steps / 2.0) * step_rad;
    revealed += cast_ray(world, belief, pose.position, angle, lidar.range);
  }
  return revealed;
}

}  // namespace coexplore
