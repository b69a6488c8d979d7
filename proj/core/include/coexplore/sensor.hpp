#pragma once

#include "coexplore/grid.hpp"

namespace coexplore {

struct LidarSpec {
  double range = 10.6;                  // meters
  double fov_deg = 240.0;               // field of view, degrees
  double angular_resolution_deg = 1.0;  // spacing between rays, degrees
};

// Throws std::invalid_argument unless range > 0, 0 < fov <= 360 and the
// field of view is an integer number of angular steps.
void validate(const LidarSpec& lidar);

struct RobotPose {
  Vec2 position;         // meters; must lie inside a free world cell
  double heading = 0.0;  // radians
};

// Casts (fov / angular_resolution) + 1 rays centered on the heading and
// reveals the traversed world cells into the belief, stopping each ray at
// its range or at the first occupied cell (which is itself revealed).
// Returns how many cells transitioned from Unknown.
int sense(const WorldGrid& world, BeliefGrid& belief, const RobotPose& pose,
          const LidarSpec& lidar);

}  // namespace coexplore
