#pragma once

#include <cstdint>
#include <vector>

#include "coexplore/grid.hpp"
#include "coexplore/rng.hpp"

namespace coexplore {

// Randomized depth-first-search maze: corridors of the given width
// separated by one-cell walls, long dead ends, all free cells 4-connected.
WorldGrid generate_maze(int width, int height, int corridor_width,
                        std::uint64_t seed, double resolution = 0.25);

// Recursive-partition office: rooms between room_min and room_max across,
// one door per wall segment, all free cells connected.
WorldGrid generate_office(int width, int height, int room_min, int room_max,
                          int door_width, std::uint64_t seed,
                          double resolution = 0.25);

// Open arena scattered with small rectangular obstacles that never
// disconnect the free space.
WorldGrid generate_open(int width, int height, int obstacle_count,
                        int obstacle_size, std::uint64_t seed,
                        double resolution = 0.25);

// Deployment from a common entry point: a seeded anchor cell inside the
// largest free region plus the nearest free cells around it.
std::vector<Cell> clustered_starts(const WorldGrid& world, int count, Rng& rng);

// 4-connected flood-fill components of the free cells, each sorted
// row-major, largest first (ties by the smallest root index).
std::vector<std::vector<Cell>> free_components(const WorldGrid& world);

}  // namespace coexplore
