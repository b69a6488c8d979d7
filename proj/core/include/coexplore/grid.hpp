#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coexplore {

enum class CellState : std::uint8_t { Free, Occupied, Unknown };

// Integer grid coordinates. x runs right, y runs down, origin is the
// top-left cell; storage is row-major.
struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Continuous map coordinates in meters.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Shared geometry of a grid: dimensions plus the cell <-> meters mapping.
struct GridFrame {
  int width = 0;
  int height = 0;
  double resolution = 1.0;  // meters per cell

  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height;
  }
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(c.x);
  }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  Vec2 cell_center(Cell c) const {
    return {(c.x + 0.5) * resolution, (c.y + 0.5) * resolution};
  }
  Cell cell_at(Vec2 p) const {
    return {static_cast<int>(std::floor(p.x / resolution)),
            static_cast<int>(std::floor(p.y / resolution))};
  }
  friend bool operator==(const GridFrame&, const GridFrame&) = default;
};

// Ground-truth map. Holds only Free and Occupied cells; the border is
// expected to be fully Occupied so exploration can terminate.
class WorldGrid {
 public:
  WorldGrid(int width, int height, double resolution,
            CellState fill = CellState::Occupied);

  const GridFrame& frame() const { return frame_; }
  int width() const { return frame_.width; }
  int height() const { return frame_.height; }
  double resolution() const { return frame_.resolution; }
  bool in_bounds(Cell c) const { return frame_.in_bounds(c); }
  Vec2 cell_center(Cell c) const { return frame_.cell_center(c); }
  Cell cell_at(Vec2 p) const { return frame_.cell_at(p); }

  CellState at(Cell c) const { return cells_[frame_.index(c)]; }
  void set(Cell c, CellState s);

  int free_cell_count() const;
  bool has_closed_border() const;

  friend bool operator==(const WorldGrid&, const WorldGrid&) = default;

 private:
  GridFrame frame_;
  std::vector<CellState> cells_;
};

// Parses the text map format:
//   line 1: "<width> <height> <resolution>"
//   then <height> rows of '#' (occupied) and '.' (free).
// Rejects dimension mismatches, illegal characters, non-positive
// resolution and maps whose border is not fully occupied. Error messages
// name the offending line and column.
WorldGrid load_world(std::string_view text);
WorldGrid load_world_file(const std::filesystem::path& path);
std::string serialize(const WorldGrid& world);
void save_world_file(const WorldGrid& world, const std::filesystem::path& path);

// What the robots have learned so far. Same shape as its world, starts all
// Unknown, and cells are only ever written from the world, so a known cell
// never disagrees with the ground truth.
class BeliefGrid {
 public:
  explicit BeliefGrid(const WorldGrid& world);

  const GridFrame& frame() const { return frame_; }
  int width() const { return frame_.width; }
  int height() const { return frame_.height; }
  double resolution() const { return frame_.resolution; }
  bool in_bounds(Cell c) const { return frame_.in_bounds(c); }
  Vec2 cell_center(Cell c) const { return frame_.cell_center(c); }
  Cell cell_at(Vec2 p) const { return frame_.cell_at(p); }

  CellState at(Cell c) const { return cells_[frame_.index(c)]; }

  // Copies the world state into this cell. Returns true if the cell
  // transitioned from Unknown.
  bool reveal(const WorldGrid& world, Cell c);

  std::size_t known_cell_count() const { return known_; }

  friend bool operator==(const BeliefGrid&, const BeliefGrid&) = default;

 private:
  GridFrame frame_;
  std::vector<CellState> cells_;
  std::size_t known_ = 0;
};

// Fraction of the world's free cells that are known in the belief.
double coverage_ratio(const BeliefGrid& belief, const WorldGrid& world);

// Snapshot gray levels (binary PGM, maxval 255).
inline constexpr unsigned char kSnapshotOccupied = 0;
inline constexpr unsigned char kSnapshotFrontier = 64;
inline constexpr unsigned char kSnapshotUnknown = 128;
inline constexpr unsigned char kSnapshotFree = 255;

// Writes the belief as a binary PGM raster with frontier cells drawn in
// their own tone. Identical inputs produce byte-identical files.
void export_snapshot(const BeliefGrid& belief, std::span<const Cell> frontier_cells,
                     const std::filesystem::path& path);

}  // namespace coexplore
