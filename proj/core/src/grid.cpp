#include "coexplore/grid.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coexplore {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw std::runtime_error("map parse error: " + msg);
}

}  // namespace

WorldGrid::WorldGrid(int width, int height, double resolution, CellState fill) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (resolution <= 0.0) {
    throw std::invalid_argument("grid resolution must be > 0");
  }
  if (fill == CellState::Unknown) {
    throw std::invalid_argument("world cells are Free or Occupied only");
  }
  frame_ = {width, height, resolution};
  cells_.assign(frame_.cell_count(), fill);
}

void WorldGrid::set(Cell c, CellState s) {
  if (s == CellState::Unknown) {
    throw std::invalid_argument("world cells are Free or Occupied only");
  }
  cells_[frame_.index(c)] = s;
}

int WorldGrid::free_cell_count() const {
  return static_cast<int>(
      std::count(cells_.begin(), cells_.end(), CellState::Free));
}

bool WorldGrid::has_closed_border() const {
  for (int x = 0; x < width(); ++x) {
    if (at({x, 0}) != CellState::Occupied) return false;
    if (at({x, height() - 1}) != CellState::Occupied) return false;
  }
  for (int y = 0; y < height(); ++y) {
    if (at({0, y}) != CellState::Occupied) return false;
    if (at({width() - 1, y}) != CellState::Occupied) return false;
  }
  return true;
}

WorldGrid load_world(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) parse_fail("empty input");

  int width = 0, height = 0;
  double resolution = 0.0;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> width >> height >> resolution) || (hs >> extra)) {
      parse_fail("line 1: expected '<width> <height> <resolution>'");
    }
  }
  if (width <= 0 || height <= 0) parse_fail("line 1: dimensions must be positive");
  if (resolution <= 0.0) parse_fail("line 1: resolution must be > 0");

  WorldGrid grid(width, height, resolution, CellState::Occupied);
  int rows_read = 0;
  std::string row;
  while (std::getline(in, row)) {
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;  // tolerate trailing blank lines
    const int line_no = rows_read + 2;
    if (rows_read >= height) {
      parse_fail("line " + std::to_string(line_no) + ": expected " +
                 std::to_string(height) + " rows, got more");
    }
    if (static_cast<int>(row.size()) != width) {
      parse_fail("line " + std::to_string(line_no) + ": expected " +
                 std::to_string(width) + " cells, got " +
                 std::to_string(row.size()));
    }
    for (int x = 0; x < width; ++x) {
      const char ch = row[static_cast<std::size_t>(x)];
      if (ch == '#') {
        grid.set({x, rows_read}, CellState::Occupied);
      } else if (ch == '.') {
        grid.set({x, rows_read}, CellState::Free);
      } else {
        parse_fail("line " + std::to_string(line_no) + ", column " +
                   std::to_string(x + 1) + ": illegal character '" +
                   std::string(1, ch) + "'");
      }
    }
    ++rows_read;
  }
  if (rows_read != height) {
    parse_fail("expected " + std::to_string(height) + " rows, got " +
               std::to_string(rows_read));
  }
  if (!grid.has_closed_border()) {
    parse_fail("map border must be fully occupied");
  }
  return grid;
}

WorldGrid load_world_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open map file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_world(buf.str());
}

std::string serialize(const WorldGrid& world) {
  std::ostringstream out;
  out.precision(17);  // resolution must survive the text round-trip
  out << world.width() << ' ' << world.height() << ' ' << world.resolution()
      << '\n';
  for (int y = 0; y < world.height(); ++y) {
    for (int x = 0; x < world.width(); ++x) {
      out << (world.at({x, y}) == CellState::Occupied ? '#' : '.');
    }
    out << '\n';
  }
  return out.str();
}

void save_world_file(const WorldGrid& world, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write map file: " + path.string());
  }
  out << serialize(world);
  if (!out) {
    throw std::runtime_error("failed writing map file: " + path.string());
  }
}

BeliefGrid::BeliefGrid(const WorldGrid& world)
    : frame_(world.frame()),
      cells_(world.frame().cell_count(), CellState::Unknown) {}

bool BeliefGrid::reveal(const WorldGrid& world, Cell c) {
  if (world.frame() != frame_) {
    throw std::invalid_argument("belief/world shape mismatch");
  }
  CellState& cell = cells_[frame_.index(c)];
  if (cell != CellState::Unknown) return false;
  cell = world.at(c);
  ++known_;
  return true;
}

double coverage_ratio(const BeliefGrid& belief, const WorldGrid& world) {
  if (belief.frame() != world.frame()) {
    throw std::invalid_argument("coverage_ratio: belief/world shape mismatch");
  }
  int free_total = 0;
  int free_known = 0;
  for (int y = 0; y < world.height(); ++y) {
    for (int x = 0; x < world.width(); ++x) {
      const Cell c{x, y};
      if (world.at(c) != CellState::Free) continue;
      ++free_total;
      if (belief.at(c) != CellState::Unknown) ++free_known;
    }
  }
  if (free_total == 0) return 0.0;
  return static_cast<double>(free_known) / static_cast<double>(free_total);
}

void export_snapshot(const BeliefGrid& belief, std::span<const Cell> frontier_cells,
                     const std::filesystem::path& path) {
  std::vector<unsigned char> pixels(belief.frame().cell_count());
  for (int y = 0; y < belief.height(); ++y) {
    for (int x = 0; x < belief.width(); ++x) {
      const Cell c{x, y};
      unsigned char tone = kSnapshotUnknown;
      switch (belief.at(c)) {
        case CellState::Free: tone = kSnapshotFree; break;
        case CellState::Occupied: tone = kSnapshotOccupied; break;
        case CellState::Unknown: tone = kSnapshotUnknown; break;
      }
      pixels[belief.frame().index(c)] = tone;
    }
  }
  for (const Cell& c : frontier_cells) {
    if (belief.in_bounds(c)) pixels[belief.frame().index(c)] = kSnapshotFrontier;
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write snapshot: " + path.string());
  }
  out << "P5\n" << belief.width() << ' ' << belief.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) {
    throw std::runtime_error("failed writing snapshot: " + path.string());
  }
}

}  // namespace coexplore
