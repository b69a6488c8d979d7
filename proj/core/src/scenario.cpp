#include "coexplore/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coexplore {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("scenario line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + value + "'");
  }
}

std::uint64_t parse_seed(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(line, "expected a seed, got '" + value + "'");
  }
}

std::vector<std::string> split(const std::string& value, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(value);
  std::string part;
  while (std::getline(in, part, sep)) {
    const std::string t = trim(part);
    if (!t.empty()) parts.push_back(t);
  }
  return parts;
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view text,
                            const std::filesystem::path& base_dir) {
  ScenarioSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto comment = raw.find('#');
    if (comment != std::string::npos) raw.erase(comment);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, "expected 'key = value'");

    if (key == "world.type") {
      if (value != "file" && value != "maze" && value != "office" &&
          value != "open") {
        fail(line_no, "world.type must be file, maze, office or open");
      }
      spec.world_type = value;
    } else if (key == "world.file") {
      std::filesystem::path p(value);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      spec.world_file = p;
    } else if (key == "world.width") {
      spec.world_width = parse_int(value, line_no);
    } else if (key == "world.height") {
      spec.world_height = parse_int(value, line_no);
    } else if (key == "world.resolution") {
      spec.world_resolution = parse_double(value, line_no);
    } else if (key == "world.seed") {
      spec.world_seed = parse_seed(value, line_no);
    } else if (key == "world.corridor_width") {
      spec.corridor_width = parse_int(value, line_no);
    } else if (key == "world.room_min") {
      spec.room_min = parse_int(value, line_no);
    } else if (key == "world.room_max") {
      spec.room_max = parse_int(value, line_no);
    } else if (key == "world.door_width") {
      spec.door_width = parse_int(value, line_no);
    } else if (key == "world.obstacle_count") {
      spec.obstacle_count = parse_int(value, line_no);
    } else if (key == "world.obstacle_size") {
      spec.obstacle_size = parse_int(value, line_no);
    } else if (key == "world.label") {
      spec.world_label = value;
    } else if (key == "starts") {
      if (value == "clustered") {
        spec.clustered = true;
        spec.starts.clear();
      } else {
        spec.clustered = false;
        spec.starts.clear();
        for (const std::string& pair : split(value, ';')) {
          const auto parts = split(pair, ',');
          if (parts.size() != 2) fail(line_no, "starts must be 'x,y; x,y; ...'");
          spec.starts.push_back(
              {parse_int(parts[0], line_no), parse_int(parts[1], line_no)});
        }
        if (spec.starts.empty()) fail(line_no, "starts list is empty");
      }
    } else if (key == "robots") {
      spec.robots = parse_int(value, line_no);
    } else if (key == "strategy") {
      const auto id = strategy_from_name(value);
      if (!id) fail(line_no, "unknown strategy '" + value + "'");
      spec.sim.strategy = *id;
    } else if (key == "strategies") {
      spec.strategies.clear();
      for (const std::string& name : split(value, ',')) {
        const auto id = strategy_from_name(name);
        if (!id) fail(line_no, "unknown strategy '" + name + "'");
        spec.strategies.push_back(*id);
      }
      if (spec.strategies.empty()) fail(line_no, "strategies list is empty");
    } else if (key == "runs") {
      spec.runs = parse_int(value, line_no);
    } else if (key == "seed") {
      spec.base_seed = parse_seed(value, line_no);
    } else if (key == "dt") {
      spec.sim.dt = parse_double(value, line_no);
    } else if (key == "replan_period") {
      spec.sim.replan_period = parse_double(value, line_no);
    } else if (key == "sample_period") {
      spec.sim.sample_period = parse_double(value, line_no);
    } else if (key == "max_time") {
      spec.sim.max_sim_time = parse_double(value, line_no);
    } else if (key == "speed") {
      spec.sim.robot_speed = parse_double(value, line_no);
    } else if (key == "min_frontier_size") {
      spec.sim.min_frontier_size = parse_int(value, line_no);
    } else if (key == "lidar.range") {
      spec.sim.lidar.range = parse_double(value, line_no);
    } else if (key == "lidar.fov") {
      spec.sim.lidar.fov_deg = parse_double(value, line_no);
    } else if (key == "lidar.angular_resolution") {
      spec.sim.lidar.angular_resolution_deg = parse_double(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (spec.world_type == "file" && spec.world_file.empty()) {
    throw std::runtime_error("scenario: world.type = file requires world.file");
  }
  if (spec.runs < 1) throw std::runtime_error("scenario: runs must be >= 1");
  if (spec.robots < 1) throw std::runtime_error("scenario: robots must be >= 1");
  if (spec.world_label.empty()) {
    spec.world_label = spec.world_type == "file"
                           ? spec.world_file.stem().string()
                           : spec.world_type;
  }
  return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open scenario file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.parent_path());
}

WorldGrid build_world(const ScenarioSpec& s) {
  if (s.world_type == "file") return load_world_file(s.world_file);
  if (s.world_type == "maze") {
    return generate_maze(s.world_width, s.world_height, s.corridor_width,
                         s.world_seed, s.world_resolution);
  }
  if (s.world_type == "office") {
    return generate_office(s.world_width, s.world_height, s.room_min,
                           s.room_max, s.door_width, s.world_seed,
                           s.world_resolution);
  }
  if (s.world_type == "open") {
    return generate_open(s.world_width, s.world_height, s.obstacle_count,
                         s.obstacle_size, s.world_seed, s.world_resolution);
  }
  throw std::runtime_error("unknown world type: " + s.world_type);
}

std::vector<Cell> resolve_starts(const ScenarioSpec& scenario,
                                 const WorldGrid& world, int robots, Rng& rng) {
  if (!scenario.clustered) {
    if (static_cast<int>(scenario.starts.size()) < robots) {
      throw std::runtime_error("scenario lists fewer starts than robots");
    }
    return {scenario.starts.begin(), scenario.starts.begin() + robots};
  }
  return clustered_starts(world, robots, rng);
}

}  // namespace coexplore
