#include <benchmark/benchmark.h>

#include "coexplore/assign.hpp"
#include "coexplore/frontier.hpp"
#include "coexplore/pathdist.hpp"
#include "coexplore/sensor.hpp"
#include "coexplore/sim.hpp"
#include "coexplore/worlds.hpp"

namespace {

using namespace coexplore;

Matrix random_cost_matrix(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m.at(r, c) = static_cast<double>(uniform_below(rng, 1000));
    }
  }
  return m;
}

void BM_Hungarian(benchmark::State& state) {
  Rng rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix cost = random_cost_matrix(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hungarian(cost));
  }
}
BENCHMARK(BM_Hungarian)->Arg(5)->Arg(16)->Arg(64);

void BM_Wavefront(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const WorldGrid world = generate_open(size, size, 12, 4, 11);
  BeliefGrid belief(world);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) belief.reveal(world, {x, y});
  }
  const auto components = free_components(world);
  const Cell source = components.front().front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wavefront_distances(belief, source));
  }
}
BENCHMARK(BM_Wavefront)->Arg(61)->Arg(101)->Arg(201);

void BM_Sense(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const WorldGrid world = generate_open(size, size, 12, 4, 11);
  const auto components = free_components(world);
  const Cell start = components.front()[components.front().size() / 2];
  const RobotPose pose{world.cell_center(start), 0.0};
  const LidarSpec lidar{};
  for (auto _ : state) {
    BeliefGrid belief(world);
    benchmark::DoNotOptimize(sense(world, belief, pose, lidar));
  }
}
BENCHMARK(BM_Sense)->Arg(61)->Arg(101);

void BM_ReplanPipeline(benchmark::State& state) {
  const WorldGrid world = generate_open(101, 101, 12, 4, 11);
  BeliefGrid belief(world);
  const auto components = free_components(world);
  const Cell start = components.front()[components.front().size() / 2];
  std::vector<Cell> robots;
  Rng start_rng(3);
  robots = clustered_starts(world, 3, start_rng);
  for (const Cell& r : robots) {
    sense(world, belief, {world.cell_center(r), 0.0}, LidarSpec{});
  }
  sense(world, belief, {world.cell_center(start), 0.0}, LidarSpec{});
  const std::vector<Frontier> frontiers = find_frontiers(belief);
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        assign_robots(belief, robots, frontiers, kCoExploreWeights, rng));
  }
}
BENCHMARK(BM_ReplanPipeline);

void BM_FullRun(benchmark::State& state) {
  const WorldGrid world = generate_open(61, 61, 8, 3, 11);
  Rng start_rng(3);
  const std::vector<Cell> starts = clustered_starts(world, 3, start_rng);
  SimConfig config;
  config.strategy = StrategyId::CoExplore;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(world, starts, config));
  }
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
