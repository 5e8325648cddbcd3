// Serial reference vs OpenMP Monte Carlo heat-content kernel.
//
//   bench_mc [paths] [steps] [threads]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "heatpoly/mc_oracle.hpp"

using namespace heatpoly;

int main(int argc, char** argv) {
  mc::MCConfig cfg;
  cfg.n_paths = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200'000;
  cfg.n_steps = argc > 2 ? static_cast<std::uint32_t>(std::strtoul(argv[2], nullptr, 10)) : 256;
  if (argc > 3) omp_set_num_threads(std::atoi(argv[3]));

  const Polygon square = validate(RawPolygon{{Loop{
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {BoundaryCondition::Dirichlet, BoundaryCondition::Dirichlet, BoundaryCondition::Open,
       BoundaryCondition::Open}}}});
  const double t = 1e-3;

  auto time_run = [&](mc::Execution exec) {
    const auto start = std::chrono::steady_clock::now();
    const auto est = mc::estimate_heat_content(square, t, cfg, exec);
    const auto stop = std::chrono::steady_clock::now();
    return std::pair{est, std::chrono::duration<double>(stop - start).count()};
  };

  const auto [serial, ts] = time_run(mc::Execution::Serial);
  const auto [parallel, tp] = time_run(mc::Execution::Parallel);
  const double steps = static_cast<double>(cfg.n_paths) * cfg.n_steps;
  std::printf("paths=%llu steps=%u threads=%d\n", static_cast<unsigned long long>(cfg.n_paths),
              cfg.n_steps, omp_get_max_threads());
  std::printf("serial   %8.3f s  %7.1f Msteps/s  mean=%.8f\n", ts, steps / ts * 1e-6, serial.mean);
  std::printf("parallel %8.3f s  %7.1f Msteps/s  mean=%.8f  speedup=%.2f\n", tp,
              steps / tp * 1e-6, parallel.mean, ts / tp);
  std::printf("identical=%s\n", serial.survivors == parallel.survivors ? "yes" : "NO");
  return serial.survivors == parallel.survivors ? 0 : 1;
}
