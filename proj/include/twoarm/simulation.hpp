#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twoarm/dataset.hpp"
#include "twoarm/distributions.hpp"

namespace twoarm {

/// Parameters for one synthetic AB between-subjects experiment.
struct SimulationScenario {
  BetaParams population_a;
  BetaParams population_b;
  std::size_t n_per_group = 2;
  std::uint64_t master_seed = 0;
};

struct PowerEntry {
  std::size_t n = 0;
  std::size_t replications = 0;
  double rejection_rate_bf = 0.0;
  double rejection_rate_t = 0.0;
  /// Replications whose variance or mean test degenerated (counted as
  /// non-rejections).
  std::size_t degenerate_bf = 0;
  std::size_t degenerate_t = 0;
};

struct PowerReport {
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  std::size_t replications = 0;
  std::vector<PowerEntry> entries;
};

/// Draw n_per_group scores per arm. Arm A uses the substream
/// derive_seed(master_seed, {0}), arm B derive_seed(master_seed, {1}), so the
/// result is a pure function of the scenario.
ExperimentDataset simulate_experiment(const SimulationScenario& s);

/// For each n in n_grid, run `replications` simulated experiments and report
/// the fraction where Brown-Forsythe (resp. the independent t-test) rejects at
/// `alpha`. Replication r at size n re-seeds with
/// derive_seed(master_seed, {n, r}), so results do not depend on execution
/// order; `threads` > 1 splits replications across worker threads.
PowerReport run_power_study(const BetaParams& population_a,
                            const BetaParams& population_b,
                            std::span<const std::size_t> n_grid,
                            std::size_t replications, double alpha,
                            std::uint64_t master_seed,
                            std::size_t threads = 1);

struct CurvePoint {
  double x = 0.0;
  double density = 0.0;
};

/// Beta density sampled at grid_points evenly spaced x in [0, 1].
std::vector<CurvePoint> pdf_curve(const BetaParams& p, std::size_t grid_points);

}  // namespace twoarm
