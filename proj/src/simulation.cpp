#include "twoarm/simulation.hpp"

#include <string>
#include <thread>

#include "twoarm/errors.hpp"
#include "twoarm/hypothesis.hpp"
#include "twoarm/rng.hpp"

namespace twoarm {

ExperimentDataset simulate_experiment(const SimulationScenario& s) {
  validate(s.population_a);
  validate(s.population_b);
  if (s.n_per_group < 2) {
    throw DomainError("n_per_group must be at least 2");
  }

  ExperimentDataset d;
  d.design = Design::between_subjects;
  d.control.label = "A";
  d.treatment.label = "B";
  d.control.scores.reserve(s.n_per_group);
  d.treatment.scores.reserve(s.n_per_group);

  RngState rng_a(derive_seed(s.master_seed, {0}));
  RngState rng_b(derive_seed(s.master_seed, {1}));
  for (std::size_t i = 0; i < s.n_per_group; ++i) {
    d.control.scores.push_back(sample_beta(s.population_a, rng_a));
    d.control_subjects.push_back("s" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < s.n_per_group; ++i) {
    d.treatment.scores.push_back(sample_beta(s.population_b, rng_b));
    d.treatment_subjects.push_back("s" + std::to_string(s.n_per_group + i + 1));
  }
  return d;
}

namespace {

struct RepCounts {
  std::size_t reject_bf = 0;
  std::size_t reject_t = 0;
  std::size_t degenerate_bf = 0;
  std::size_t degenerate_t = 0;
};

RepCounts run_replications(const BetaParams& pop_a, const BetaParams& pop_b,
                           std::size_t n, std::size_t first, std::size_t last,
                           double alpha, std::uint64_t master_seed) {
  RepCounts c;
  SimulationScenario scenario{pop_a, pop_b, n, 0};
  for (std::size_t r = first; r < last; ++r) {
    scenario.master_seed = derive_seed(master_seed, {n, r});
    const ExperimentDataset d = simulate_experiment(scenario);
    const GroupSample groups[2] = {d.control, d.treatment};
    try {
      if (brown_forsythe(groups).p_value < alpha) ++c.reject_bf;
    } catch (const DegenerateSampleError&) {
      ++c.degenerate_bf;
    }
    try {
      if (independent_t_test(d.control, d.treatment).p_value < alpha) ++c.reject_t;
    } catch (const DegenerateSampleError&) {
      ++c.degenerate_t;
    }
  }
  return c;
}

}  // namespace

PowerReport run_power_study(const BetaParams& population_a,
                            const BetaParams& population_b,
                            std::span<const std::size_t> n_grid,
                            std::size_t replications, double alpha,
                            std::uint64_t master_seed, std::size_t threads) {
  validate(population_a);
  validate(population_b);
  if (n_grid.empty()) throw DomainError("sample-size grid must be nonempty");
  for (std::size_t n : n_grid) {
    if (n < 2) throw DomainError("every grid size must be at least 2");
  }
  if (replications == 0) throw DomainError("replications must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }
  if (threads == 0) {
    threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, replications);

  PowerReport report;
  report.alpha = alpha;
  report.master_seed = master_seed;
  report.replications = replications;

  for (std::size_t n : n_grid) {
    std::vector<RepCounts> partial(threads);
    if (threads == 1) {
      partial[0] = run_replications(population_a, population_b, n, 0,
                                    replications, alpha, master_seed);
    } else {
      std::vector<std::thread> workers;
      const std::size_t chunk = (replications + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t first = t * chunk;
        const std::size_t last = std::min(replications, first + chunk);
        workers.emplace_back([&, t, first, last] {
          partial[t] = run_replications(population_a, population_b, n, first,
                                        last, alpha, master_seed);
        });
      }
      for (auto& w : workers) w.join();
    }

    RepCounts total;
    for (const auto& p : partial) {
      total.reject_bf += p.reject_bf;
      total.reject_t += p.reject_t;
      total.degenerate_bf += p.degenerate_bf;
      total.degenerate_t += p.degenerate_t;
    }
    PowerEntry e;
    e.n = n;
    e.replications = replications;
    e.rejection_rate_bf =
        static_cast<double>(total.reject_bf) / static_cast<double>(replications);
    e.rejection_rate_t =
        static_cast<double>(total.reject_t) / static_cast<double>(replications);
    e.degenerate_bf = total.degenerate_bf;
    e.degenerate_t = total.degenerate_t;
    report.entries.push_back(e);
  }
  return report;
}

std::vector<CurvePoint> pdf_curve(const BetaParams& p, std::size_t grid_points) {
  validate(p);
  if (grid_points < 2) throw DomainError("grid needs at least 2 points");
  std::vector<CurvePoint> curve;
  curve.reserve(grid_points);
  const double step = 1.0 / static_cast<double>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = i + 1 == grid_points ? 1.0 : static_cast<double>(i) * step;
    curve.push_back(CurvePoint{x, beta_pdf(p, x)});
  }
  return curve;
}

}  // namespace twoarm
