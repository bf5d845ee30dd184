#include "twoarm/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twoarm/analysis.hpp"
#include "twoarm/dataset.hpp"
#include "twoarm/errors.hpp"
#include "twoarm/simulation.hpp"

namespace twoarm {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_text(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << payload;
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
}

struct AnalyzeArgs {
  std::string input;
  std::string design = "between";
  std::string control;
  double alpha = 0.05;
  std::string format = "text";
  std::string output;
};

struct MomentArgs {
  double mean_a = 0.0, sd_a = 0.0;
  double mean_b = 0.0, sd_b = 0.0;
};

int run_analyze(const AnalyzeArgs& a) {
  const Design design =
      a.design == "between" ? Design::between_subjects : Design::within_subjects;
  const ExperimentDataset d = parse_dataset_file(a.input, design);
  const AnalysisReport report = analyze(d, a.alpha, a.control);
  const ReportFormat fmt =
      a.format == "json" ? ReportFormat::json : ReportFormat::text;
  write_text(a.output, render_report(report, fmt));
  return 0;
}

int run_simulate(const MomentArgs& m, std::size_t n, std::uint64_t seed,
                 const std::string& output) {
  SimulationScenario s;
  s.population_a = beta_from_moments(m.mean_a, m.sd_a);
  s.population_b = beta_from_moments(m.mean_b, m.sd_b);
  s.n_per_group = n;
  s.master_seed = seed;
  const ExperimentDataset d = simulate_experiment(s);
  std::ostringstream csv;
  write_dataset_csv(d, csv);
  write_text(output, csv.str());
  return 0;
}

int run_power(const MomentArgs& m, const std::vector<std::size_t>& n_grid,
              std::size_t reps, double alpha, std::uint64_t seed,
              const std::string& format) {
  const BetaParams pop_a = beta_from_moments(m.mean_a, m.sd_a);
  const BetaParams pop_b = beta_from_moments(m.mean_b, m.sd_b);
  const PowerReport report =
      run_power_study(pop_a, pop_b, n_grid, reps, alpha, seed);

  for (const auto& e : report.entries) {
    if (e.degenerate_bf > 0 || e.degenerate_t > 0) {
      std::cerr << "note: n=" << e.n << ": " << e.degenerate_bf
                << " degenerate variance-test and " << e.degenerate_t
                << " degenerate mean-test replications counted as non-rejections\n";
    }
  }

  if (format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = report.alpha;
    j["master_seed"] = report.master_seed;
    j["replications"] = report.replications;
    j["population_a"] = {{"alpha", pop_a.alpha}, {"beta", pop_a.beta}};
    j["population_b"] = {{"alpha", pop_b.alpha}, {"beta", pop_b.beta}};
    j["entries"] = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json je;
      je["n"] = e.n;
      je["replications"] = e.replications;
      je["rejection_rate_bf"] = e.rejection_rate_bf;
      je["rejection_rate_t"] = e.rejection_rate_t;
      je["degenerate_bf"] = e.degenerate_bf;
      je["degenerate_t"] = e.degenerate_t;
      j["entries"].push_back(je);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%6s %12s %14s %13s\n", "n", "replications", "bf_rejection",
                "t_rejection");
    for (const auto& e : report.entries) {
      std::printf("%6zu %12zu %14.4f %13.4f\n", e.n, e.replications,
                  e.rejection_rate_bf, e.rejection_rate_t);
    }
  }
  return 0;
}

int run_pdf_curve(double alpha_shape, double beta_shape, std::size_t points,
                  const std::string& output) {
  const auto curve = pdf_curve(BetaParams{alpha_shape, beta_shape}, points);
  std::ostringstream csv;
  csv << "x,density\n";
  char buf[80];
  for (const auto& p : curve) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.density);
    csv << buf;
  }
  write_text(output, csv.str());
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Two-arm experiment statistics: variance-aware analysis, "
               "simulation and power studies"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Analyze a two-arm CSV dataset");
  analyze_cmd->add_option("--input", an.input, "CSV input path")->required();
  analyze_cmd->add_option("--design", an.design, "Experimental design")
      ->check(CLI::IsMember({"between", "within"}))
      ->capture_default_str();
  analyze_cmd->add_option("--control", an.control, "Label of the control arm")
      ->required();
  analyze_cmd->add_option("--alpha", an.alpha, "Significance level")
      ->capture_default_str();
  analyze_cmd->add_option("--format", an.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  analyze_cmd->add_option("--output", an.output,
                          "Output path (default: stdout)");

  MomentArgs sm;
  std::size_t sim_n = 15;
  std::uint64_t sim_seed = 0;
  std::string sim_output;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Draw a synthetic between-subjects dataset from two Beta "
                  "populations given by mean and sd");
  sim_cmd->add_option("--mean-a", sm.mean_a, "Arm A population mean")->required();
  sim_cmd->add_option("--sd-a", sm.sd_a, "Arm A population sd")->required();
  sim_cmd->add_option("--mean-b", sm.mean_b, "Arm B population mean")->required();
  sim_cmd->add_option("--sd-b", sm.sd_b, "Arm B population sd")->required();
  sim_cmd->add_option("--n", sim_n, "Scores per arm")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "Master seed")->capture_default_str();
  sim_cmd->add_option("--output", sim_output, "CSV output path")->required();

  MomentArgs pm;
  std::vector<std::size_t> n_grid;
  std::size_t reps = 10000;
  double power_alpha = 0.05;
  std::uint64_t power_seed = 0;
  std::string power_format = "json";
  auto* power_cmd = app.add_subcommand(
      "power", "Monte Carlo rejection rates of the variance and mean tests "
               "over a sample-size grid");
  power_cmd->add_option("--mean-a", pm.mean_a, "Arm A population mean")->required();
  power_cmd->add_option("--sd-a", pm.sd_a, "Arm A population sd")->required();
  power_cmd->add_option("--mean-b", pm.mean_b, "Arm B population mean")->required();
  power_cmd->add_option("--sd-b", pm.sd_b, "Arm B population sd")->required();
  power_cmd->add_option("--n-grid", n_grid, "Comma-separated per-arm sizes")
      ->required()
      ->delimiter(',');
  power_cmd->add_option("--reps", reps, "Replications per grid size")
      ->capture_default_str();
  power_cmd->add_option("--alpha", power_alpha, "Significance level")
      ->capture_default_str();
  power_cmd->add_option("--seed", power_seed, "Master seed")
      ->capture_default_str();
  power_cmd->add_option("--format", power_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  double shape_a = 0.0, shape_b = 0.0;
  std::size_t points = 101;
  std::string curve_output;
  auto* curve_cmd = app.add_subcommand(
      "pdf-curve", "Tabulate a Beta density over [0,1] for plotting");
  curve_cmd->add_option("--alpha-shape", shape_a, "Beta shape alpha")->required();
  curve_cmd->add_option("--beta-shape", shape_b, "Beta shape beta")->required();
  curve_cmd->add_option("--points", points, "Grid points")->capture_default_str();
  curve_cmd->add_option("--output", curve_output, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*analyze_cmd) return run_analyze(an);
    if (*sim_cmd) return run_simulate(sm, sim_n, sim_seed, sim_output);
    if (*power_cmd) {
      return run_power(pm, n_grid, reps, power_alpha, power_seed, power_format);
    }
    return run_pdf_curve(shape_a, shape_b, points, curve_output);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateSampleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InsufficientDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedSizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const StatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twoarm
