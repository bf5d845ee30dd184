#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twoarm/analysis.hpp"
#include "twoarm/dataset.hpp"
#include "twoarm/descriptives.hpp"
#include "twoarm/distributions.hpp"
#include "twoarm/effect_sizes.hpp"
#include "twoarm/errors.hpp"
#include "twoarm/hypothesis.hpp"
#include "twoarm/rng.hpp"
#include "twoarm/simulation.hpp"
#include "twoarm/specfun.hpp"

namespace py = pybind11;
using namespace twoarm;

namespace {

std::vector<GroupSample> to_groups(const std::vector<std::vector<double>>& xs) {
  std::vector<GroupSample> groups;
  groups.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    groups.push_back(GroupSample{"g" + std::to_string(i + 1), xs[i]});
  }
  return groups;
}

Center to_center(const std::string& name) {
  if (name == "median") return Center::median;
  if (name == "mean") return Center::mean;
  throw DomainError("center must be 'median' or 'mean'");
}

Design to_design(const std::string& name) {
  if (name == "between") return Design::between_subjects;
  if (name == "within") return Design::within_subjects;
  throw DomainError("design must be 'between' or 'within'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-arm experiment statistics: variance-aware tests, effect "
            "sizes and seeded simulation";

  py::register_exception<StatError>(m, "StatError");

  py::class_<DescriptiveStats>(m, "DescriptiveStats")
      .def_readonly("n", &DescriptiveStats::n)
      .def_readonly("mean", &DescriptiveStats::mean)
      .def_readonly("sd", &DescriptiveStats::sd)
      .def_readonly("median", &DescriptiveStats::median)
      .def("__repr__", [](const DescriptiveStats& s) {
        std::ostringstream out;
        out << "DescriptiveStats(n=" << s.n << ", mean=" << s.mean
            << ", sd=" << s.sd << ", median=" << s.median << ")";
        return out.str();
      });

  py::class_<TestResult>(m, "TestResult")
      .def_readonly("test_name", &TestResult::test_name)
      .def_readonly("statistic", &TestResult::statistic)
      .def_readonly("df1", &TestResult::df1)
      .def_readonly("df2", &TestResult::df2)
      .def_readonly("p_value", &TestResult::p_value)
      .def_readonly("estimate", &TestResult::estimate)
      .def("__repr__", [](const TestResult& t) {
        std::ostringstream out;
        out << "TestResult(" << t.test_name << ", statistic=" << t.statistic
            << ", p_value=" << t.p_value << ")";
        return out.str();
      });

  py::class_<ArmSummary>(m, "ArmSummary")
      .def(py::init([](std::size_t n, double mean, double sd) {
             return ArmSummary{n, mean, sd};
           }),
           py::arg("n"), py::arg("mean"), py::arg("sd"))
      .def_readonly("n", &ArmSummary::n)
      .def_readonly("mean", &ArmSummary::mean)
      .def_readonly("sd", &ArmSummary::sd);

  py::class_<EffectSize>(m, "EffectSize")
      .def_readonly("name", &EffectSize::name)
      .def_readonly("value", &EffectSize::value)
      .def_readonly("auxiliary", &EffectSize::auxiliary)
      .def("__repr__", [](const EffectSize& e) {
        std::ostringstream out;
        out << "EffectSize(" << e.name << ", value=" << e.value << ")";
        return out.str();
      });

  py::class_<BetaParams>(m, "BetaParams")
      .def(py::init([](double alpha, double beta) {
             return BetaParams{alpha, beta};
           }),
           py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &BetaParams::alpha)
      .def_readonly("beta", &BetaParams::beta)
      .def("__repr__", [](const BetaParams& p) {
        std::ostringstream out;
        out << "BetaParams(alpha=" << p.alpha << ", beta=" << p.beta << ")";
        return out.str();
      });

  py::class_<PowerEntry>(m, "PowerEntry")
      .def_readonly("n", &PowerEntry::n)
      .def_readonly("replications", &PowerEntry::replications)
      .def_readonly("rejection_rate_bf", &PowerEntry::rejection_rate_bf)
      .def_readonly("rejection_rate_t", &PowerEntry::rejection_rate_t)
      .def_readonly("degenerate_bf", &PowerEntry::degenerate_bf)
      .def_readonly("degenerate_t", &PowerEntry::degenerate_t);

  py::class_<PowerReport>(m, "PowerReport")
      .def_readonly("alpha", &PowerReport::alpha)
      .def_readonly("master_seed", &PowerReport::master_seed)
      .def_readonly("replications", &PowerReport::replications)
      .def_readonly("entries", &PowerReport::entries);

  py::class_<RngState>(m, "RngState")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &RngState::next_u64)
      .def("next_uniform", &RngState::next_uniform)
      .def("next_normal", &RngState::next_normal);

  m.def("derive_seed",
        [](std::uint64_t master, const std::vector<std::uint64_t>& path) {
          return derive_seed(master, std::span<const std::uint64_t>(path));
        },
        py::arg("master"), py::arg("path"));

  m.def("describe",
        [](const std::vector<double>& x) { return describe(x); },
        py::arg("scores"));
  m.def("coefficient_of_variation", &coefficient_of_variation,
        py::arg("stats"));

  m.def("shapiro_wilk",
        [](const std::vector<double>& x) { return shapiro_wilk(x); },
        py::arg("scores"));
  m.def("one_way_anova",
        [](const std::vector<std::vector<double>>& groups) {
          return one_way_anova(to_groups(groups));
        },
        py::arg("groups"));
  m.def("brown_forsythe",
        [](const std::vector<std::vector<double>>& groups,
           const std::string& center) {
          return brown_forsythe(to_groups(groups), to_center(center));
        },
        py::arg("groups"), py::arg("center") = "median");
  m.def("independent_t_test",
        [](const std::vector<double>& control,
           const std::vector<double>& treatment) {
          return independent_t_test(GroupSample{"control", control},
                                    GroupSample{"treatment", treatment});
        },
        py::arg("control"), py::arg("treatment"));
  m.def("dependent_t_test",
        [](const std::vector<double>& control,
           const std::vector<double>& treatment) {
          return dependent_t_test(control, treatment);
        },
        py::arg("control"), py::arg("treatment"));

  m.def("cohens_d",
        [](const ArmSummary& c, const ArmSummary& t) { return cohens_d(c, t); },
        py::arg("control"), py::arg("treatment"));
  m.def("hedges_g",
        [](const ArmSummary& c, const ArmSummary& t) { return hedges_g(c, t); },
        py::arg("control"), py::arg("treatment"));
  m.def("ln_cvr",
        [](const ArmSummary& c, const ArmSummary& t) { return ln_cvr(c, t); },
        py::arg("control"), py::arg("treatment"));
  m.def("variability_change_percent", &variability_change_percent,
        py::arg("effect"));

  m.def("beta_mean_sd",
        [](const BetaParams& p) {
          const BetaMoments mo = beta_mean_sd(p);
          return std::make_pair(mo.mean, mo.sd);
        },
        py::arg("params"));
  m.def("beta_from_moments", &beta_from_moments, py::arg("mean"),
        py::arg("sd"));
  m.def("beta_pdf", &beta_pdf, py::arg("params"), py::arg("x"));
  m.def("sample_beta", &sample_beta, py::arg("params"), py::arg("rng"));

  m.def("simulate_scores",
        [](const BetaParams& a, const BetaParams& b, std::size_t n,
           std::uint64_t seed) {
          const SimulationScenario s{a, b, n, seed};
          const ExperimentDataset d = simulate_experiment(s);
          return std::make_pair(d.control.scores, d.treatment.scores);
        },
        py::arg("population_a"), py::arg("population_b"), py::arg("n_per_group"),
        py::arg("master_seed"));
  m.def("run_power_study",
        [](const BetaParams& a, const BetaParams& b,
           const std::vector<std::size_t>& grid, std::size_t reps, double alpha,
           std::uint64_t seed, std::size_t threads) {
          return run_power_study(a, b, grid, reps, alpha, seed, threads);
        },
        py::arg("population_a"), py::arg("population_b"), py::arg("n_grid"),
        py::arg("replications"), py::arg("alpha"), py::arg("master_seed"),
        py::arg("threads") = 1);
  m.def("pdf_curve",
        [](const BetaParams& p, std::size_t points) {
          std::vector<std::pair<double, double>> out;
          for (const auto& cp : pdf_curve(p, points)) {
            out.emplace_back(cp.x, cp.density);
          }
          return out;
        },
        py::arg("params"), py::arg("grid_points"));

  m.def("analyze_csv",
        [](const std::string& path, const std::string& design, double alpha,
           const std::string& control_label, const std::string& format) {
          const ExperimentDataset d = parse_dataset_file(path, to_design(design));
          const AnalysisReport r = analyze(d, alpha, control_label);
          return render_report(r, format == "json" ? ReportFormat::json
                                                   : ReportFormat::text);
        },
        py::arg("path"), py::arg("design"), py::arg("alpha"),
        py::arg("control_label"), py::arg("format") = "json");

  m.def("ln_gamma", &ln_gamma, py::arg("x"));
  m.def("reg_inc_beta", &reg_inc_beta, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("normal_cdf", &normal_cdf, py::arg("z"));
  m.def("normal_quantile", &normal_quantile, py::arg("p"));
  m.def("student_t_cdf", &student_t_cdf, py::arg("t"), py::arg("df"));
  m.def("f_cdf", &f_cdf, py::arg("f"), py::arg("df1"), py::arg("df2"));
  m.def("two_sided_t_p_value", &two_sided_t_p_value, py::arg("t"),
        py::arg("df"));
}
