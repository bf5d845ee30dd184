#include "twoarm/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "twoarm/errors.hpp"

namespace twoarm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string design_name(Design d) {
  return d == Design::between_subjects ? "between_subjects" : "within_subjects";
}

std::string fmt(double v, int digits = 4) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

ordered_json test_to_json(const TestResult& t) {
  ordered_json j;
  j["test"] = t.test_name;
  j["statistic"] = t.statistic;
  j["df1"] = t.df1;
  if (t.df2) j["df2"] = *t.df2;
  j["p_value"] = t.p_value;
  if (t.estimate) j["estimate"] = *t.estimate;
  return j;
}

ordered_json arm_to_json(const std::string& label, const DescriptiveStats& s) {
  ordered_json j;
  j["label"] = label;
  j["n"] = s.n;
  j["mean"] = s.mean;
  j["sd"] = s.sd;
  j["median"] = s.median;
  return j;
}

}  // namespace

AnalysisReport analyze(const ExperimentDataset& d, double alpha,
                       const std::string& control_label) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }
  const GroupSample* control = nullptr;
  const GroupSample* treatment = nullptr;
  if (control_label == d.control.label) {
    control = &d.control;
    treatment = &d.treatment;
  } else if (control_label == d.treatment.label) {
    control = &d.treatment;
    treatment = &d.control;
  } else {
    throw DomainError("control label '" + control_label +
                      "' matches neither arm ('" + d.control.label + "', '" +
                      d.treatment.label + "')");
  }

  AnalysisReport r;
  r.design = d.design;
  r.alpha = alpha;
  r.control_label = control->label;
  r.treatment_label = treatment->label;
  r.control_stats = describe(*control);
  r.treatment_stats = describe(*treatment);

  if (d.design == Design::between_subjects) {
    r.normality.push_back({"control", shapiro_wilk(control->scores)});
    r.normality.push_back({"treatment", shapiro_wilk(treatment->scores)});
  } else {
    std::vector<double> diffs(control->scores.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      diffs[i] = treatment->scores[i] - control->scores[i];
    }
    r.normality.push_back({"paired_differences", shapiro_wilk(diffs)});
  }

  const GroupSample groups[2] = {*control, *treatment};
  r.variance_test = brown_forsythe(groups);
  r.mean_test = d.design == Design::between_subjects
                    ? independent_t_test(*control, *treatment)
                    : dependent_t_test(control->scores, treatment->scores);

  const ArmSummary sc{r.control_stats.n, r.control_stats.mean, r.control_stats.sd};
  const ArmSummary st{r.treatment_stats.n, r.treatment_stats.mean,
                      r.treatment_stats.sd};
  r.hedges = hedges_g(sc, st);
  try {
    r.lncvr = ln_cvr(sc, st);
  } catch (const CvUndefinedError&) {
    r.lncvr_undefined_reason = "non-positive mean or sd";
  }

  r.flags.normality_ok = true;
  for (const auto& check : r.normality) {
    r.flags.normality_ok =
        r.flags.normality_ok && !(check.result.p_value < alpha);
  }
  r.flags.variances_homogeneous = !(r.variance_test.p_value < alpha);
  r.flags.mean_test_significant = r.mean_test.p_value < alpha;
  return r;
}

std::string render_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["design"] = design_name(r.design);
    j["alpha"] = r.alpha;
    j["arms"]["control"] = arm_to_json(r.control_label, r.control_stats);
    j["arms"]["treatment"] = arm_to_json(r.treatment_label, r.treatment_stats);
    j["normality"] = ordered_json::array();
    for (const auto& check : r.normality) {
      ordered_json jc = test_to_json(check.result);
      jc["target"] = check.target;
      j["normality"].push_back(jc);
    }
    j["variance_test"] = test_to_json(r.variance_test);
    j["mean_test"] = test_to_json(r.mean_test);
    j["effects"]["hedges_g"] = r.hedges.value;
    if (r.lncvr) {
      const double e = *r.lncvr->auxiliary;
      j["effects"]["ln_cvr"]["value"] = r.lncvr->value;
      j["effects"]["ln_cvr"]["exp"] = e;
      j["effects"]["ln_cvr"]["percent_change_treatment_vs_control"] =
          100.0 * (e - 1.0);
      j["effects"]["ln_cvr"]["percent_change_control_vs_treatment"] =
          100.0 * (1.0 / e - 1.0);
    } else {
      j["effects"]["ln_cvr"]["undefined"] = r.lncvr_undefined_reason;
    }
    j["flags"]["normality_ok"] = r.flags.normality_ok;
    j["flags"]["variances_homogeneous"] = r.flags.variances_homogeneous;
    j["flags"]["mean_test_significant"] = r.flags.mean_test_significant;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "Two-arm analysis (" << design_name(r.design)
      << "), alpha = " << fmt(r.alpha, 2) << "\n\n";

  out << "Descriptive statistics\n";
  out << "  Arm                     N      Mean        SD    Median\n";
  const auto arm_row = [&](const std::string& label, const char* role,
                           const DescriptiveStats& s) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-20s %4zu %9.4f %9.4f %9.4f\n",
                  (label + " (" + role + ")").c_str(), s.n, s.mean, s.sd,
                  s.median);
    out << buf;
  };
  arm_row(r.control_label, "control", r.control_stats);
  arm_row(r.treatment_label, "treatment", r.treatment_stats);

  out << "\nAssumption checks\n";
  for (const auto& check : r.normality) {
    out << "  Shapiro-Wilk [" << check.target
        << "]: W = " << fmt(check.result.statistic)
        << ", p-value = " << fmt(check.result.p_value) << "  -> normality "
        << (check.result.p_value < r.alpha ? "rejected" : "not rejected")
        << "\n";
  }
  out << "  Brown-Forsythe: F(" << fmt(r.variance_test.df1, 0) << ", "
      << fmt(*r.variance_test.df2, 0)
      << ") = " << fmt(r.variance_test.statistic)
      << ", p-value = " << fmt(r.variance_test.p_value)
      << "  -> homogeneity "
      << (r.flags.variances_homogeneous ? "not rejected" : "rejected") << "\n";

  out << "\nMean test: "
      << (r.mean_test.test_name == "independent_t" ? "independent"
                                                   : "dependent")
      << " t-test, df = " << fmt(r.mean_test.df1, 0) << "\n";
  out << "  Coeff.      Estimate   t-statistic      p-value\n";
  {
    char buf[120];
    std::snprintf(buf, sizeof(buf), "  Diff      %10.4f    %10.4f   %10.4f\n",
                  *r.mean_test.estimate, r.mean_test.statistic,
                  r.mean_test.p_value);
    out << buf;
  }

  out << "\nEffect sizes\n";
  out << "  Hedge's g: " << fmt(r.hedges.value) << "\n";
  if (r.lncvr) {
    const double e = *r.lncvr->auxiliary;
    out << "  lnCVR: " << fmt(r.lncvr->value)
        << "   exp(lnCVR) = " << fmt(e) << "\n";
    out << "    " << r.treatment_label << " vs " << r.control_label
        << " variability: " << (e >= 1.0 ? "+" : "") << fmt(100.0 * (e - 1.0), 1)
        << "% (exp(lnCVR) - 1)\n";
    out << "    " << r.control_label << " vs " << r.treatment_label
        << " variability: " << (e <= 1.0 ? "+" : "")
        << fmt(100.0 * (1.0 / e - 1.0), 1) << "% (1/exp(lnCVR) - 1)\n";
  } else {
    out << "  lnCVR: undefined: " << r.lncvr_undefined_reason << "\n";
  }

  out << "\nFlags\n";
  out << "  normality_ok: " << (r.flags.normality_ok ? "true" : "false")
      << "\n";
  out << "  variances_homogeneous: "
      << (r.flags.variances_homogeneous ? "true" : "false") << "\n";
  out << "  mean_test_significant: "
      << (r.flags.mean_test_significant ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace twoarm
