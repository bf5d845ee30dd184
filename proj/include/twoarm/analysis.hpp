#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoarm/dataset.hpp"
#include "twoarm/effect_sizes.hpp"
#include "twoarm/hypothesis.hpp"

namespace twoarm {

/// One Shapiro-Wilk run; target is "control", "treatment", or
/// "paired_differences" depending on the design.
struct NormalityCheck {
  std::string target;
  TestResult result;
};

/// Verdicts at the report's alpha; each is recomputable from the
/// corresponding p-value.
struct AnalysisFlags {
  bool normality_ok = false;
  bool variances_homogeneous = false;
  bool mean_test_significant = false;
};

struct AnalysisReport {
  Design design = Design::between_subjects;
  double alpha = 0.05;
  std::string control_label;
  std::string treatment_label;
  DescriptiveStats control_stats;
  DescriptiveStats treatment_stats;
  std::vector<NormalityCheck> normality;
  TestResult variance_test;
  TestResult mean_test;
  EffectSize hedges;
  /// Unset when a CV is undefined; the reason then explains why.
  std::optional<EffectSize> lncvr;
  std::string lncvr_undefined_reason;
  AnalysisFlags flags;
};

/// Full pipeline: descriptives, normality per design, Brown-Forsythe,
/// design-matched t-test, Hedge's g and lnCVR. The arm carrying
/// control_label becomes the control; estimates are treatment - control.
AnalysisReport analyze(const ExperimentDataset& d, double alpha,
                       const std::string& control_label);

enum class ReportFormat { text, json };

/// Deterministic rendering; text mirrors the usual two-table layout, json
/// follows the versioned schema documented in the README.
std::string render_report(const AnalysisReport& r, ReportFormat format);

}  // namespace twoarm
