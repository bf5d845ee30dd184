#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "twoarm/descriptives.hpp"

namespace twoarm {

/// Per-arm summary statistics; enough to compute every effect size here.
struct ArmSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
};

/// Build an ArmSummary from raw scores via describe().
ArmSummary summarize(const GroupSample& g);

/// A named effect size. auxiliary holds exp(value) when name is "lnCVR".
struct EffectSize {
  std::string name;
  double value = 0.0;
  std::optional<double> auxiliary;
};

/// Standardized mean difference (mean_t - mean_c) / pooled sd.
EffectSize cohens_d(const ArmSummary& control, const ArmSummary& treatment);

/// Cohen's d with the small-sample correction J = 1 - 3/(4 df - 1).
EffectSize hedges_g(const ArmSummary& control, const ArmSummary& treatment);

/// Log coefficient-of-variation ratio
///   ln(CV_t / CV_c) + 1/(2(n_t-1)) - 1/(2(n_c-1)),  CV = sd / mean.
/// Negative when the treatment arm is less variable relative to its mean.
/// auxiliary = exp(value), the multiplicative variability ratio.
EffectSize ln_cvr(const ArmSummary& control, const ArmSummary& treatment);

/// 100 * (exp(value) - 1) for an lnCVR effect size; negative means the
/// treatment arm is less variable.
double variability_change_percent(const EffectSize& e);

EffectSize cohens_d(const GroupSample& control, const GroupSample& treatment);
EffectSize hedges_g(const GroupSample& control, const GroupSample& treatment);
EffectSize ln_cvr(const GroupSample& control, const GroupSample& treatment);

}  // namespace twoarm
