#include "twoarm/effect_sizes.hpp"

#include <cmath>

#include "twoarm/errors.hpp"

namespace twoarm {

namespace {

void check_arm(const ArmSummary& arm) {
  if (arm.n < 2) {
    throw InsufficientDataError("arm summary needs n >= 2");
  }
  if (!std::isfinite(arm.mean) || !std::isfinite(arm.sd) || arm.sd < 0.0) {
    throw DomainError("arm summary needs finite mean and nonnegative sd");
  }
}

double pooled_sd(const ArmSummary& c, const ArmSummary& t) {
  const double nc = static_cast<double>(c.n);
  const double nt = static_cast<double>(t.n);
  const double df = nc + nt - 2.0;
  return std::sqrt(((nc - 1.0) * c.sd * c.sd + (nt - 1.0) * t.sd * t.sd) / df);
}

}  // namespace

ArmSummary summarize(const GroupSample& g) {
  const DescriptiveStats d = describe(g);
  return ArmSummary{d.n, d.mean, d.sd};
}

EffectSize cohens_d(const ArmSummary& control, const ArmSummary& treatment) {
  check_arm(control);
  check_arm(treatment);
  const double sp = pooled_sd(control, treatment);
  if (sp == 0.0) {
    throw DegenerateSampleError("pooled standard deviation is zero");
  }
  return EffectSize{"cohens_d", (treatment.mean - control.mean) / sp, {}};
}

EffectSize hedges_g(const ArmSummary& control, const ArmSummary& treatment) {
  EffectSize d = cohens_d(control, treatment);
  const double df =
      static_cast<double>(control.n) + static_cast<double>(treatment.n) - 2.0;
  const double j = 1.0 - 3.0 / (4.0 * df - 1.0);
  return EffectSize{"hedges_g", d.value * j, {}};
}

EffectSize ln_cvr(const ArmSummary& control, const ArmSummary& treatment) {
  check_arm(control);
  check_arm(treatment);
  if (control.mean <= 0.0 || treatment.mean <= 0.0 || control.sd <= 0.0 ||
      treatment.sd <= 0.0) {
    throw CvUndefinedError(
        "lnCVR needs strictly positive means and standard deviations");
  }
  const double cv_c = control.sd / control.mean;
  const double cv_t = treatment.sd / treatment.mean;
  const double nc = static_cast<double>(control.n);
  const double nt = static_cast<double>(treatment.n);
  const double value = std::log(cv_t / cv_c) + 1.0 / (2.0 * (nt - 1.0)) -
                       1.0 / (2.0 * (nc - 1.0));
  return EffectSize{"lnCVR", value, std::exp(value)};
}

double variability_change_percent(const EffectSize& e) {
  if (e.name != "lnCVR") {
    throw UsageError("variability_change_percent expects an lnCVR effect size");
  }
  return 100.0 * (std::exp(e.value) - 1.0);
}

EffectSize cohens_d(const GroupSample& control, const GroupSample& treatment) {
  return cohens_d(summarize(control), summarize(treatment));
}

EffectSize hedges_g(const GroupSample& control, const GroupSample& treatment) {
  return hedges_g(summarize(control), summarize(treatment));
}

EffectSize ln_cvr(const GroupSample& control, const GroupSample& treatment) {
  return ln_cvr(summarize(control), summarize(treatment));
}

}  // namespace twoarm
