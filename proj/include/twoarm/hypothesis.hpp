#pragma once

#include <optional>
#include <span>
#include <string>

#include "twoarm/descriptives.hpp"

namespace twoarm {

/// Outcome of a hypothesis test. df2 is set for F-type tests only;
/// estimate carries the signed mean difference for t-tests.
struct TestResult {
  std::string test_name;
  double statistic = 0.0;
  double df1 = 0.0;
  std::optional<double> df2;
  double p_value = 1.0;
  std::optional<double> estimate;
};

/// Centering used by the variance-homogeneity test. Median gives the
/// Brown-Forsythe test; mean gives the classic Levene test.
enum class Center { median, mean };

/// Shapiro-Wilk normality test for 3 <= n <= 5000, W statistic and p-value
/// per Royston's AS R94 (1995) approximation.
TestResult shapiro_wilk(std::span<const double> x);

/// One-way fixed-effects ANOVA across k >= 2 groups of at least 2 scores.
TestResult one_way_anova(std::span<const GroupSample> groups);

/// ANOVA on absolute deviations from each group's center; the
/// homogeneity-of-variances test.
TestResult brown_forsythe(std::span<const GroupSample> groups,
                          Center center = Center::median);

/// Pooled-variance two-sample t-test; estimate = mean(treatment) - mean(control).
TestResult independent_t_test(const GroupSample& control, const GroupSample& treatment);

/// Paired t-test on aligned samples; estimate = mean(treatment - control).
TestResult dependent_t_test(std::span<const double> control,
                            std::span<const double> treatment);

}  // namespace twoarm
