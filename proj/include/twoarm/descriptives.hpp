#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace twoarm {

/// Labeled scores for one experimental arm.
struct GroupSample {
  std::string label;
  std::vector<double> scores;
};

/// Sample summary: mean, sd with the n-1 denominator, and the midpoint
/// median (average of the two central order statistics for even n).
struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double median = 0.0;
};

/// Summarizes a sample of at least two finite scores.
DescriptiveStats describe(std::span<const double> scores);
DescriptiveStats describe(const GroupSample& g);

/// sd/mean; throws CvUndefinedError for non-positive means.
double coefficient_of_variation(const DescriptiveStats& s);

namespace detail {
/// Throws DomainError if any value is NaN or infinite.
void require_finite(std::span<const double> values, const char* context);
/// Mean of a nonempty span.
double mean_of(std::span<const double> values);
/// Midpoint median of a nonempty span (copies and sorts).
double median_of(std::span<const double> values);
/// Sum of squared deviations from the given center.
double sum_sq_dev(std::span<const double> values, double center);
}  // namespace detail

}  // namespace twoarm
