#include "twoarm/descriptives.hpp"

#include <algorithm>
#include <cmath>

#include "twoarm/errors.hpp"

namespace twoarm {

namespace detail {

void require_finite(std::span<const double> values, const char* context) {
  for (const double v : values) {
    if (!std::isfinite(v)) {
      throw DomainError(std::string(context) + ": scores must be finite");
    }
  }
}

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double median_of(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

double sum_sq_dev(std::span<const double> values, double center) {
  double ss = 0.0;
  for (const double v : values) {
    const double d = v - center;
    ss += d * d;
  }
  return ss;
}

}  // namespace detail

DescriptiveStats describe(std::span<const double> scores) {
  if (scores.size() < 2) {
    throw InsufficientDataError("describe requires at least 2 scores, got " +
                                std::to_string(scores.size()));
  }
  detail::require_finite(scores, "describe");

  DescriptiveStats s;
  s.n = scores.size();
  s.mean = detail::mean_of(scores);
  s.median = detail::median_of(scores);
  // All-equal samples get sd exactly 0, not a rounding residue.
  const bool all_equal =
      std::all_of(scores.begin(), scores.end(),
                  [&](double v) { return v == scores.front(); });
  s.sd = all_equal ? 0.0
                   : std::sqrt(detail::sum_sq_dev(scores, s.mean) /
                               static_cast<double>(s.n - 1));
  return s;
}

DescriptiveStats describe(const GroupSample& g) { return describe(std::span(g.scores)); }

double coefficient_of_variation(const DescriptiveStats& s) {
  if (!(s.mean > 0.0)) {
    throw CvUndefinedError(
        "coefficient of variation is undefined for non-positive mean " +
        std::to_string(s.mean));
  }
  return s.sd / s.mean;
}

}  // namespace twoarm
