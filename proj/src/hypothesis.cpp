#include "twoarm/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "twoarm/errors.hpp"
#include "twoarm/specfun.hpp"

namespace twoarm {

namespace {

bool all_equal(std::span<const double> x) {
  for (double v : x) {
    if (v != x.front()) return false;
  }
  return true;
}

double poly(const double* c, int order, double x) {
  double value = c[0];
  double p = 1.0;
  for (int i = 1; i < order; ++i) {
    p *= x;
    value += c[i] * p;
  }
  return value;
}

// Royston's correction polynomials for the W half-sample coefficients and
// for the location/scale of the transformed null distribution (AS R94).
constexpr double kC1[6] = {0.0,      0.221157,  -0.147981,
                           -2.071190, 4.434685, -2.706056};
constexpr double kC2[6] = {0.0,      0.042981,  -0.293762,
                           -1.752461, 5.682633, -3.582633};
constexpr double kC3[4] = {0.544, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[2] = {-2.273, 0.459};
constexpr double kPi6 = 1.90985931710274;   // 6/pi
constexpr double kStqr = 1.04719755119660;  // asin(sqrt(3/4))

// Full antisymmetric vector of W coefficients for sample size n.
std::vector<double> sw_coefficients(std::size_t n) {
  const std::size_t nn2 = n / 2;
  std::vector<double> a(nn2);
  if (n == 3) {
    a[0] = std::sqrt(0.5);
  } else {
    const double an25 = static_cast<double>(n) + 0.25;
    double summ2 = 0.0;
    for (std::size_t i = 1; i <= nn2; ++i) {
      a[i - 1] = normal_quantile((static_cast<double>(i) - 0.375) / an25);
      summ2 += a[i - 1] * a[i - 1];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
    const double a1 = poly(kC1, 6, rsn) - a[0] / ssumm2;

    std::size_t i1 = 0;
    double fac = 0.0;
    if (n > 5) {
      i1 = 3;
      const double a2 = -a[1] / ssumm2 + poly(kC2, 6, rsn);
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
    } else {
      i1 = 2;
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
    }
    a[0] = a1;
    for (std::size_t i = i1; i <= nn2; ++i) a[i - 1] = -a[i - 1] / fac;
  }

  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < nn2; ++i) {
    c[i] = -a[i];
    c[n - 1 - i] = a[i];
  }
  return c;
}

struct AnovaSums {
  double ssb = 0.0;
  double ssw = 0.0;
  std::size_t total = 0;
};

AnovaSums anova_sums(std::span<const GroupSample> groups) {
  if (groups.size() < 2) {
    throw DomainError("ANOVA requires at least 2 groups");
  }
  std::size_t total = 0;
  bool every_group_constant = true;
  std::vector<double> means(groups.size());
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const auto& scores = groups[j].scores;
    if (scores.size() < 2) {
      throw InsufficientDataError("each group needs at least 2 scores");
    }
    detail::require_finite(scores, "one_way_anova");
    means[j] = all_equal(scores) ? scores.front() : detail::mean_of(scores);
    every_group_constant = every_group_constant && all_equal(scores);
    total += scores.size();
  }
  if (every_group_constant) {
    const bool same_level =
        std::all_of(means.begin(), means.end(),
                    [&](double m) { return m == means.front(); });
    throw DegenerateSampleError(
        same_level ? "all scores identical: zero within- and between-group variance"
                   : "every group is constant: zero within-group variance");
  }

  double grand = 0.0;
  for (const auto& g : groups) {
    for (double v : g.scores) grand += v;
  }
  grand /= static_cast<double>(total);

  AnovaSums s;
  s.total = total;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const double nj = static_cast<double>(groups[j].scores.size());
    s.ssb += nj * (means[j] - grand) * (means[j] - grand);
    s.ssw += detail::sum_sq_dev(groups[j].scores, means[j]);
  }
  return s;
}

}  // namespace

TestResult shapiro_wilk(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3 || n > 5000) {
    throw UnsupportedSizeError("Shapiro-Wilk requires 3 <= n <= 5000");
  }
  detail::require_finite(x, "shapiro_wilk");
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  if (!(range > 1e-19)) {
    throw DegenerateSampleError("sample has zero range");
  }

  const std::vector<double> c = sw_coefficients(n);

  // W is the squared correlation between the scaled order statistics and
  // the coefficient vector.
  double sa = 0.0;
  double sx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += c[i];
    sx += sorted[i] / range;
  }
  sa /= static_cast<double>(n);
  sx /= static_cast<double>(n);
  double ssa = 0.0, ssx = 0.0, sax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = c[i] - sa;
    const double dx = sorted[i] / range - sx;
    ssa += da * da;
    ssx += dx * dx;
    sax += da * dx;
  }
  const double ssassx = std::sqrt(ssa * ssx);
  double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  if (w1 < 0.0) w1 = 0.0;
  const double w = 1.0 - w1;

  TestResult r;
  r.test_name = "shapiro_wilk";
  r.statistic = w;
  r.df1 = static_cast<double>(n);

  if (n == 3) {
    double pw = kPi6 * (std::asin(std::sqrt(w)) - kStqr);
    r.p_value = std::clamp(pw, 0.0, 1.0);
    return r;
  }

  const double y = std::log(w1);
  const double an = static_cast<double>(n);
  double m = 0.0;
  double s = 1.0;
  double z = 0.0;
  if (n <= 11) {
    const double gamma = poly(kG, 2, an);
    if (y > gamma) {
      r.p_value = 1e-99;
      return r;
    }
    const double y2 = -std::log(gamma - y);
    m = poly(kC3, 4, an);
    s = std::exp(poly(kC4, 4, an));
    z = (y2 - m) / s;
  } else {
    const double lx = std::log(an);
    m = poly(kC5, 4, lx);
    s = std::exp(poly(kC6, 3, lx));
    z = (y - m) / s;
  }
  r.p_value = 1.0 - normal_cdf(z);
  return r;
}

TestResult one_way_anova(std::span<const GroupSample> groups) {
  const AnovaSums s = anova_sums(groups);
  const double df1 = static_cast<double>(groups.size()) - 1.0;
  const double df2 =
      static_cast<double>(s.total) - static_cast<double>(groups.size());
  const double f = (s.ssb / df1) / (s.ssw / df2);

  TestResult r;
  r.test_name = "one_way_anova";
  r.statistic = f;
  r.df1 = df1;
  r.df2 = df2;
  r.p_value = 1.0 - f_cdf(f, df1, df2);
  return r;
}

TestResult brown_forsythe(std::span<const GroupSample> groups, Center center) {
  std::vector<GroupSample> deviations(groups.begin(), groups.end());
  for (auto& g : deviations) {
    if (g.scores.size() < 2) {
      throw InsufficientDataError("each group needs at least 2 scores");
    }
    detail::require_finite(g.scores, "brown_forsythe");
    if (g.scores.size() == 2) {
      // Both deviations from the midpoint equal |x1 - x2| / 2; computing
      // them that way keeps the pair exactly constant instead of leaving a
      // rounding-noise variance in the transformed group.
      const double d = 0.5 * std::fabs(g.scores[0] - g.scores[1]);
      g.scores[0] = d;
      g.scores[1] = d;
      continue;
    }
    const double c = center == Center::median ? detail::median_of(g.scores)
                                              : detail::mean_of(g.scores);
    for (double& v : g.scores) v = std::fabs(v - c);
  }
  TestResult r = one_way_anova(deviations);
  r.test_name = center == Center::median ? "brown_forsythe" : "levene";
  return r;
}

TestResult independent_t_test(const GroupSample& control,
                              const GroupSample& treatment) {
  const auto& xc = control.scores;
  const auto& xt = treatment.scores;
  if (xc.size() < 2 || xt.size() < 2) {
    throw InsufficientDataError("t-test needs at least 2 scores per group");
  }
  detail::require_finite(xc, "independent_t_test");
  detail::require_finite(xt, "independent_t_test");
  if (all_equal(xc) && all_equal(xt)) {
    throw DegenerateSampleError("both groups are constant: pooled variance is zero");
  }
  const double nc = static_cast<double>(xc.size());
  const double nt = static_cast<double>(xt.size());
  const double mc = detail::mean_of(xc);
  const double mt = detail::mean_of(xt);
  const double df = nc + nt - 2.0;
  const double pooled =
      (detail::sum_sq_dev(xc, mc) + detail::sum_sq_dev(xt, mt)) / df;
  const double se = std::sqrt(pooled * (1.0 / nc + 1.0 / nt));

  TestResult r;
  r.test_name = "independent_t";
  r.estimate = mt - mc;
  r.statistic = *r.estimate / se;
  r.df1 = df;
  r.p_value = two_sided_t_p_value(r.statistic, df);
  return r;
}

TestResult dependent_t_test(std::span<const double> control,
                            std::span<const double> treatment) {
  if (control.size() != treatment.size()) {
    throw DomainError("paired samples must have equal length");
  }
  if (control.size() < 2) {
    throw InsufficientDataError("paired t-test needs at least 2 pairs");
  }
  detail::require_finite(control, "dependent_t_test");
  detail::require_finite(treatment, "dependent_t_test");
  std::vector<double> d(control.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = treatment[i] - control[i];
  if (all_equal(d)) {
    throw DegenerateSampleError("all paired differences are equal");
  }
  const double n = static_cast<double>(d.size());
  const double md = detail::mean_of(d);
  const double sd = std::sqrt(detail::sum_sq_dev(d, md) / (n - 1.0));

  TestResult r;
  r.test_name = "dependent_t";
  r.estimate = md;
  r.statistic = md / (sd / std::sqrt(n));
  r.df1 = n - 1.0;
  r.p_value = two_sided_t_p_value(r.statistic, r.df1);
  return r;
}

}  // namespace twoarm
