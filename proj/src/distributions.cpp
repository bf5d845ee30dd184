#include "twoarm/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "twoarm/errors.hpp"
#include "twoarm/specfun.hpp"

namespace twoarm {

namespace {

// Marsaglia-Tsang (2000) for shape >= 1. Draw order per attempt is one
// normal then one uniform; part of the deterministic stream contract.
double sample_gamma_ge1(double shape, RngState& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_gamma(double shape, RngState& rng) {
  if (shape >= 1.0) return sample_gamma_ge1(shape, rng);
  const double g = sample_gamma_ge1(shape + 1.0, rng);
  const double u = rng.next_uniform();
  return g * std::pow(u, 1.0 / shape);
}

}  // namespace

void validate(const BetaParams& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta)) {
    throw DomainError("Beta shape parameters must be positive and finite, got (" +
                      std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ")");
  }
}

BetaMoments beta_mean_sd(const BetaParams& p) {
  validate(p);
  const double s = p.alpha + p.beta;
  const double mean = p.alpha / s;
  const double var = p.alpha * p.beta / (s * s * (s + 1.0));
  return {mean, std::sqrt(var)};
}

BetaParams beta_from_moments(double mean, double sd) {
  if (!(mean > 0.0) || !(mean < 1.0) || !std::isfinite(mean)) {
    throw DomainError("Beta mean must lie strictly in (0, 1), got " +
                      std::to_string(mean));
  }
  if (!(sd > 0.0) || !std::isfinite(sd)) {
    throw DomainError("Beta sd must be positive and finite, got " +
                      std::to_string(sd));
  }
  const double var = sd * sd;
  const double bound = mean * (1.0 - mean);
  if (!(var < bound)) {
    throw InfeasibleMomentsError(
        "no Beta distribution has mean " + std::to_string(mean) + " and sd " +
        std::to_string(sd) + " (need sd^2 < mean*(1-mean) = " +
        std::to_string(bound) + ")");
  }
  const double nu = bound / var - 1.0;
  return {mean * nu, (1.0 - mean) * nu};
}

double beta_pdf(const BetaParams& p, double x) {
  validate(p);
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw DomainError("beta_pdf requires x in [0, 1], got " + std::to_string(x));
  }
  if (x == 0.0) {
    if (p.alpha < 1.0) return std::numeric_limits<double>::infinity();
    if (p.alpha > 1.0) return 0.0;
    return p.beta;  // alpha == 1: density b*(1-x)^(b-1)
  }
  if (x == 1.0) {
    if (p.beta < 1.0) return std::numeric_limits<double>::infinity();
    if (p.beta > 1.0) return 0.0;
    return p.alpha;
  }
  const double ln_norm =
      ln_gamma(p.alpha + p.beta) - ln_gamma(p.alpha) - ln_gamma(p.beta);
  return std::exp(ln_norm + (p.alpha - 1.0) * std::log(x) +
                  (p.beta - 1.0) * std::log1p(-x));
}

double sample_beta(const BetaParams& p, RngState& rng) {
  validate(p);
  const double ga = sample_gamma(p.alpha, rng);
  const double gb = sample_gamma(p.beta, rng);
  double x = ga / (ga + gb);
  // Clamp floating-point edge cases into the open interval so downstream
  // logs and CVs stay finite.
  const double lo = std::numeric_limits<double>::min();
  const double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  if (!(x > lo)) x = lo;
  if (!(x < 1.0)) x = hi;
  return x;
}

}  // namespace twoarm
