#pragma once

#include "twoarm/rng.hpp"

namespace twoarm {

/// Shape pair of a Beta population. Both shapes must be positive.
struct BetaParams {
  double alpha;
  double beta;
};

/// Moments of a Beta population derived from its shape pair.
struct BetaMoments {
  double mean;
  double sd;
};

/// Throws DomainError unless both shapes are positive and finite.
void validate(const BetaParams& p);

/// Mean alpha/(alpha+beta) and sd sqrt(alpha*beta / ((alpha+beta)^2 *
/// (alpha+beta+1))).
BetaMoments beta_mean_sd(const BetaParams& p);

/// Inverts beta_mean_sd: requires 0 < mean < 1 and 0 < sd^2 < mean*(1-mean),
/// otherwise throws InfeasibleMomentsError.
BetaParams beta_from_moments(double mean, double sd);

/// Density at x in [0, 1]. Diverges (returns +inf) at a boundary whose
/// shape parameter is below one.
double beta_pdf(const BetaParams& p, double x);

/// One Beta variate strictly inside (0, 1). Ratio of two Gamma draws;
/// Gamma via the Marsaglia-Tsang squeeze for shape >= 1 and the
/// Gamma(shape+1) * U^(1/shape) boost below one.
double sample_beta(const BetaParams& p, RngState& rng);

}  // namespace twoarm
