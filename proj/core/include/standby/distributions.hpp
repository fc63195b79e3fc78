#ifndef STANDBY_DISTRIBUTIONS_HPP
#define STANDBY_DISTRIBUTIONS_HPP

#include <string>

#include "standby/rng.hpp"

namespace standby {

class WearModel;

enum class Family {
  Exponential,
  Weibull,
  Gamma,
  LogNormal,
  Uniform,
  Deterministic,
};

std::string family_name(Family f);

/// Parametric lifetime law of a component in active mode. Parameters are
/// validated at construction; evaluation never fails on in-range inputs.
/// Support is contained in [0, inf).
class DistributionSpec {
 public:
  static DistributionSpec exponential(double rate);
  static DistributionSpec weibull(double shape, double scale);
  static DistributionSpec gamma(double shape, double scale);
  static DistributionSpec lognormal(double mu, double sigma);
  static DistributionSpec uniform(double a, double b);
  static DistributionSpec deterministic(double value);

  Family family() const noexcept { return family_; }
  double param1() const noexcept { return p1_; }
  double param2() const noexcept { return p2_; }

  /// P(T <= t). Negative t returns 0.
  double cdf(double t) const;

  /// Density; Deterministic has none and throws std::domain_error.
  double pdf(double t) const;

  /// Failure rate pdf / (1 - cdf). Throws std::domain_error for
  /// Deterministic and outside the support where the rate is undefined.
  double hazard(double t) const;

  /// Generalized inverse of the cdf; p = 0 maps to the infimum of the
  /// support. p outside [0, 1) throws std::domain_error.
  double quantile(double p) const;

  /// Inverse-transform draw consuming exactly one uniform from the stream.
  double sample(RngStream& rng) const { return quantile_unchecked(rng.next_uniform()); }

  /// Lifetime cdf in standby mode: cdf evaluated at the wear consumed by
  /// clock time t.
  double standby_cdf(const WearModel& wear, double t) const;

  std::string describe() const;

 private:
  DistributionSpec(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}

  double quantile_unchecked(double p) const;

  Family family_;
  double p1_;
  double p2_;
};

}  // namespace standby

#endif
