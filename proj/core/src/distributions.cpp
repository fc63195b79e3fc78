#include "standby/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "standby/wear.hpp"

namespace standby {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Regularized incomplete gamma, lower tail via the series (x < a + 1) and
// upper tail via the Lentz continued fraction; whichever branch is requested
// directly avoids cancellation in that tail.
double gamma_series_p(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_cf_q(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  return x < a + 1.0 ? gamma_series_p(a, x) : 1.0 - gamma_cf_q(a, x);
}

double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_series_p(a, x) : gamma_cf_q(a, x);
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z * (1.0 / std::numbers::sqrt2)); }

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Exponential: return "exponential";
    case Family::Weibull: return "weibull";
    case Family::Gamma: return "gamma";
    case Family::LogNormal: return "lognormal";
    case Family::Uniform: return "uniform";
    case Family::Deterministic: return "deterministic";
  }
  return "?";
}

DistributionSpec DistributionSpec::exponential(double rate) {
  require(rate > 0.0, "exponential: rate must be > 0");
  return {Family::Exponential, rate, 0.0};
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
  require(shape > 0.0 && scale > 0.0, "weibull: shape and scale must be > 0");
  return {Family::Weibull, shape, scale};
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
  require(shape > 0.0 && scale > 0.0, "gamma: shape and scale must be > 0");
  return {Family::Gamma, shape, scale};
}

DistributionSpec DistributionSpec::lognormal(double mu, double sigma) {
  require(std::isfinite(mu) && sigma > 0.0, "lognormal: sigma must be > 0");
  return {Family::LogNormal, mu, sigma};
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  require(a >= 0.0 && a < b, "uniform: requires 0 <= a < b");
  return {Family::Uniform, a, b};
}

DistributionSpec DistributionSpec::deterministic(double value) {
  require(value > 0.0, "deterministic: value must be > 0");
  return {Family::Deterministic, value, 0.0};
}

double DistributionSpec::cdf(double t) const {
  if (t < 0.0) return 0.0;
  switch (family_) {
    case Family::Exponential:
      return -std::expm1(-p1_ * t);
    case Family::Weibull:
      return -std::expm1(-std::pow(t / p2_, p1_));
    case Family::Gamma:
      return gamma_p(p1_, t / p2_);
    case Family::LogNormal:
      if (t == 0.0) return 0.0;
      return std_normal_cdf((std::log(t) - p1_) / p2_);
    case Family::Uniform:
      if (t <= p1_) return 0.0;
      if (t >= p2_) return 1.0;
      return (t - p1_) / (p2_ - p1_);
    case Family::Deterministic:
      return t >= p1_ ? 1.0 : 0.0;
  }
  return 0.0;
}

double DistributionSpec::pdf(double t) const {
  if (family_ == Family::Deterministic)
    throw std::domain_error("deterministic law has no density");
  if (t < 0.0) return 0.0;
  switch (family_) {
    case Family::Exponential:
      return p1_ * std::exp(-p1_ * t);
    case Family::Weibull: {
      if (t == 0.0) return p1_ < 1.0 ? kInf : (p1_ == 1.0 ? 1.0 / p2_ : 0.0);
      const double z = t / p2_;
      return (p1_ / p2_) * std::pow(z, p1_ - 1.0) * std::exp(-std::pow(z, p1_));
    }
    case Family::Gamma: {
      if (t == 0.0) return p1_ < 1.0 ? kInf : (p1_ == 1.0 ? 1.0 / p2_ : 0.0);
      return std::exp((p1_ - 1.0) * std::log(t) - t / p2_ - std::lgamma(p1_) -
                      p1_ * std::log(p2_));
    }
    case Family::LogNormal: {
      if (t == 0.0) return 0.0;
      const double z = (std::log(t) - p1_) / p2_;
      return std::exp(-0.5 * z * z) / (t * p2_ * std::sqrt(2.0 * std::numbers::pi));
    }
    case Family::Uniform:
      return (t >= p1_ && t <= p2_) ? 1.0 / (p2_ - p1_) : 0.0;
    default:
      return 0.0;
  }
}

double DistributionSpec::hazard(double t) const {
  if (family_ == Family::Deterministic)
    throw std::domain_error("hazard rate undefined for deterministic law");
  if (t < 0.0) return 0.0;
  switch (family_) {
    case Family::Exponential:
      return p1_;
    case Family::Weibull:
      if (t == 0.0) return p1_ < 1.0 ? kInf : (p1_ == 1.0 ? 1.0 / p2_ : 0.0);
      return (p1_ / p2_) * std::pow(t / p2_, p1_ - 1.0);
    case Family::Gamma: {
      const double sf = gamma_q(p1_, t / p2_);
      if (sf <= 0.0)
        throw std::domain_error("hazard rate undefined beyond the support");
      return pdf(t) / sf;
    }
    case Family::LogNormal: {
      if (t == 0.0) return 0.0;
      const double z = (std::log(t) - p1_) / p2_;
      const double sf = 0.5 * std::erfc(z * (1.0 / std::numbers::sqrt2));
      if (sf <= 0.0)
        throw std::domain_error("hazard rate undefined beyond the support");
      return pdf(t) / sf;
    }
    case Family::Uniform:
      if (t >= p2_)
        throw std::domain_error("hazard rate undefined beyond the support");
      return t >= p1_ ? 1.0 / (p2_ - t) : 0.0;
    default:
      return 0.0;
  }
}

double DistributionSpec::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("quantile: p must lie in [0, 1)");
  return quantile_unchecked(p);
}

double DistributionSpec::quantile_unchecked(double p) const {
  switch (family_) {
    case Family::Exponential:
      return -std::log1p(-p) / p1_;
    case Family::Weibull:
      return p2_ * std::pow(-std::log1p(-p), 1.0 / p1_);
    case Family::Uniform:
      return p1_ + p * (p2_ - p1_);
    case Family::Deterministic:
      return p1_;
    case Family::Gamma:
    case Family::LogNormal: {
      // No closed form used here: bracketing bisection on the cdf.
      if (p == 0.0) return 0.0;
      double lo = 0.0;
      double hi = 1.0;
      while (cdf(hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) return hi;
      }
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (cdf(mid) < p)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

double DistributionSpec::standby_cdf(const WearModel& wear, double t) const {
  if (t < 0.0) return 0.0;
  return cdf(wear.consumed(t));
}

std::string DistributionSpec::describe() const {
  std::ostringstream os;
  os << family_name(family_) << "(" << p1_;
  if (family_ == Family::Weibull || family_ == Family::Gamma ||
      family_ == Family::LogNormal || family_ == Family::Uniform)
    os << ", " << p2_;
  os << ")";
  return os.str();
}

}  // namespace standby
