#ifndef STANDBY_ORDERS_HPP
#define STANDBY_ORDERS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "standby/distributions.hpp"
#include "standby/realization.hpp"

namespace standby {

/// Monte Carlo estimate of P(A >= B) with a 95% Wilson score interval.
struct SpEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  double ci_halfwidth() const { return 0.5 * (ci_high - ci_low); }
  std::string to_json() const;
};

/// Builds the estimate from a success count (Wilson interval, z = 1.959964).
SpEstimate make_sp_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed);

/// P(T_a >= T_b) by simulation; ties count for the first argument. Within
/// replication k (stream_id = k) the draw for a precedes the draw for b.
/// n < 100 throws std::domain_error. Results are identical for any thread
/// count.
SpEstimate sp_estimate(const DistributionSpec& a, const DistributionSpec& b,
                       std::uint64_t n, std::uint64_t seed, unsigned threads = 1);

/// Closed-form P(T_a >= T_b) for independent exponentials:
/// lambda_b / (lambda_a + lambda_b). Nonpositive rates throw.
double sp_exact_exponential(double lambda_a, double lambda_b);

/// Coupled comparison of two activation plans: each replication samples ONE
/// lifetime vector (common random numbers; component i is the i-th draw of
/// stream k) and counts system_lifetime(t, planA) >= system_lifetime(t, planB).
SpEstimate coupled_system_sp(const std::vector<DistributionSpec>& dists,
                             const ActivationPlan& plan_a, const ActivationPlan& plan_b,
                             const WearModel& wear, Convention conv,
                             std::uint64_t n, std::uint64_t seed, unsigned threads = 1);

/// a <=_st b on the grid: cdf(a, t) >= cdf(b, t) at every point.
bool check_usual_order(const DistributionSpec& a, const DistributionSpec& b,
                       std::span<const double> grid);

/// a <=_hr b on the grid: hazard(a, t) >= hazard(b, t) at every point.
bool check_hr_order(const DistributionSpec& a, const DistributionSpec& b,
                    std::span<const double> grid);

}  // namespace standby

#endif
