#include "standby/orders.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "standby/parallel.hpp"

namespace standby {

namespace {
constexpr double kWilsonZ = 1.959964;  // 95% score interval
}

SpEstimate make_sp_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::domain_error("sp estimate: n must be > 0");
  SpEstimate e;
  e.successes = successes;
  e.n = n;
  e.seed = seed;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  e.p_hat = p;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      kWilsonZ * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  e.ci_low = std::min(std::max(0.0, center - half), p);
  e.ci_high = std::max(std::min(1.0, center + half), p);
  return e;
}

std::string SpEstimate::to_json() const {
  nlohmann::ordered_json j;
  j["p_hat"] = p_hat;
  j["ci_low"] = ci_low;
  j["ci_high"] = ci_high;
  j["n"] = n;
  j["seed"] = seed;
  return j.dump(2);
}

SpEstimate sp_estimate(const DistributionSpec& a, const DistributionSpec& b,
                       std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n < 100) throw std::domain_error("sp_estimate: n must be >= 100");
  const std::uint64_t successes = count_successes(n, threads, [&](std::uint64_t k) {
    RngStream rng(seed, k);
    const double ta = a.sample(rng);
    const double tb = b.sample(rng);
    return ta >= tb;
  });
  return make_sp_estimate(successes, n, seed);
}

double sp_exact_exponential(double lambda_a, double lambda_b) {
  if (!(lambda_a > 0.0 && lambda_b > 0.0))
    throw std::domain_error("sp_exact_exponential: rates must be > 0");
  return lambda_b / (lambda_a + lambda_b);
}

SpEstimate coupled_system_sp(const std::vector<DistributionSpec>& dists,
                             const ActivationPlan& plan_a, const ActivationPlan& plan_b,
                             const WearModel& wear, Convention conv,
                             std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n < 100) throw std::domain_error("coupled_system_sp: n must be >= 100");
  if (plan_a.size() != dists.size() || plan_b.size() != dists.size())
    throw std::domain_error("coupled_system_sp: plan sizes must match component count");
  const std::uint64_t successes = count_successes(n, threads, [&](std::uint64_t k) {
    RngStream rng(seed, k);
    ActiveLifetimes t(dists.size());
    for (std::size_t i = 0; i < dists.size(); ++i) t[i] = dists[i].sample(rng);
    const double ya = system_lifetime(t, plan_a, wear, conv).lifetime;
    const double yb = system_lifetime(t, plan_b, wear, conv).lifetime;
    return ya >= yb;
  });
  return make_sp_estimate(successes, n, seed);
}

bool check_usual_order(const DistributionSpec& a, const DistributionSpec& b,
                       std::span<const double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("grid must be strictly increasing");
  for (double t : grid)
    if (a.cdf(t) < b.cdf(t)) return false;
  return true;
}

bool check_hr_order(const DistributionSpec& a, const DistributionSpec& b,
                    std::span<const double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("grid must be strictly increasing");
  for (double t : grid)
    if (a.hazard(t) < b.hazard(t)) return false;
  return true;
}

}  // namespace standby
