#ifndef STANDBY_OPTIMIZER_HPP
#define STANDBY_OPTIMIZER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "standby/distributions.hpp"
#include "standby/orders.hpp"
#include "standby/realization.hpp"

namespace standby {

struct PlanEvaluation {
  ActivationPlan plan;
  double lifetime;
  std::size_t rank;  // 1-based; ties share order by lexicographic plan
};

struct BruteForceResult {
  PlanEvaluation best;
  std::vector<PlanEvaluation> ranking;  // all n! plans, rank 1 first
};

/// Evaluates system_lifetime for every activation plan. n > 10 throws
/// std::domain_error (factorial guard). Equal lifetimes rank by
/// lexicographic plan order.
BruteForceResult brute_force_best_plan(const ActiveLifetimes& t, const WearModel& wear,
                                       Convention conv);

/// True iff activating in ascending order of realized lifetime matches the
/// brute-force maximum under Linear(w), within 1e-12 relative.
bool verify_ascending_optimal(const ActiveLifetimes& t, double w);

struct SpSortReport {
  ActivationPlan plan;
  bool converged = true;          // a full pass ran without swaps
  bool transitive = true;         // final order passes the all-pairs check
  std::size_t passes = 0;
  std::size_t swaps = 0;
  std::vector<std::string> violations;  // all-pairs check failures, if any
};

/// Adjacent-swap sort of the activation sequence using pairwise sp
/// estimates: neighbors (i, i+1) swap when P(T_{i+1} >= T_i) is below 0.5
/// by more than the Wilson CI halfwidth (within-CI ties keep the current
/// order). Stochastic precedence is not transitive in general, so the sort
/// caps its passes and reports non-convergence or an inconsistent final
/// order instead of looping.
SpSortReport sp_sort_plan(const std::vector<DistributionSpec>& dists,
                          std::uint64_t n_samples, std::uint64_t seed,
                          unsigned threads = 1);

struct CounterexampleWitness {
  double t1 = 0.0;  // t1 < t2
  double t2 = 0.0;
  double ascending_lifetime = 0.0;
  double descending_lifetime = 0.0;
};

/// Samples (t1 < t2) pairs uniformly from (lo, hi) and returns the first
/// pair where activating the weaker component first is strictly worse
/// (descending exceeds ascending by more than 1e-9), or nullopt.
std::optional<CounterexampleWitness> counterexample_search(
    const WearModel& wear, Convention conv, double lo, double hi,
    std::uint64_t count, std::uint64_t seed);

/// Ranking CSV: "plan,lifetime,rank" with dash-joined 1-based plans.
std::string ranking_to_csv(const std::vector<PlanEvaluation>& ranking, bool header = true);

}  // namespace standby

#endif
