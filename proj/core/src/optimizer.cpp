#include "standby/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "standby/rng.hpp"

namespace standby {

BruteForceResult brute_force_best_plan(const ActiveLifetimes& t, const WearModel& wear,
                                       Convention conv) {
  const std::size_t n = t.size();
  if (n == 0) throw std::domain_error("brute_force_best_plan: empty lifetime vector");
  if (n > 10)
    throw std::domain_error(
        "brute_force_best_plan: refusing n > 10 (factorial enumeration guard)");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<PlanEvaluation> evals;
  do {
    ActivationPlan plan(perm);
    const double life = system_lifetime(t, plan, wear, conv).lifetime;
    evals.push_back({std::move(plan), life, 0});
  } while (std::next_permutation(perm.begin(), perm.end()));

  // next_permutation visits plans in lexicographic order, so a stable sort
  // by descending lifetime gives ties the lexicographically smaller rank.
  std::stable_sort(evals.begin(), evals.end(),
                   [](const PlanEvaluation& a, const PlanEvaluation& b) {
                     return a.lifetime > b.lifetime;
                   });
  for (std::size_t i = 0; i < evals.size(); ++i) evals[i].rank = i + 1;

  BruteForceResult result{evals.front(), std::move(evals)};
  return result;
}

bool verify_ascending_optimal(const ActiveLifetimes& t, double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw std::domain_error("verify_ascending_optimal: w must lie in [0, 1]");
  const WearModel wear = WearModel::linear(w);
  const auto best = brute_force_best_plan(t, wear, Convention::VirtualAge).best;
  const double ascending =
      system_lifetime(t, ActivationPlan::ascending_by(t), wear, Convention::VirtualAge).lifetime;
  const double scale = std::max(std::fabs(best.lifetime), 1.0);
  return ascending >= best.lifetime - 1e-12 * scale;
}

SpSortReport sp_sort_plan(const std::vector<DistributionSpec>& dists,
                          std::uint64_t n_samples, std::uint64_t seed, unsigned threads) {
  const std::size_t n = dists.size();
  if (n < 2) throw std::domain_error("sp_sort_plan: needs at least two components");

  // Cache one estimate per unordered pair so repeated comparisons are
  // consistent. prefers(a, b) == true keeps a before b.
  std::vector<int> decision(n * n, -1);  // 1: a stays before b, 0: swap
  auto prefers = [&](std::size_t a, std::size_t b) {
    if (decision[a * n + b] >= 0) return decision[a * n + b] == 1;
    const SpEstimate est =
        sp_estimate(dists[b], dists[a], n_samples, derive_seed(seed, a * n + b), threads);
    // Swap only on clear evidence: P(T_b >= T_a) below 0.5 beyond the CI.
    const bool keep = !(est.p_hat + est.ci_halfwidth() < 0.5);
    decision[a * n + b] = keep ? 1 : 0;
    decision[b * n + a] = keep ? 0 : 1;
    return keep;
  };

  SpSortReport report{ActivationPlan::identity(n)};
  std::vector<std::size_t> order = report.plan.order();
  const std::size_t max_passes = n * (n - 1) / 2 + 1;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    ++report.passes;
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!prefers(order[i], order[i + 1])) {
        std::swap(order[i], order[i + 1]);
        ++report.swaps;
        swapped = true;
      }
    }
    if (!swapped) break;
    if (pass + 1 == max_passes) report.converged = false;
  }

  // Adjacent passes can converge while a non-adjacent pair is still out of
  // order (sp is not transitive); report those instead of claiming a total
  // order.
  for (std::size_t i = 0; i < n && report.converged; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!prefers(order[i], order[j])) {
        report.transitive = false;
        std::ostringstream os;
        os << "components " << order[i] + 1 << " and " << order[j] + 1
           << " violate the final order";
        report.violations.push_back(os.str());
      }

  report.plan = ActivationPlan(order);
  return report;
}

std::optional<CounterexampleWitness> counterexample_search(
    const WearModel& wear, Convention conv, double lo, double hi,
    std::uint64_t count, std::uint64_t seed) {
  if (!(lo >= 0.0 && hi > lo))
    throw std::domain_error("counterexample_search: requires 0 <= lo < hi");
  for (std::uint64_t k = 0; k < count; ++k) {
    RngStream rng(seed, k);
    double t1 = lo + rng.next_uniform() * (hi - lo);
    double t2 = lo + rng.next_uniform() * (hi - lo);
    if (t1 > t2) std::swap(t1, t2);
    if (t1 == t2) continue;
    const ActiveLifetimes t{t1, t2};
    const double asc =
        system_lifetime(t, ActivationPlan({0, 1}), wear, conv).lifetime;
    const double desc =
        system_lifetime(t, ActivationPlan({1, 0}), wear, conv).lifetime;
    if (asc + 1e-9 < desc) return CounterexampleWitness{t1, t2, asc, desc};
  }
  return std::nullopt;
}

std::string ranking_to_csv(const std::vector<PlanEvaluation>& ranking, bool header) {
  std::ostringstream os;
  os.precision(17);
  if (header) os << "plan,lifetime,rank\n";
  for (const auto& e : ranking)
    os << e.plan.to_string() << ',' << e.lifetime << ',' << e.rank << '\n';
  return os.str();
}

}  // namespace standby
