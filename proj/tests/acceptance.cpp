// Acceptance suite: end-to-end checks of the engine, the closed-form
// oracles, the ordering theory, and the reproducibility contract. Prints
// one PASS/FAIL line per criterion and exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "standby/coherent.hpp"
#include "standby/optimizer.hpp"
#include "standby/orders.hpp"
#include "standby/realization.hpp"
#include "standby/rng.hpp"

using namespace standby;

namespace {

int failures = 0;

void report(int criterion, const char* description, bool pass) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, description);
  if (!pass) ++failures;
}

bool theorem1_realization() {
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(1001, k);
    double t1 = rng.next_uniform() * 10.0 + 1e-9;
    double t2 = rng.next_uniform() * 10.0 + 1e-9;
    if (t1 > t2) std::swap(t1, t2);
    const double w = rng.next_uniform();
    const WearModel wear = WearModel::linear(w);
    const ActiveLifetimes t{t1, t2};
    const double asc = system_lifetime(t, ActivationPlan({0, 1}), wear,
                                       Convention::VirtualAge).lifetime;
    const double desc = system_lifetime(t, ActivationPlan({1, 0}), wear,
                                        Convention::VirtualAge).lifetime;
    const double scale = std::max(asc, 1.0);
    if (asc < desc - 1e-12 * scale) return false;
    if (w > 0.0 && t2 < t1 / w &&
        std::fabs((asc - desc) - w * (t2 - t1)) > 1e-12 * scale)
      return false;
  }
  return true;
}

bool closed_form_equivalence() {
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(1002, k);
    const double t1 = rng.next_uniform() * 10.0 + 1e-9;
    const double t2 = rng.next_uniform() * 10.0 + 1e-9;
    const double w = rng.next_uniform();
    const WearModel wear = WearModel::linear(w);
    const ActiveLifetimes t{t1, t2};
    for (int first : {1, 2}) {
      const ActivationPlan plan =
          first == 1 ? ActivationPlan({0, 1}) : ActivationPlan({1, 0});
      const double engine = system_lifetime(t, plan, wear, Convention::VirtualAge).lifetime;
      const double oracle = two_component_closed_form(t1, t2, w, first);
      if (std::fabs(engine - oracle) > 1e-12 * std::max(oracle, 1.0)) return false;
    }
  }
  return true;
}

bool theorem2_sweep(double* seconds) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      RngStream rng(1003 + n, k);
      ActiveLifetimes t(n);
      for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
      for (double w : {0.1, 0.3, 0.5, 0.7, 0.9})
        if (!verify_ascending_optimal(t, w)) return false;
    }
  }
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return *seconds < 60.0;
}

SpEstimate coupled_reference(unsigned threads) {
  const std::vector<DistributionSpec> dists{DistributionSpec::exponential(2.0),
                                            DistributionSpec::exponential(1.0)};
  return coupled_system_sp(dists, ActivationPlan({0, 1}), ActivationPlan({1, 0}),
                           WearModel::linear(0.5), Convention::VirtualAge, 100000, 42,
                           threads);
}

bool theorem1_distributional() {
  const SpEstimate e = coupled_reference(1);
  // Under coupling the ascending plan wins exactly when t1 <= t2, i.e. when
  // the Exp(1) component outlives the Exp(2) one: P = 2/3.
  const double oracle = sp_exact_exponential(1.0, 2.0);
  return e.ci_low <= oracle && oracle <= e.ci_high && e.p_hat >= 0.5;
}

SpEstimate lemma_replacement(unsigned threads) {
  const std::vector<DistributionSpec> dists{DistributionSpec::exponential(1.0),
                                            DistributionSpec::exponential(2.0)};
  return sp_replacement_check(PathSetSystem::series(2), dists, 1,
                              DistributionSpec::exponential(2.0),
                              DistributionSpec::exponential(1.0), 100000, 42, threads);
}

bool lemma_checks() {
  const std::vector<PathSetSystem> structures{
      PathSetSystem::series(3), PathSetSystem::parallel(3),
      PathSetSystem::k_out_of_n(2, 3), PathSetSystem::bridge()};
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(1005, k);
    const auto& sys = structures[k % structures.size()];
    ActiveLifetimes t(sys.component_count());
    for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
    const std::size_t idx = rng.next_bits() % sys.component_count();
    ActiveLifetimes improved = t;
    improved[idx] += rng.next_uniform() * 5.0;
    if (coherent_lifetime(sys, improved) < coherent_lifetime(sys, t)) return false;
  }
  const SpEstimate e = lemma_replacement(1);
  return e.p_hat >= 0.5 - e.ci_halfwidth();
}

bool chain_inequality_sweep() {
  const WearModel models[] = {WearModel::linear(0.5), WearModel::log(1.0)};
  for (const auto& wear : models) {
    std::uint64_t checked = 0;
    for (std::uint64_t k = 0; checked < 1000; ++k) {
      if (k > 100000) return false;  // could not find enough Case II pairs
      RngStream rng(1006, k);
      const double t1 = rng.next_uniform() * 2.0 + 1e-6;
      const double d1 = wear.inverse(t1);
      if (!(d1 > t1)) continue;
      const double t2 = t1 + rng.next_uniform() * (d1 - t1) * 0.999;
      if (!(t2 >= t1 && d1 > t2)) continue;
      ++checked;
      // Concave W with W(0) = 0 is subadditive, so the virtual-age middle
      // term is the smallest of the triple; linear wear gives lhs = mid.
      const ChainInequality r = chain_inequality(t1, t2, wear);
      if (r.mid > r.lhs + 1e-10 || r.mid > r.rhs + 1e-10) return false;
      if (wear.kind() == WearKind::Linear && std::fabs(r.lhs - r.mid) > 1e-10)
        return false;
    }
  }
  return true;
}

bool counterexample_reproduction() {
  const WearModel square = WearModel::power(1.0, 2.0);
  for (Convention conv : {Convention::VirtualAge, Convention::DurationRescale}) {
    const ActiveLifetimes t{2.0, 3.0};
    if (system_lifetime(t, ActivationPlan({0, 1}), square, conv).lifetime != 2.0) return false;
    if (system_lifetime(t, ActivationPlan({1, 0}), square, conv).lifetime != 3.0) return false;
    if (!counterexample_search(square, conv, 0.0, 4.0, 10000, 77).has_value()) return false;
    if (counterexample_search(WearModel::linear(0.5), conv, 0.0, 4.0, 10000, 77).has_value())
      return false;
    if (counterexample_search(WearModel::log(1.0), conv, 0.0, 1.0, 10000, 77).has_value())
      return false;
  }
  return true;
}

bool degenerate_wear_identities() {
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RngStream rng(1008, k);
    const std::size_t n = 2 + rng.next_bits() % 3;  // every plan of up to 4 components
    ActiveLifetimes t(n);
    for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
    const double hot_expected = *std::max_element(t.begin(), t.end());
    const double cold_expected = std::accumulate(t.begin(), t.end(), 0.0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      const ActivationPlan plan(perm);
      for (Convention conv : {Convention::VirtualAge, Convention::DurationRescale}) {
        if (system_lifetime(t, plan, WearModel::linear(1.0), conv).lifetime != hot_expected)
          return false;
        const double cold =
            system_lifetime(t, plan, WearModel::linear(0.0), conv).lifetime;
        if (std::fabs(cold - cold_expected) > 1e-12 * cold_expected) return false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

bool reproducibility() {
  const SpEstimate c4a = coupled_reference(1);
  const SpEstimate c4b = coupled_reference(8);
  const SpEstimate c5a = lemma_replacement(1);
  const SpEstimate c5b = lemma_replacement(8);
  return c4a.successes == c4b.successes && c4a.p_hat == c4b.p_hat &&
         c5a.successes == c5b.successes && c5a.p_hat == c5b.p_hat;
}

}  // namespace

int main() {
  report(1, "weakest-first dominates realization-wise with gap w*(t2-t1)",
         theorem1_realization());
  report(2, "engine matches the two-component closed form", closed_form_equivalence());
  double sweep_seconds = 0.0;
  const bool t2 = theorem2_sweep(&sweep_seconds);
  std::printf("       (theorem 2 sweep took %.1f s)\n", sweep_seconds);
  report(3, "ascending activation is brute-force optimal for linear wear", t2);
  report(4, "coupled sp estimate brackets the exponential oracle 2/3",
         theorem1_distributional());
  report(5, "coherent-system monotonicity and sp replacement", lemma_checks());
  report(6, "chain inequality holds for concave wear", chain_inequality_sweep());
  report(7, "square-wear counterexample reproduced; none for concave-milder wear",
         counterexample_reproduction());
  report(8, "hot standby gives max(t), cold standby gives sum(t)",
         degenerate_wear_identities());
  report(9, "estimates are bit-identical across thread counts", reproducibility());
  return failures == 0 ? 0 : 1;
}
