#include "standby/coherent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "standby/parallel.hpp"

namespace standby {

PathSetSystem::PathSetSystem(std::size_t n, std::vector<std::vector<std::size_t>> path_sets)
    : n_(n), paths_(std::move(path_sets)) {
  if (n_ == 0 || paths_.empty())
    throw std::invalid_argument("path-set system: needs n >= 1 and at least one path set");
  std::vector<bool> covered(n_, false);
  for (auto& p : paths_) {
    if (p.empty()) throw std::invalid_argument("path-set system: empty path set");
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    for (std::size_t idx : p) {
      if (idx >= n_) throw std::invalid_argument("path-set system: component index out of range");
      covered[idx] = true;
    }
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
    throw std::invalid_argument("path-set system: every component must appear in a path set");
  // Minimality: no path set may contain another.
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (std::size_t j = 0; j < paths_.size(); ++j) {
      if (i == j) continue;
      if (std::includes(paths_[i].begin(), paths_[i].end(), paths_[j].begin(), paths_[j].end()))
        throw std::invalid_argument("path-set system: path sets must be minimal (no containment)");
    }
}

PathSetSystem PathSetSystem::series(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return PathSetSystem(n, {all});
}

PathSetSystem PathSetSystem::parallel(std::size_t n) {
  std::vector<std::vector<std::size_t>> paths;
  for (std::size_t i = 0; i < n; ++i) paths.push_back({i});
  return PathSetSystem(n, std::move(paths));
}

PathSetSystem PathSetSystem::k_out_of_n(std::size_t k, std::size_t n) {
  if (k == 0 || k > n) throw std::invalid_argument("k_out_of_n: requires 1 <= k <= n");
  // Path sets are all k-subsets.
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    paths.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return PathSetSystem(n, std::move(paths));
}

PathSetSystem PathSetSystem::bridge() {
  return PathSetSystem(5, {{0, 3}, {1, 4}, {0, 2, 4}, {1, 2, 3}});
}

double coherent_lifetime(const PathSetSystem& sys, const ActiveLifetimes& t) {
  if (t.size() != sys.component_count())
    throw std::domain_error("coherent_lifetime: lifetime vector size mismatch");
  double best = 0.0;
  for (const auto& p : sys.path_sets()) {
    double path_life = std::numeric_limits<double>::infinity();
    for (std::size_t idx : p) path_life = std::min(path_life, t[idx]);
    best = std::max(best, path_life);
  }
  return best;
}

int state_at(const PathSetSystem& sys, const ActiveLifetimes& t, double y) {
  if (y < 0.0) throw std::domain_error("state_at: y must be >= 0");
  return coherent_lifetime(sys, t) > y ? 1 : 0;
}

SpEstimate sp_replacement_check(const PathSetSystem& sys,
                                const std::vector<DistributionSpec>& dists,
                                std::size_t idx, const DistributionSpec& dist_t,
                                const DistributionSpec& dist_tstar,
                                std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (idx >= sys.component_count())
    throw std::domain_error("sp_replacement_check: component index out of range");
  if (dists.size() != sys.component_count())
    throw std::domain_error("sp_replacement_check: distribution list size mismatch");
  if (n < 100) throw std::domain_error("sp_replacement_check: n must be >= 100");
  const std::uint64_t successes = count_successes(n, threads, [&](std::uint64_t k) {
    RngStream rng(seed, k);
    ActiveLifetimes t(dists.size());
    for (std::size_t i = 0; i < dists.size(); ++i)
      if (i != idx) t[i] = dists[i].sample(rng);
    const double original = dist_t.sample(rng);
    const double replacement = dist_tstar.sample(rng);
    t[idx] = original;
    const double tau = coherent_lifetime(sys, t);
    t[idx] = replacement;
    const double tau_star = coherent_lifetime(sys, t);
    return tau_star >= tau;
  });
  return make_sp_estimate(successes, n, seed);
}

}  // namespace standby
