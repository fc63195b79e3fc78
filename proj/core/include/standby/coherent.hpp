#ifndef STANDBY_COHERENT_HPP
#define STANDBY_COHERENT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "standby/distributions.hpp"
#include "standby/orders.hpp"
#include "standby/realization.hpp"

namespace standby {

/// Coherent system given by its minimal path sets (0-based component
/// indices). Construction validates that every index is in range, every
/// component appears in at least one path set, and no path set contains
/// another.
class PathSetSystem {
 public:
  PathSetSystem(std::size_t n, std::vector<std::vector<std::size_t>> path_sets);

  static PathSetSystem series(std::size_t n);
  static PathSetSystem parallel(std::size_t n);
  static PathSetSystem k_out_of_n(std::size_t k, std::size_t n);
  static PathSetSystem bridge();  // the classic 5-component bridge

  std::size_t component_count() const noexcept { return n_; }
  const std::vector<std::vector<std::size_t>>& path_sets() const noexcept { return paths_; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> paths_;
};

/// max over path sets of the min component lifetime within the set.
/// Dimension mismatch throws std::domain_error.
double coherent_lifetime(const PathSetSystem& sys, const ActiveLifetimes& t);

/// 1 iff the system is still up at time y (strict survival).
int state_at(const PathSetSystem& sys, const ActiveLifetimes& t, double y);

/// Estimates P(tau* >= tau) when component idx's law is replaced by
/// dist_tstar: each replication samples all other components once (shared
/// between the two systems) and T, T* independently. n < 100 or idx out of
/// range throws std::domain_error.
SpEstimate sp_replacement_check(const PathSetSystem& sys,
                                const std::vector<DistributionSpec>& dists,
                                std::size_t idx, const DistributionSpec& dist_t,
                                const DistributionSpec& dist_tstar,
                                std::uint64_t n, std::uint64_t seed, unsigned threads = 1);

}  // namespace standby

#endif
