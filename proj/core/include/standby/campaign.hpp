#ifndef STANDBY_CAMPAIGN_HPP
#define STANDBY_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "standby/distributions.hpp"
#include "standby/optimizer.hpp"
#include "standby/orders.hpp"
#include "standby/realization.hpp"
#include "standby/wear.hpp"

namespace standby {

/// Malformed or inconsistent configuration; the message names the offending
/// field. Maps to exit code 2 at the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PlanMode { Explicit, All, Ascending };

/// One experiment description, parsed from a strict JSON config (unknown
/// keys rejected).
struct Campaign {
  std::vector<DistributionSpec> components;
  WearModel wear = WearModel::linear(1.0);
  Convention convention = Convention::VirtualAge;
  PlanMode plan_mode = PlanMode::Ascending;
  std::vector<ActivationPlan> plans;  // when plan_mode == Explicit
  std::uint64_t replications = 1;
  std::uint64_t seed = 0;
  std::string output_dir = ".";
  std::string method = "brute_force";  // optimize: "brute_force" | "sp_sort"
  double range_lo = 0.0;               // counterexample sample range (lo, hi]
  double range_hi = 4.0;
  std::uint64_t samples = 10000;       // counterexample sample count
};

Campaign campaign_from_json_text(const std::string& text);
Campaign load_campaign_file(const std::string& path);

struct RunOptions {
  unsigned threads = 1;
  bool timestamp = true;
  std::string output_dir;  // overrides campaign.output_dir when non-empty
};

/// Subcommand drivers; each writes its artifact files under the output
/// directory and returns the process exit code (0 success, 1 verification
/// failure). Config errors throw ConfigError (exit 2 at the CLI).
int run_simulate(const Campaign& c, const RunOptions& opt);
int run_compare(const Campaign& c, const RunOptions& opt);
int run_optimize(const Campaign& c, const RunOptions& opt);
int run_verify(const Campaign& c, const RunOptions& opt);
int run_counterexample(const Campaign& c, const RunOptions& opt);

}  // namespace standby

#endif
