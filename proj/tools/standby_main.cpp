#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "standby/campaign.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> replications;
  unsigned threads = 1;
  bool no_timestamp = false;
  std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON campaign config")->required();
  cmd->add_option("--seed", flags.seed, "Override the config seed");
  cmd->add_option("--replications", flags.replications, "Override the replication count");
  cmd->add_option("--threads", flags.threads, "Worker threads (never changes results)");
  cmd->add_flag("--no-timestamp", flags.no_timestamp,
                "Omit the timestamp line/key from output files");
  cmd->add_option("--out", flags.out_dir, "Output directory (overrides config)");
}

int dispatch(const CommonFlags& flags,
             int (*runner)(const standby::Campaign&, const standby::RunOptions&)) {
  try {
    standby::Campaign campaign = standby::load_campaign_file(flags.config_path);
    if (flags.seed) campaign.seed = *flags.seed;
    if (flags.replications) campaign.replications = *flags.replications;
    standby::RunOptions opt;
    opt.threads = flags.threads == 0 ? 1 : flags.threads;
    opt.timestamp = !flags.no_timestamp;
    opt.output_dir = flags.out_dir;
    return runner(campaign, opt);
  } catch (const standby::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Warm standby system simulator, verifier and activation-sequence optimizer"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*runner)(const standby::Campaign&, const standby::RunOptions&);
  };
  const Sub subs[] = {
      {"simulate", "Sample realizations; emit timelines and a lifetime histogram",
       standby::run_simulate},
      {"compare", "Coupled Monte Carlo comparison of two activation plans",
       standby::run_compare},
      {"optimize", "Rank activation plans (brute force) or sort by pairwise precedence",
       standby::run_optimize},
      {"verify", "Run the property sweeps and emit a pass/fail report",
       standby::run_verify},
      {"counterexample", "Search for a pair where weakest-first activation loses",
       standby::run_counterexample},
  };

  std::vector<std::pair<CommonFlags, const Sub*>> bound;
  bound.reserve(std::size(subs));
  for (const auto& sub : subs) bound.emplace_back(CommonFlags{}, &sub);
  for (auto& [flags, sub] : bound) {
    CLI::App* cmd = app.add_subcommand(sub->name, sub->help);
    add_common_flags(cmd, flags);
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [flags, sub] : bound) {
    if (app.get_subcommand(sub->name)->parsed()) return dispatch(flags, sub->runner);
  }
  return 2;
}
