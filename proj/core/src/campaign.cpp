#include "standby/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "standby/coherent.hpp"
#include "standby/parallel.hpp"
#include "standby/rng.hpp"

namespace standby {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&key](const char* a) { return key == a; }) == allowed.end())
      throw ConfigError(context + ": unknown key '" + key + "'");
  }
}

double get_number(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key)) throw ConfigError(context + ": missing key '" + key + "'");
  if (!obj[key].is_number()) throw ConfigError(context + ": '" + key + "' must be a number");
  return obj[key].get<double>();
}

DistributionSpec parse_component(const json& j, std::size_t idx) {
  std::ostringstream ctx;
  ctx << "components[" << idx << "]";
  const std::string context = ctx.str();
  if (!j.is_object()) throw ConfigError(context + ": must be an object");
  check_keys(j, {"family", "params"}, context);
  if (!j.contains("family") || !j["family"].is_string())
    throw ConfigError(context + ": missing string key 'family'");
  if (!j.contains("params") || !j["params"].is_object())
    throw ConfigError(context + ": missing object key 'params'");
  const std::string family = j["family"].get<std::string>();
  const json& p = j["params"];
  const std::string pctx = context + ".params";
  try {
    if (family == "exponential") {
      check_keys(p, {"rate"}, pctx);
      return DistributionSpec::exponential(get_number(p, "rate", pctx));
    }
    if (family == "weibull") {
      check_keys(p, {"shape", "scale"}, pctx);
      return DistributionSpec::weibull(get_number(p, "shape", pctx),
                                       get_number(p, "scale", pctx));
    }
    if (family == "gamma") {
      check_keys(p, {"shape", "scale"}, pctx);
      return DistributionSpec::gamma(get_number(p, "shape", pctx),
                                     get_number(p, "scale", pctx));
    }
    if (family == "lognormal") {
      check_keys(p, {"mu", "sigma"}, pctx);
      return DistributionSpec::lognormal(get_number(p, "mu", pctx),
                                         get_number(p, "sigma", pctx));
    }
    if (family == "uniform") {
      check_keys(p, {"a", "b"}, pctx);
      return DistributionSpec::uniform(get_number(p, "a", pctx), get_number(p, "b", pctx));
    }
    if (family == "deterministic") {
      check_keys(p, {"value"}, pctx);
      return DistributionSpec::deterministic(get_number(p, "value", pctx));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(context + ": " + e.what());
  }
  throw ConfigError(context + ": unknown family '" + family + "'");
}

std::vector<std::pair<double, double>> read_knot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("wear.csv: cannot open '" + path + "'");
  std::vector<std::pair<double, double>> knots;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b)) {
      throw ConfigError("wear.csv: malformed line '" + line + "'");
    }
    try {
      knots.emplace_back(std::stod(a), std::stod(b));
    } catch (const std::exception&) {
      if (first) {  // tolerate a header row
        first = false;
        continue;
      }
      throw ConfigError("wear.csv: non-numeric line '" + line + "'");
    }
    first = false;
  }
  return knots;
}

WearModel parse_wear(const json& j) {
  const std::string context = "wear";
  if (!j.is_object()) throw ConfigError("wear: must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("wear: missing string key 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "linear") {
      check_keys(j, {"kind", "w"}, context);
      return WearModel::linear(get_number(j, "w", context));
    }
    if (kind == "power") {
      check_keys(j, {"kind", "c", "p"}, context);
      return WearModel::power(get_number(j, "c", context), get_number(j, "p", context));
    }
    if (kind == "log") {
      check_keys(j, {"kind", "a"}, context);
      return WearModel::log(get_number(j, "a", context));
    }
    if (kind == "tabulated") {
      check_keys(j, {"kind", "csv", "knots"}, context);
      if (j.contains("csv") == j.contains("knots"))
        throw ConfigError("wear: tabulated needs exactly one of 'csv' or 'knots'");
      std::vector<std::pair<double, double>> knots;
      if (j.contains("csv")) {
        if (!j["csv"].is_string()) throw ConfigError("wear: 'csv' must be a path string");
        knots = read_knot_csv(j["csv"].get<std::string>());
      } else {
        for (const auto& k : j["knots"]) {
          if (!k.is_array() || k.size() != 2)
            throw ConfigError("wear: each knot must be a [t, W] pair");
          knots.emplace_back(k[0].get<double>(), k[1].get<double>());
        }
      }
      return WearModel::tabulated(std::move(knots));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("wear: ") + e.what());
  }
  throw ConfigError("wear: unknown kind '" + kind + "'");
}

ActivationPlan parse_plan(const json& j, std::size_t n, std::size_t which) {
  std::ostringstream ctx;
  ctx << "plans[" << which << "]";
  if (!j.is_array()) throw ConfigError(ctx.str() + ": must be an array of 1-based indices");
  std::vector<std::size_t> order;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
      throw ConfigError(ctx.str() + ": indices are 1-based positive integers");
    order.push_back(v.get<std::size_t>() - 1);
  }
  if (order.size() != n)
    throw ConfigError(ctx.str() + ": plan length must equal component count");
  try {
    return ActivationPlan(std::move(order));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(ctx.str() + ": " + e.what());
  }
}

std::string timestamp_line() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
  return std::string("# generated_at: ") + buf + "\n";
}

std::filesystem::path resolve_out_dir(const Campaign& c, const RunOptions& opt) {
  std::filesystem::path dir = opt.output_dir.empty() ? c.output_dir : opt.output_dir;
  if (dir.empty()) dir = ".";
  std::filesystem::create_directories(dir);
  return dir;
}

void write_csv(const std::filesystem::path& dir, const std::string& name,
               const std::string& body, const RunOptions& opt) {
  std::ofstream out(dir / name, std::ios::binary);
  if (opt.timestamp) out << timestamp_line();
  out << body;
}

void write_json(const std::filesystem::path& dir, const std::string& name, ojson j,
                const RunOptions& opt) {
  if (opt.timestamp) {
    ojson wrapped;
    wrapped["generated_at"] = timestamp_line().substr(16, 20);
    for (auto& [k, v] : j.items()) wrapped[k] = std::move(v);
    j = std::move(wrapped);
  }
  std::ofstream out(dir / name, std::ios::binary);
  out << j.dump(2) << '\n';
}

ActiveLifetimes sample_components(const std::vector<DistributionSpec>& dists,
                                  std::uint64_t seed, std::uint64_t replication) {
  RngStream rng(seed, replication);
  ActiveLifetimes t(dists.size());
  for (std::size_t i = 0; i < dists.size(); ++i) t[i] = dists[i].sample(rng);
  return t;
}

void require_components(const Campaign& c, std::size_t minimum) {
  if (c.components.size() < minimum) {
    std::ostringstream os;
    os << "components: this subcommand needs at least " << minimum << " component(s)";
    throw ConfigError(os.str());
  }
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Campaign campaign_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  check_keys(j,
             {"components", "wear", "convention", "plans", "replications", "seed",
              "output_dir", "method", "range", "samples"},
             "config");

  Campaign c;
  if (j.contains("components")) {
    if (!j["components"].is_array()) throw ConfigError("components: must be an array");
    std::size_t idx = 0;
    for (const auto& comp : j["components"]) c.components.push_back(parse_component(comp, idx++));
  }
  if (!j.contains("wear")) throw ConfigError("config: missing key 'wear'");
  c.wear = parse_wear(j["wear"]);

  if (j.contains("convention")) {
    const std::string conv = j["convention"].is_string() ? j["convention"].get<std::string>() : "";
    if (conv == "virtual_age")
      c.convention = Convention::VirtualAge;
    else if (conv == "duration_rescale")
      c.convention = Convention::DurationRescale;
    else
      throw ConfigError("convention: must be 'virtual_age' or 'duration_rescale'");
  }

  if (j.contains("plans")) {
    const json& plans = j["plans"];
    if (plans.is_string()) {
      const std::string mode = plans.get<std::string>();
      if (mode == "all")
        c.plan_mode = PlanMode::All;
      else if (mode == "ascending")
        c.plan_mode = PlanMode::Ascending;
      else
        throw ConfigError("plans: string form must be 'all' or 'ascending'");
    } else if (plans.is_array()) {
      c.plan_mode = PlanMode::Explicit;
      std::size_t which = 0;
      for (const auto& p : plans)
        c.plans.push_back(parse_plan(p, c.components.size(), which++));
      if (c.plans.empty()) throw ConfigError("plans: explicit plan list must be non-empty");
    } else {
      throw ConfigError("plans: must be 'all', 'ascending', or an array of plans");
    }
  }

  if (j.contains("replications")) {
    if (!j["replications"].is_number_unsigned() || j["replications"].get<std::uint64_t>() == 0)
      throw ConfigError("replications: must be a positive integer");
    c.replications = j["replications"].get<std::uint64_t>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed: must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) throw ConfigError("output_dir: must be a string");
    c.output_dir = j["output_dir"].get<std::string>();
  }
  if (j.contains("method")) {
    const std::string m = j["method"].is_string() ? j["method"].get<std::string>() : "";
    if (m != "brute_force" && m != "sp_sort")
      throw ConfigError("method: must be 'brute_force' or 'sp_sort'");
    c.method = m;
  }
  if (j.contains("range")) {
    if (!j["range"].is_array() || j["range"].size() != 2)
      throw ConfigError("range: must be a [lo, hi] pair");
    c.range_lo = j["range"][0].get<double>();
    c.range_hi = j["range"][1].get<double>();
    if (!(c.range_lo >= 0.0 && c.range_hi > c.range_lo))
      throw ConfigError("range: requires 0 <= lo < hi");
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_unsigned() || j["samples"].get<std::uint64_t>() == 0)
      throw ConfigError("samples: must be a positive integer");
    c.samples = j["samples"].get<std::uint64_t>();
  }
  return c;
}

Campaign load_campaign_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return campaign_from_json_text(buf.str());
}

int run_simulate(const Campaign& c, const RunOptions& opt) {
  require_components(c, 1);
  if (c.plan_mode == PlanMode::All)
    throw ConfigError("plans: 'all' is not meaningful for simulate; use optimize");
  const auto dir = resolve_out_dir(c, opt);

  const std::uint64_t reps = c.replications;
  std::vector<double> lifetimes(reps);
  const std::uint64_t kept_timelines = std::min<std::uint64_t>(reps, 10);
  std::vector<SystemTimeline> kept(kept_timelines);

  for_each_index(reps, opt.threads, [&](std::uint64_t k) {
    const ActiveLifetimes t = sample_components(c.components, c.seed, k);
    const ActivationPlan plan = c.plan_mode == PlanMode::Ascending
                                    ? ActivationPlan::ascending_by(t)
                                    : c.plans.front();
    SystemTimeline tl = system_lifetime(t, plan, c.wear, c.convention);
    lifetimes[k] = tl.lifetime;
    if (k < kept_timelines) kept[k] = std::move(tl);
  });

  for (std::uint64_t k = 0; k < kept_timelines; ++k) {
    std::ostringstream name;
    name << "timeline_" << k + 1;
    write_csv(dir, name.str() + ".csv", timeline_to_csv(kept[k]), opt);
    std::ofstream out(dir / (name.str() + ".json"), std::ios::binary);
    out << timeline_to_json(kept[k]) << '\n';
  }

  // 64 equal-width bins over the observed range.
  const double lo = *std::min_element(lifetimes.begin(), lifetimes.end());
  const double hi = *std::max_element(lifetimes.begin(), lifetimes.end());
  constexpr int kBins = 64;
  const double width = hi > lo ? (hi - lo) / kBins : 1.0;
  std::vector<std::uint64_t> counts(kBins, 0);
  for (double y : lifetimes) {
    int b = static_cast<int>((y - lo) / width);
    if (b >= kBins) b = kBins - 1;
    ++counts[b];
  }
  std::ostringstream hist;
  hist.precision(17);
  hist << "bin_left,bin_right,count\n";
  for (int b = 0; b < kBins; ++b)
    hist << lo + b * width << ',' << lo + (b + 1) * width << ',' << counts[b] << '\n';
  write_csv(dir, "histogram.csv", hist.str(), opt);

  const double mean = std::accumulate(lifetimes.begin(), lifetimes.end(), 0.0) /
                      static_cast<double>(reps);
  ojson summary;
  summary["replications"] = reps;
  summary["seed"] = c.seed;
  summary["convention"] = convention_name(c.convention);
  summary["mean_lifetime"] = mean;
  summary["min_lifetime"] = lo;
  summary["max_lifetime"] = hi;
  write_json(dir, "summary.json", std::move(summary), opt);
  return 0;
}

int run_compare(const Campaign& c, const RunOptions& opt) {
  require_components(c, 2);
  if (c.plan_mode != PlanMode::Explicit || c.plans.size() != 2)
    throw ConfigError("plans: compare needs exactly two explicit plans");
  const auto dir = resolve_out_dir(c, opt);
  const SpEstimate est =
      coupled_system_sp(c.components, c.plans[0], c.plans[1], c.wear, c.convention,
                        c.replications, c.seed, opt.threads);
  ojson j;
  j["plan_a"] = c.plans[0].to_string();
  j["plan_b"] = c.plans[1].to_string();
  j["p_hat"] = est.p_hat;
  j["ci_low"] = est.ci_low;
  j["ci_high"] = est.ci_high;
  j["n"] = est.n;
  j["seed"] = est.seed;
  write_json(dir, "compare.json", std::move(j), opt);
  return 0;
}

int run_optimize(const Campaign& c, const RunOptions& opt) {
  require_components(c, 1);
  const auto dir = resolve_out_dir(c, opt);
  const std::size_t n = c.components.size();

  if (c.method == "sp_sort") {
    if (n < 2) throw ConfigError("components: sp_sort needs at least two components");
    const std::uint64_t samples = std::max<std::uint64_t>(c.replications, 100);
    const SpSortReport report = sp_sort_plan(c.components, samples, c.seed, opt.threads);
    ojson j;
    j["plan"] = report.plan.to_string();
    j["converged"] = report.converged;
    j["transitive"] = report.transitive;
    j["passes"] = report.passes;
    j["swaps"] = report.swaps;
    j["violations"] = report.violations;
    write_json(dir, "spsort.json", std::move(j), opt);
    return 0;
  }

  if (n > 10) throw ConfigError("components: brute force refuses n > 10");
  const std::uint64_t nplans = factorial(n);
  const std::uint64_t reps = c.replications;

  // All plans evaluated on common random numbers: per replication one
  // lifetime vector serves every permutation.
  std::vector<std::vector<std::size_t>> plans;
  {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      plans.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<double> sum_life(nplans, 0.0);
  std::vector<std::uint64_t> wins(nplans, 0);
  std::vector<double> life(nplans);
  for (std::uint64_t k = 0; k < reps; ++k) {
    const ActiveLifetimes t = sample_components(c.components, c.seed, k);
    double best = 0.0;
    for (std::uint64_t p = 0; p < nplans; ++p) {
      life[p] = system_lifetime(t, ActivationPlan(plans[p]), c.wear, c.convention).lifetime;
      sum_life[p] += life[p];
      best = std::max(best, life[p]);
    }
    for (std::uint64_t p = 0; p < nplans; ++p)
      if (life[p] >= best) ++wins[p];
  }

  std::vector<PlanEvaluation> ranking;
  ranking.reserve(nplans);
  for (std::uint64_t p = 0; p < nplans; ++p)
    ranking.push_back({ActivationPlan(plans[p]), sum_life[p] / static_cast<double>(reps), 0});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const PlanEvaluation& a, const PlanEvaluation& b) {
                     return a.lifetime > b.lifetime;
                   });
  for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i].rank = i + 1;
  write_csv(dir, "ranking.csv", ranking_to_csv(ranking), opt);

  std::ostringstream wincsv;
  wincsv.precision(17);
  wincsv << "plan,win_fraction\n";
  for (std::uint64_t p = 0; p < nplans; ++p)
    wincsv << ActivationPlan(plans[p]).to_string() << ','
           << static_cast<double>(wins[p]) / static_cast<double>(reps) << '\n';
  write_csv(dir, "sp_wins.csv", wincsv.str(), opt);
  return 0;
}

namespace {

struct VerifyCheck {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  ojson details;
};

VerifyCheck theorem1_realization_check(std::uint64_t seed) {
  VerifyCheck check{"theorem1_realization", "pass", {}};
  std::uint64_t violations = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(derive_seed(seed, 101), k);
    double t1 = rng.next_uniform() * 10.0;
    double t2 = rng.next_uniform() * 10.0;
    if (t1 > t2) std::swap(t1, t2);
    if (t1 == t2 || t1 == 0.0) continue;
    const double w = rng.next_uniform();
    const WearModel wear = WearModel::linear(w);
    const ActiveLifetimes t{t1, t2};
    const double asc = system_lifetime(t, ActivationPlan({0, 1}), wear,
                                       Convention::VirtualAge).lifetime;
    const double desc = system_lifetime(t, ActivationPlan({1, 0}), wear,
                                        Convention::VirtualAge).lifetime;
    const double scale = std::max(asc, 1.0);
    if (asc < desc - 1e-12 * scale) ++violations;
    if (w > 0.0 && t2 < t1 / w) {
      // Interior branch: the gap is exactly w * (t2 - t1).
      const double gap = asc - desc;
      if (std::fabs(gap - w * (t2 - t1)) > 1e-12 * scale) ++violations;
    }
  }
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

VerifyCheck closed_form_check(std::uint64_t seed) {
  VerifyCheck check{"closed_form_equivalence", "pass", {}};
  std::uint64_t violations = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(derive_seed(seed, 102), k);
    const double t1 = rng.next_uniform() * 10.0 + 1e-9;
    const double t2 = rng.next_uniform() * 10.0 + 1e-9;
    const double w = rng.next_uniform();
    const WearModel wear = WearModel::linear(w);
    const ActiveLifetimes t{t1, t2};
    const double e1 = system_lifetime(t, ActivationPlan({0, 1}), wear,
                                      Convention::VirtualAge).lifetime;
    const double e2 = system_lifetime(t, ActivationPlan({1, 0}), wear,
                                      Convention::VirtualAge).lifetime;
    const double c1 = two_component_closed_form(t1, t2, w, 1);
    const double c2 = two_component_closed_form(t1, t2, w, 2);
    if (std::fabs(e1 - c1) > 1e-12 * std::max(c1, 1.0)) ++violations;
    if (std::fabs(e2 - c2) > 1e-12 * std::max(c2, 1.0)) ++violations;
  }
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

VerifyCheck theorem2_check(const Campaign& c) {
  if (c.wear.kind() != WearKind::Linear)
    return {"theorem2_ascending_optimal", "skipped",
            ojson{{"reason", "non-linear wear model"}}};
  VerifyCheck check{"theorem2_ascending_optimal", "pass", {}};
  const double w = c.wear.linear_factor();
  std::uint64_t violations = 0;
  std::uint64_t instances = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint64_t k = 0; k < 50; ++k) {
      RngStream rng(derive_seed(c.seed, 103 + n), k);
      ActiveLifetimes t(n);
      for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
      ++instances;
      if (!verify_ascending_optimal(t, w)) ++violations;
    }
  }
  check.details["instances"] = instances;
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

VerifyCheck coupled_sp_check(const Campaign& c, const RunOptions& opt) {
  if (c.components.size() < 2)
    return {"theorem1_distributional", "skipped",
            ojson{{"reason", "needs at least two components"}}};
  const std::uint64_t n = std::max<std::uint64_t>(c.replications, 100);
  const ActivationPlan asc = ActivationPlan::identity(c.components.size());
  const SpEstimate est = coupled_system_sp(c.components, asc, asc.reversed(), c.wear,
                                           c.convention, n, c.seed, opt.threads);
  VerifyCheck check{"theorem1_distributional", "pass", {}};
  check.details["p_hat"] = est.p_hat;
  check.details["ci_low"] = est.ci_low;
  check.details["ci_high"] = est.ci_high;
  check.details["n"] = est.n;
  // Components are listed weakest-first, so the identity plan should win.
  if (est.p_hat < 0.5 - est.ci_halfwidth()) check.status = "fail";
  return check;
}

VerifyCheck lemma_monotonicity_check(std::uint64_t seed) {
  VerifyCheck check{"lemma_realization_monotonicity", "pass", {}};
  const std::vector<PathSetSystem> structures{
      PathSetSystem::series(3), PathSetSystem::parallel(3),
      PathSetSystem::k_out_of_n(2, 3), PathSetSystem::bridge()};
  std::uint64_t violations = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    RngStream rng(derive_seed(seed, 104), k);
    const auto& sys = structures[k % structures.size()];
    ActiveLifetimes t(sys.component_count());
    for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
    const std::size_t idx = rng.next_bits() % sys.component_count();
    ActiveLifetimes improved = t;
    improved[idx] += rng.next_uniform() * 5.0;
    if (coherent_lifetime(sys, improved) < coherent_lifetime(sys, t)) ++violations;
  }
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

VerifyCheck lemma_sp_replacement_check(const Campaign& c, const RunOptions& opt) {
  if (c.components.size() < 2)
    return {"lemma_sp_replacement", "skipped",
            ojson{{"reason", "needs at least two components"}}};
  const std::uint64_t n = std::max<std::uint64_t>(c.replications, 100);
  // Two-component series, all components the weakest law; replace the
  // second with the next-listed (stronger) law.
  const std::vector<DistributionSpec> dists{c.components[0], c.components[0]};
  const SpEstimate est =
      sp_replacement_check(PathSetSystem::series(2), dists, 1, c.components[0],
                           c.components[1], n, c.seed, opt.threads);
  VerifyCheck check{"lemma_sp_replacement", "pass", {}};
  check.details["p_hat"] = est.p_hat;
  check.details["n"] = est.n;
  if (est.p_hat < 0.5 - est.ci_halfwidth()) check.status = "fail";
  return check;
}

VerifyCheck chain_inequality_check(const Campaign& c) {
  const auto grid = make_grid(1e-3, 10.0, 64);
  if (c.wear.is_cold() || !c.wear.check_concave(grid))
    return {"chain_inequality", "skipped",
            ojson{{"reason", "wear model not invertible-concave on the test grid"}}};
  VerifyCheck check{"chain_inequality", "pass", {}};
  std::uint64_t violations = 0;
  std::uint64_t instances = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RngStream rng(derive_seed(c.seed, 105), k);
    const double t1 = rng.next_uniform() * 2.0 + 1e-6;
    const double d1 = c.wear.inverse(t1);
    if (!(d1 > t1)) continue;
    const double t2 = t1 + rng.next_uniform() * (d1 - t1) * 0.999;
    if (!(t2 >= t1 && d1 > t2)) continue;
    ++instances;
    // Subadditivity of concave W makes the virtual-age middle term the
    // smallest of the triple (lhs = mid exactly for linear wear).
    const ChainInequality r = chain_inequality(t1, t2, c.wear);
    if (r.mid > r.lhs + 1e-10 || r.mid > r.rhs + 1e-10) ++violations;
  }
  check.details["instances"] = instances;
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

VerifyCheck degenerate_wear_check(std::uint64_t seed) {
  VerifyCheck check{"degenerate_wear_identities", "pass", {}};
  std::uint64_t violations = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    RngStream rng(derive_seed(seed, 106), k);
    const std::size_t n = 2 + rng.next_bits() % 4;
    ActiveLifetimes t(n);
    for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.next_bits() % i]);
    const ActivationPlan plan(perm);
    const double hot =
        system_lifetime(t, plan, WearModel::linear(1.0), Convention::VirtualAge).lifetime;
    const double cold =
        system_lifetime(t, plan, WearModel::linear(0.0), Convention::VirtualAge).lifetime;
    if (hot != *std::max_element(t.begin(), t.end())) ++violations;
    if (std::fabs(cold - std::accumulate(t.begin(), t.end(), 0.0)) > 1e-12 * n) ++violations;
  }
  check.details["violations"] = violations;
  if (violations) check.status = "fail";
  return check;
}

}  // namespace

int run_verify(const Campaign& c, const RunOptions& opt) {
  const auto dir = resolve_out_dir(c, opt);
  std::vector<VerifyCheck> checks;
  checks.push_back(theorem1_realization_check(c.seed));
  checks.push_back(closed_form_check(c.seed));
  checks.push_back(theorem2_check(c));
  checks.push_back(coupled_sp_check(c, opt));
  checks.push_back(lemma_monotonicity_check(c.seed));
  checks.push_back(lemma_sp_replacement_check(c, opt));
  checks.push_back(chain_inequality_check(c));
  checks.push_back(degenerate_wear_check(c.seed));

  bool failed = false;
  ojson report;
  report["checks"] = ojson::array();
  for (auto& check : checks) {
    if (check.status == "fail") failed = true;
    ojson entry;
    entry["name"] = check.name;
    entry["status"] = check.status;
    entry["details"] = std::move(check.details);
    report["checks"].push_back(std::move(entry));
  }
  report["overall"] = failed ? "fail" : "pass";
  write_json(dir, "verify_report.json", std::move(report), opt);
  return failed ? 1 : 0;
}

int run_counterexample(const Campaign& c, const RunOptions& opt) {
  const auto dir = resolve_out_dir(c, opt);
  const auto witness = counterexample_search(c.wear, c.convention, c.range_lo,
                                             c.range_hi, c.samples, c.seed);
  ojson j;
  j["wear"] = c.wear.describe();
  j["convention"] = convention_name(c.convention);
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  if (witness) {
    j["found"] = true;
    j["t1"] = witness->t1;
    j["t2"] = witness->t2;
    j["ascending_lifetime"] = witness->ascending_lifetime;
    j["descending_lifetime"] = witness->descending_lifetime;
  } else {
    j["found"] = false;
  }
  write_json(dir, "counterexample.json", std::move(j), opt);
  return 0;
}

}  // namespace standby
