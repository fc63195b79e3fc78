#include "standby/realization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace standby {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ActivationPlan::ActivationPlan(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t idx : order_) {
    if (idx >= order_.size() || seen[idx])
      throw std::invalid_argument("activation plan must be a permutation of 0..n-1");
    seen[idx] = true;
  }
}

ActivationPlan ActivationPlan::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return ActivationPlan(std::move(order));
}

ActivationPlan ActivationPlan::ascending_by(const ActiveLifetimes& t) {
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&t](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  return ActivationPlan(std::move(order));
}

ActivationPlan ActivationPlan::reversed() const {
  std::vector<std::size_t> order(order_.rbegin(), order_.rend());
  return ActivationPlan(std::move(order));
}

std::string ActivationPlan::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) os << '-';
    os << order_[i] + 1;
  }
  return os.str();
}

std::string event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::StandbyFailure: return "standby_failure";
    case EventKind::Activation: return "activation";
    case EventKind::ActiveFailure: return "active_failure";
  }
  return "?";
}

std::string convention_name(Convention c) {
  return c == Convention::VirtualAge ? "virtual_age" : "duration_rescale";
}

SystemTimeline system_lifetime(const ActiveLifetimes& t, const ActivationPlan& plan,
                               const WearModel& wear, Convention conv) {
  if (t.empty() || plan.size() != t.size())
    throw std::invalid_argument("system_lifetime: plan and lifetimes must match, n >= 1");
  for (double ti : t)
    if (!(ti > 0.0) || !std::isfinite(ti))
      throw std::invalid_argument("system_lifetime: lifetimes must be finite and > 0");

  SystemTimeline tl;
  const auto& order = plan.order();
  double clock = 0.0;
  tl.events.push_back({0.0, order[0], EventKind::Activation});
  clock = t[order[0]];
  tl.events.push_back({clock, order[0], EventKind::ActiveFailure});

  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t c = order[i];
    const double standby_death = wear.inverse(t[c]);
    if (standby_death <= clock) {
      tl.events.push_back({standby_death, c, EventKind::StandbyFailure});
      continue;
    }
    tl.events.push_back({clock, c, EventKind::Activation});
    if (conv == Convention::VirtualAge || wear.kind() == WearKind::Linear ||
        std::isinf(standby_death)) {
      // The two conventions coincide for linear wear, and an infinite
      // standby-death clock (cold standby / out-of-range tabulation) means
      // no wear accrues, so the virtual-age form is the defined behavior
      // for both conventions in either case. Grouped so the degenerate
      // identities (w = 1 -> max, w = 0 -> sum) hold without rounding.
      clock = t[c] + (clock - wear.consumed(clock));
    } else {
      clock += wear.convert_duration(standby_death - clock);
    }
    tl.events.push_back({clock, c, EventKind::ActiveFailure});
  }

  std::stable_sort(tl.events.begin(), tl.events.end(),
                   [](const TimelineEvent& a, const TimelineEvent& b) { return a.time < b.time; });
  tl.lifetime = clock;
  return tl;
}

double two_component_closed_form(double t1, double t2, double w, int first) {
  if (!(t1 > 0.0 && t2 > 0.0)) throw std::domain_error("lifetimes must be > 0");
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("w must lie in [0, 1]");
  if (first == 1) return std::max(t1, (1.0 - w) * t1 + t2);
  if (first == 2) return std::max(t2, (1.0 - w) * t2 + t1);
  throw std::domain_error("first must be 1 or 2");
}

double pair_after_activation(double ti, double tj, double w, double ta) {
  if (!(ti > 0.0 && tj > 0.0)) throw std::domain_error("lifetimes must be > 0");
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("w must lie in [0, 1]");
  if (!(ta >= 0.0)) throw std::domain_error("ta must be >= 0");
  const double di = w > 0.0 ? ti / w : kInf;  // unassisted standby-death clocks
  const double dj = w > 0.0 ? tj / w : kInf;
  const bool i_dead = di < ta;
  const bool j_dead = dj < ta;
  if (i_dead && j_dead) return 0.0;
  if (i_dead) return tj - w * ta;
  if (j_dead) return ti - w * ta;
  const double ri = ti - w * ta;
  const double rj = tj - w * ta;
  return std::max(ri, (1.0 - w) * ri + rj);
}

ChainInequality chain_inequality(double t1, double t2, const WearModel& wear) {
  if (!(t1 > 0.0 && t1 <= t2))
    throw std::domain_error("chain_inequality: requires 0 < t1 <= t2");
  const double inv_t1 = wear.inverse(t1);
  if (std::isinf(inv_t1))
    throw std::domain_error("chain_inequality: wear model is not invertible at t1");
  if (!(inv_t1 > t2))
    throw std::domain_error("chain_inequality: requires inverse(t1) > t2");
  ChainInequality r;
  r.lhs = t2 + wear.consumed(inv_t1 - t2);
  r.mid = t2 + t1 - wear.consumed(t2);
  r.rhs = t1 + t2 - wear.consumed(t1);
  return r;
}

std::string timeline_to_csv(const SystemTimeline& tl, bool header) {
  std::ostringstream os;
  os.precision(17);
  if (header) os << "clock_time,component,event_kind\n";
  for (const auto& e : tl.events)
    os << e.time << ',' << e.component + 1 << ',' << event_kind_name(e.kind) << '\n';
  return os.str();
}

std::string timeline_to_json(const SystemTimeline& tl) {
  nlohmann::ordered_json j;
  j["lifetime"] = tl.lifetime;
  j["events"] = nlohmann::ordered_json::array();
  for (const auto& e : tl.events) {
    nlohmann::ordered_json ev;
    ev["clock_time"] = e.time;
    ev["component"] = e.component + 1;
    ev["event_kind"] = event_kind_name(e.kind);
    j["events"].push_back(std::move(ev));
  }
  return j.dump(2);
}

}  // namespace standby
