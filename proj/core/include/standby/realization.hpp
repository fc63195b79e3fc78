#ifndef STANDBY_REALIZATION_HPP
#define STANDBY_REALIZATION_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "standby/wear.hpp"

namespace standby {

/// Realized active-mode lifetimes t_i (equivalently, each component's
/// initial resource measured in active time). All entries finite, > 0.
using ActiveLifetimes = std::vector<double>;

/// Permutation of component indices (0-based) giving the activation order.
class ActivationPlan {
 public:
  explicit ActivationPlan(std::vector<std::size_t> order);

  static ActivationPlan identity(std::size_t n);
  /// Plan activating components in ascending order of realized lifetime;
  /// ties broken by index.
  static ActivationPlan ascending_by(const ActiveLifetimes& t);

  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t i) const { return order_[i]; }

  ActivationPlan reversed() const;
  /// Dash-joined 1-based indices, e.g. "2-3-1".
  std::string to_string() const;

  bool operator==(const ActivationPlan& other) const = default;

 private:
  std::vector<std::size_t> order_;
};

/// Rule for recomputing a standby component's remaining active life at
/// activation. The two coincide exactly for Linear wear.
enum class Convention {
  VirtualAge,       // remaining = t_i - W(activation clock time)
  DurationRescale,  // remaining = W(standby-death clock - activation clock)
};

enum class EventKind { StandbyFailure, Activation, ActiveFailure };

std::string event_kind_name(EventKind k);
std::string convention_name(Convention c);

struct TimelineEvent {
  double time;            // clock time
  std::size_t component;  // 0-based index
  EventKind kind;
};

/// Full event log of one realization. Events sorted by clock time; each
/// component has at most one Activation and exactly one failure event;
/// lifetime equals the clock time of the final ActiveFailure.
struct SystemTimeline {
  std::vector<TimelineEvent> events;
  double lifetime = 0.0;
};

/// Sequential 1-out-of-n evaluation: the first planned component activates
/// at clock 0; on each active failure the next planned component that has
/// not already died in standby is activated with remaining life computed
/// per the convention. A component whose unassisted standby-failure time
/// d_i satisfies d_i <= current clock is treated as already failed.
SystemTimeline system_lifetime(const ActiveLifetimes& t, const ActivationPlan& plan,
                               const WearModel& wear, Convention conv);

/// Two-component closed form under Linear(w), first in {1, 2} (1-based):
/// first = 1 -> max(t1, (1-w)*t1 + t2), first = 2 -> max(t2, (1-w)*t2 + t1).
/// The max subsumes the standby-death case.
double two_component_closed_form(double t1, double t2, double w, int first);

/// Post-activation lifetime of the pair (i, j) activated at clock ta with i
/// first, under Linear(w); accounts for standby death of either component
/// before ta.
double pair_after_activation(double ti, double tj, double w, double ta);

struct ChainInequality {
  double lhs;  // t2 + W(W^-1(t1) - t2)
  double mid;  // t2 + t1 - W(t2)
  double rhs;  // t1 + t2 - W(t1)
};

/// Requires 0 < t1 <= t2, invertible wear, and inverse(t1) > t2 (the active
/// component dies before the standby one would); throws std::domain_error
/// naming the violated condition otherwise. Concave W with W(0) = 0 is
/// subadditive, so mid <= lhs and mid <= rhs, with lhs = mid exactly for
/// linear W; convex W reverses the first relation to lhs <= mid.
ChainInequality chain_inequality(double t1, double t2, const WearModel& wear);

/// Timeline serialization: CSV rows "clock_time,component,event_kind"
/// (1-based component), and a JSON event-list string with stable key order.
std::string timeline_to_csv(const SystemTimeline& tl, bool header = true);
std::string timeline_to_json(const SystemTimeline& tl);

}  // namespace standby

#endif
