#ifndef STANDBY_WEAR_HPP
#define STANDBY_WEAR_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace standby {

enum class WearKind { Linear, Power, Log, Tabulated };

/// Monotone scale transformation W mapping clock time spent in standby to
/// the active-equivalent time consumed. W(0) = 0 and W is strictly
/// increasing except for the cold-standby case Linear(w = 0), which is
/// identically zero. Linear covers hot standby (w = 1), warm (0 < w < 1)
/// and cold (w = 0).
class WearModel {
 public:
  static WearModel linear(double w);                  // W(s) = w * s, w in [0, 1]
  static WearModel power(double c, double p);         // W(s) = c * s^p
  static WearModel log(double a);                     // W(s) = a * ln(1 + s)
  static WearModel tabulated(std::vector<std::pair<double, double>> knots);

  WearKind kind() const noexcept { return kind_; }

  /// Deceleration factor of a Linear model; throws for other kinds.
  double linear_factor() const;

  /// 1/w for Linear with w > 0; throws for other kinds or w = 0.
  double alpha() const;

  bool is_cold() const noexcept { return kind_ == WearKind::Linear && p1_ == 0.0; }

  /// W(s): active-equivalent time consumed after clock time s in standby.
  double consumed(double s) const;

  /// Clock time at which consumed wear reaches x, or +infinity when W never
  /// reaches x (cold standby, or x beyond a Tabulated range).
  double inverse(double x) const;

  /// Active-equivalent time of a clock-time duration d. Numerically equal to
  /// consumed(d); named separately because the duration-rescale activation
  /// convention applies it to elapsed intervals rather than absolute clock
  /// times (the two conventions differ for nonlinear W).
  double convert_duration(double d) const { return consumed(d); }

  /// True iff successive divided differences of W are nonincreasing on the
  /// grid (1e-12 slack). Grid must be strictly increasing with >= 3 points,
  /// else std::domain_error.
  bool check_concave(std::span<const double> grid) const;

  /// True iff W(t) <= t at every grid point (standby regime milder than
  /// active). Grid must be strictly increasing.
  bool check_milder(std::span<const double> grid) const;

  std::string describe() const;

 private:
  WearModel(WearKind k, double p1, double p2) : kind_(k), p1_(p1), p2_(p2) {}

  WearKind kind_;
  double p1_;
  double p2_;
  std::vector<std::pair<double, double>> knots_;
};

/// Uniformly spaced strictly increasing grid over [lo, hi], n >= 2 points.
std::vector<double> make_grid(double lo, double hi, std::size_t n);

}  // namespace standby

#endif
