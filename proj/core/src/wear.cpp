#include "standby/wear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace standby {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_param(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_increasing(std::span<const double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("grid must be strictly increasing");
}

}  // namespace

WearModel WearModel::linear(double w) {
  require_param(w >= 0.0 && w <= 1.0, "linear wear: w must lie in [0, 1]");
  return {WearKind::Linear, w, 0.0};
}

WearModel WearModel::power(double c, double p) {
  require_param(c > 0.0 && p > 0.0, "power wear: c and p must be > 0");
  return {WearKind::Power, c, p};
}

WearModel WearModel::log(double a) {
  require_param(a > 0.0, "log wear: a must be > 0");
  return {WearKind::Log, a, 0.0};
}

WearModel WearModel::tabulated(std::vector<std::pair<double, double>> knots) {
  require_param(!knots.empty(), "tabulated wear: needs at least one knot");
  require_param(knots.front().first == 0.0 && knots.front().second == 0.0,
                "tabulated wear: first knot must be (0, 0)");
  for (std::size_t i = 1; i < knots.size(); ++i)
    require_param(knots[i].first > knots[i - 1].first &&
                      knots[i].second > knots[i - 1].second,
                  "tabulated wear: knots must be strictly increasing in t and W");
  WearModel m{WearKind::Tabulated, 0.0, 0.0};
  m.knots_ = std::move(knots);
  return m;
}

double WearModel::linear_factor() const {
  if (kind_ != WearKind::Linear)
    throw std::domain_error("linear_factor: not a linear wear model");
  return p1_;
}

double WearModel::alpha() const {
  if (kind_ != WearKind::Linear || p1_ == 0.0)
    throw std::domain_error("alpha: defined only for linear wear with w > 0");
  return 1.0 / p1_;
}

double WearModel::consumed(double s) const {
  if (s < 0.0) throw std::domain_error("consumed: s must be >= 0");
  switch (kind_) {
    case WearKind::Linear:
      return p1_ * s;
    case WearKind::Power:
      return p1_ * std::pow(s, p2_);
    case WearKind::Log:
      return p1_ * std::log1p(s);
    case WearKind::Tabulated: {
      if (s >= knots_.back().first) return knots_.back().second;  // clamp
      auto it = std::upper_bound(knots_.begin(), knots_.end(), s,
                                 [](double v, const auto& k) { return v < k.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double f = (s - lo.first) / (hi.first - lo.first);
      return lo.second + f * (hi.second - lo.second);
    }
  }
  return 0.0;
}

double WearModel::inverse(double x) const {
  if (x < 0.0) throw std::domain_error("inverse: x must be >= 0");
  if (x == 0.0) return 0.0;
  switch (kind_) {
    case WearKind::Linear:
      return p1_ == 0.0 ? kInf : x / p1_;
    case WearKind::Power:
      return std::pow(x / p1_, 1.0 / p2_);
    case WearKind::Log:
      return std::expm1(x / p1_);
    case WearKind::Tabulated: {
      if (x > knots_.back().second) return kInf;
      auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                                 [](double v, const auto& k) { return v < k.second; });
      if (it == knots_.end()) return knots_.back().first;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double f = (x - lo.second) / (hi.second - lo.second);
      return lo.first + f * (hi.first - lo.first);
    }
  }
  return 0.0;
}

bool WearModel::check_concave(std::span<const double> grid) const {
  if (grid.size() < 3) throw std::domain_error("check_concave: grid needs >= 3 points");
  require_increasing(grid);
  double prev_slope = kInf;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double slope =
        (consumed(grid[i]) - consumed(grid[i - 1])) / (grid[i] - grid[i - 1]);
    if (slope > prev_slope + 1e-12) return false;
    prev_slope = slope;
  }
  return true;
}

bool WearModel::check_milder(std::span<const double> grid) const {
  require_increasing(grid);
  for (double t : grid)
    if (consumed(t) > t) return false;
  return true;
}

std::string WearModel::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case WearKind::Linear: os << "linear(w=" << p1_ << ")"; break;
    case WearKind::Power: os << "power(c=" << p1_ << ", p=" << p2_ << ")"; break;
    case WearKind::Log: os << "log(a=" << p1_ << ")"; break;
    case WearKind::Tabulated: os << "tabulated(" << knots_.size() << " knots)"; break;
  }
  return os.str();
}

std::vector<double> make_grid(double lo, double hi, std::size_t n) {
  if (!(lo < hi) || n < 2) throw std::domain_error("make_grid: requires lo < hi, n >= 2");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

}  // namespace standby
