#include "holo/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holo/error.hpp"
#include "holo/theta.hpp"

namespace holo {

namespace {

using std::numbers::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
}

// Sum over sectors of log[(beta/pi) sinh(pi r / beta)]; the cutoff dropped.
double log_distance(const std::vector<double>& betas, double r) {
  double s = 0.0;
  for (double beta : betas) s += log_thermal_distance(r, beta);
  return s;
}

void check_on_ring(const IntervalPair& p, double length) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw Error(ErrorKind::InvalidArgument, "system length must be positive");
  if (p.u1() < 0.0 || !(p.v2() < length)) {
    std::ostringstream os;
    os << "interval endpoints must lie in [0, " << length << ")";
    throw Error(ErrorKind::DomainError, os.str());
  }
}

void check_sector(int sector) {
  if (sector != 3 && sector != 4)
    throw Error(ErrorKind::SectorUnsupported, "finite-size mutual information needs sector 3 or 4");
}

}  // namespace

IntervalPair::IntervalPair(double u1, double v1, double u2, double v2)
    : u1_(u1), v1_(v1), u2_(u2), v2_(v2) {
  require_finite(u1, "u1");
  require_finite(v1, "v1");
  require_finite(u2, "u2");
  require_finite(v2, "v2");
  if (!(u1 < v1 && v1 < u2 && u2 < v2)) {
    std::ostringstream os;
    os << "intervals must satisfy u1 < v1 < u2 < v2 (got " << u1 << ", " << v1 << ", " << u2
       << ", " << v2 << ")";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  const double la = v1 - u1;
  const double lb = v2 - u2;
  const double scale = std::max({std::abs(u1), std::abs(v2), la, lb});
  if (std::abs(la - lb) > 64.0 * kEps * scale) {
    std::ostringstream os;
    os << "intervals must have equal sizes (got " << la << " and " << lb << ")";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

IntervalPair IntervalPair::from_size(double start, double size, double separation) {
  if (!(size > 0.0)) throw Error(ErrorKind::InvalidArgument, "interval size must be positive");
  if (!(separation > 0.0)) throw Error(ErrorKind::InvalidArgument, "separation must be positive");
  const double v1 = start + size;
  const double u2 = v1 + separation;
  return {start, v1, u2, u2 + size};
}

double IntervalPair::cross_ratio() const {
  const double l = size();
  const double s = l + separation();
  return (l / s) * (l / s);
}

double IntervalPair::cross_ratio_four_point() const {
  return ((v1_ - u1_) * (v2_ - u2_)) / ((u2_ - u1_) * (v2_ - v1_));
}

double IntervalPair::log_cross_ratio_odds() const {
  // 1 - x = d (2l + d) / (l + d)^2
  const double l = size();
  const double d = separation();
  return 2.0 * std::log(l) - std::log(d) - std::log(outer_span());
}

IntervalPair IntervalPair::shifted(double offset) const {
  return {u1_ + offset, v1_ + offset, u2_ + offset, v2_ + offset};
}

double interval_entropy(const BulkGeometry& g, double a, double b) {
  return geodesic_length(g, a, b) / (4.0 * g.newton_constant);
}

MiResult mutual_information(const BulkGeometry& g, const IntervalPair& p) {
  g.validate();
  MiResult r;
  r.newton_constant = g.newton_constant;
  r.length_disconnected = geodesic_length(g, p.u1(), p.v1()) + geodesic_length(g, p.u2(), p.v2());
  r.length_connected = geodesic_length(g, p.u1(), p.v2()) + geodesic_length(g, p.v1(), p.u2());
  // The same difference with the cutoff cancelled analytically.
  const auto betas = sector_betas(g);
  const double diff = 2.0 * g.ads_radius *
                      (log_distance(betas, p.size()) + log_distance(betas, p.v2() - p.u2()) -
                       log_distance(betas, p.outer_span()) - log_distance(betas, p.separation()));
  const double unclamped = diff / (4.0 * g.newton_constant);
  if (unclamped > 0.0) {
    r.value = unclamped;
    r.phase = MiPhase::Connected;
  }
  return r;
}

double mi_pure_ads(double x, double c) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream os;
    os << "cross ratio " << x << " outside (0, 1)";
    throw Error(ErrorKind::DomainError, os.str());
  }
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "central charge must be positive");
  if (x < 0.5) return 0.0;
  return c / 3.0 * std::log(x / (1.0 - x));
}

double theta_correction(const IntervalPair& p, double temperature, double length, int sector,
                        double tol) {
  check_sector(sector);
  const auto lt = [&](double r) { return log_theta_at_separation(r, temperature, length, sector, tol); };
  return lt(p.outer_span()) + lt(p.separation()) - lt(p.size()) - lt(p.v2() - p.u2());
}

double mi_torus(const IntervalPair& p, double temperature, double length, int sector, double c,
                double tol) {
  check_on_ring(p, length);
  return c / 3.0 * (p.log_cross_ratio_odds() + theta_correction(p, temperature, length, sector, tol));
}

double mi_torus_rotating(const IntervalPair& p, double temperature_left, double length, int sector,
                         double c, double tol) {
  check_on_ring(p, length);
  return c / 3.0 *
         (2.0 * p.log_cross_ratio_odds() + theta_correction(p, temperature_left, length, sector, tol));
}

namespace {

struct TorusScan {
  TorusModel model;
  double size, length, temperature;
  int sector;
  double tol;

  double weight() const { return model == TorusModel::Rotating ? 2.0 : 1.0; }

  // Sign-carrying part of the MI as a function of t = logit(x); the
  // odds term enters as t itself so that tiny roots keep their precision.
  double objective(double t) const {
    const double x = 1.0 / (1.0 + std::exp(-t));
    const double d = size * (1.0 / std::sqrt(x) - 1.0);
    const IntervalPair p = IntervalPair::from_size(0.0, size, d);
    return weight() * t + theta_correction(p, temperature, length, sector, tol);
  }

  double objective_at_separation(double d) const {
    const IntervalPair p = IntervalPair::from_size(0.0, size, d);
    return weight() * p.log_cross_ratio_odds() + theta_correction(p, temperature, length, sector, tol);
  }
};

double logit_of_separation(double l, double d) {
  return 2.0 * std::log(l) - std::log(d) - std::log(2.0 * l + d);
}

}  // namespace

TransitionPoint transition_point(TorusModel model, double tau_abs, int sector, double c,
                                 std::optional<double> l_over_L, double tol) {
  if (!(tau_abs > 0.0) || !std::isfinite(tau_abs))
    throw Error(ErrorKind::InvalidArgument, "tau_abs must be positive");
  if (!(c > 0.0)) throw Error(ErrorKind::InvalidArgument, "central charge must be positive");
  check_sector(sector);
  const double length = 1.0;
  const double l = l_over_L.value_or(1.0 / (2.0 * pi * tau_abs));
  if (!(l > 0.0) || !(2.0 * l < length))
    throw Error(ErrorKind::InvalidArgument, "interval size must lie in (0, L/2)");

  const TorusScan scan{model, l, length, tau_abs, sector, tol};
  const double d_lo = 1e-4 * l;
  // Keep u1 = 0 and v2 = 2l + d strictly inside the ring.
  const double d_hi = std::min(100.0 * l, (length - 2.0 * l) * (1.0 - 1e-9));
  auto no_bracket = [&](const char* why) {
    std::ostringstream os;
    os << "no sign change of the mutual information for tau_abs = " << tau_abs << ", sector "
       << sector << ": " << why;
    return Error(ErrorKind::NoBracket, os.str());
  };
  if (!(d_hi > d_lo)) throw no_bracket("intervals fill the ring");

  constexpr int kGrid = 400;
  const double ratio = std::log(d_hi / d_lo);
  double prev_d = d_lo;
  if (!(scan.objective_at_separation(d_lo) > 0.0)) throw no_bracket("negative already at the smallest separation");
  double t_pos = 0.0, t_neg = 0.0;
  bool found = false;
  for (int i = 1; i <= kGrid; ++i) {
    const double d = d_lo * std::exp(ratio * i / kGrid);
    const double g = scan.objective_at_separation(d);
    if (!(g > 0.0)) {
      t_pos = logit_of_separation(l, prev_d);
      t_neg = logit_of_separation(l, d);
      found = true;
      break;
    }
    prev_d = d;
  }
  if (!found) throw no_bracket("positive across the whole scan");

  // Bisection in t; the bracket always has t_pos > t_neg.
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (t_pos + t_neg);
    if (mid == t_pos || mid == t_neg) break;
    const double g = scan.objective(mid);
    if (g == 0.0) {
      t_pos = t_neg = mid;
      break;
    }
    (g > 0.0 ? t_pos : t_neg) = mid;
    if (std::abs(t_pos - t_neg) <= 1e-12 * std::max(std::abs(t_pos), std::abs(t_neg))) break;
  }

  TransitionPoint tp;
  tp.logit = 0.5 * (t_pos + t_neg);
  tp.x0 = 1.0 / (1.0 + std::exp(-tp.logit));
  tp.deficit = -0.5 * std::tanh(0.5 * tp.logit);
  tp.size = l;
  tp.separation = l * (1.0 / std::sqrt(tp.x0) - 1.0);
  tp.length = length;
  tp.temperature = tau_abs;
  return tp;
}

double log_two_point_correlator(const BulkGeometry& g, double delta, double x_a, double x_b) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const double dx = std::abs(x_a - x_b);
  if (!(dx > 0.0)) throw Error(ErrorKind::CoincidentPoints, "correlator at coincident points");
  return -2.0 * delta * log_distance(sector_betas(g), dx);
}

double two_point_correlator(const BulkGeometry& g, double delta, double x_a, double x_b) {
  return std::exp(log_two_point_correlator(g, delta, x_a, x_b));
}

double crossover_separation(const BulkGeometry& g) {
  if (g.kind == GeometryKind::PureAdS)
    throw Error(ErrorKind::NoHorizon, "pure AdS has no horizon scale");
  return thermal_scales(g).z_plus;
}

WolfBound wolf_bound_report(double mi_value, double connected_correlator, double op_a_norm,
                            double op_b_norm) {
  if (!(op_a_norm > 0.0) || !(op_b_norm > 0.0))
    throw Error(ErrorKind::DomainError, "operator norms must be positive");
  WolfBound w;
  w.lhs = mi_value;
  w.rhs = connected_correlator * connected_correlator /
          (2.0 * op_a_norm * op_a_norm * op_b_norm * op_b_norm);
  w.satisfied = w.lhs >= w.rhs;
  return w;
}

}  // namespace holo
