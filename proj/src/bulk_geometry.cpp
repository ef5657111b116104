#include "holo/bulk_geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "holo/error.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OverExtremal: return "OverExtremal";
    case ErrorKind::NonPositiveMass: return "NonPositiveMass";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::SectorUnsupported: return "SectorUnsupported";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::NoHorizon: return "NoHorizon";
    case ErrorKind::BadBranch: return "BadBranch";
    case ErrorKind::NotPowerOfBranch: return "NotPowerOfBranch";
    case ErrorKind::BlockOutOfRange: return "BlockOutOfRange";
  }
  return "Unknown";
}

namespace {

using std::numbers::pi;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

BulkGeometry BulkGeometry::pure_ads(double ads_radius, double uv_cutoff, double newton_constant) {
  BulkGeometry g{GeometryKind::PureAdS, ads_radius, 0.0, 0.0, uv_cutoff, newton_constant};
  g.validate();
  return g;
}

BulkGeometry BulkGeometry::non_rotating(double r_plus, double ads_radius, double uv_cutoff,
                                        double newton_constant) {
  BulkGeometry g{GeometryKind::NonRotatingBTZ, ads_radius, r_plus, 0.0, uv_cutoff, newton_constant};
  g.validate();
  return g;
}

BulkGeometry BulkGeometry::rotating(double r_plus, double r_minus, double ads_radius,
                                    double uv_cutoff, double newton_constant) {
  BulkGeometry g{GeometryKind::RotatingBTZ, ads_radius, r_plus, r_minus, uv_cutoff, newton_constant};
  g.validate();
  return g;
}

BulkGeometry BulkGeometry::with_beta(double beta, double ads_radius, double uv_cutoff,
                                     double newton_constant) {
  if (!positive_finite(beta)) invalid("beta must be positive and finite");
  return non_rotating(2.0 * pi * ads_radius * ads_radius / beta, ads_radius, uv_cutoff,
                      newton_constant);
}

BulkGeometry& BulkGeometry::set_central_charge(double c) {
  if (!positive_finite(c)) invalid("central charge must be positive");
  newton_constant = 3.0 * ads_radius / (2.0 * c);
  return *this;
}

BulkGeometry BulkGeometry::with_cutoff(double eps) const {
  BulkGeometry g = *this;
  g.uv_cutoff = eps;
  g.validate();
  return g;
}

void BulkGeometry::validate() const {
  if (!positive_finite(ads_radius)) invalid("ads_radius must be positive");
  if (!positive_finite(uv_cutoff)) invalid("uv_cutoff must be positive");
  if (!positive_finite(newton_constant)) invalid("newton_constant must be positive");
  if (!std::isfinite(r_plus) || !std::isfinite(r_minus) || r_minus < 0.0 || r_plus < r_minus) {
    std::ostringstream os;
    os << "horizon radii must satisfy r_plus >= r_minus >= 0 (got " << r_plus << ", " << r_minus
       << ")";
    invalid(os.str());
  }
  switch (kind) {
    case GeometryKind::PureAdS:
      if (r_plus != 0.0 || r_minus != 0.0) invalid("pure AdS has no horizon");
      break;
    case GeometryKind::NonRotatingBTZ:
      if (r_plus <= 0.0) invalid("BTZ requires r_plus > 0");
      if (r_minus != 0.0) invalid("non-rotating BTZ requires r_minus = 0");
      break;
    case GeometryKind::RotatingBTZ:
      if (r_plus <= 0.0) invalid("BTZ requires r_plus > 0");
      break;
  }
}

HorizonRadii btz_from_mass_spin(double mass, double spin, double ads_radius) {
  if (!(mass > 0.0)) throw Error(ErrorKind::NonPositiveMass, "M must be positive");
  if (!positive_finite(ads_radius)) invalid("ads_radius must be positive");
  const double ml = mass * ads_radius;
  if (std::abs(spin) > ml) {
    std::ostringstream os;
    os << "|J| = " << std::abs(spin) << " exceeds M l = " << ml;
    throw Error(ErrorKind::OverExtremal, os.str());
  }
  const double ratio = spin / ml;
  const double root = std::sqrt((1.0 - ratio) * (1.0 + ratio));
  return {ads_radius * std::sqrt(0.5 * mass * (1.0 + root)),
          ads_radius * std::sqrt(0.5 * mass * (1.0 - root))};
}

std::pair<double, double> mass_spin(const BulkGeometry& g) {
  const double l = g.ads_radius;
  return {(g.r_plus * g.r_plus + g.r_minus * g.r_minus) / (l * l), 2.0 * g.r_plus * g.r_minus / l};
}

ThermalScales thermal_scales(const BulkGeometry& g) {
  ThermalScales s;
  if (g.kind == GeometryKind::PureAdS) return s;
  const double two_pi_l2 = 2.0 * pi * g.ads_radius * g.ads_radius;
  s.beta = two_pi_l2 / g.r_plus;
  s.beta_left = two_pi_l2 / (g.r_plus + g.r_minus);
  const double gap = g.r_plus - g.r_minus;
  s.beta_right = gap > 0.0 ? two_pi_l2 / gap : kInfinity;
  s.z_plus = s.beta / (2.0 * pi);
  s.z_left = s.beta_left / (2.0 * pi);
  s.z_right = s.beta_right / (2.0 * pi);
  return s;
}

double central_charge(const BulkGeometry& g) { return 3.0 * g.ads_radius / (2.0 * g.newton_constant); }

VirasoroCharges virasoro_charges(const BulkGeometry& g) {
  if (g.kind == GeometryKind::PureAdS) return {0.0, 0.0};
  const auto [m, j] = mass_spin(g);
  const double ml = m * g.ads_radius;
  const double denom = 16.0 * g.newton_constant;
  return {(ml + j) / denom, (ml - j) / denom};
}

std::vector<double> sector_betas(const BulkGeometry& g) {
  const ThermalScales s = thermal_scales(g);
  switch (g.kind) {
    case GeometryKind::PureAdS: return {kInfinity};
    case GeometryKind::NonRotatingBTZ: return {s.beta};
    case GeometryKind::RotatingBTZ: return {s.beta_left, s.beta_right};
  }
  return {};
}

double log_thermal_distance(double dx, double beta) {
  const double logdx = std::log(dx);
  if (std::isinf(beta)) return logdx;
  const double y = pi * dx / beta;
  // log(sinh(y)/y); the large-y branch never forms sinh(y).
  double correction;
  if (y < 1.0) {
    correction = std::log(std::sinh(y) / y);
  } else {
    correction = y + std::log(-std::expm1(-2.0 * y)) - std::numbers::ln2 - std::log(y);
  }
  return logdx + correction;
}

double geodesic_length(const BulkGeometry& g, double x_i, double x_j) {
  const double dx = std::abs(x_i - x_j);
  if (!(dx > 0.0)) throw Error(ErrorKind::CoincidentPoints, "geodesic endpoints coincide");
  const double log_eps = std::log(g.uv_cutoff);
  double total = 0.0;
  for (double beta : sector_betas(g)) total += log_thermal_distance(dx, beta) - log_eps;
  return 2.0 * g.ads_radius * total;
}

}  // namespace holo
