#pragma once

#include <limits>
#include <utility>
#include <vector>

namespace holo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class GeometryKind { PureAdS, NonRotatingBTZ, RotatingBTZ };

/// Dual bulk background: pure AdS3 or a (rotating) BTZ black hole.
///
/// Positions on the boundary, the UV cutoff and horizon depths share the
/// length unit of `ads_radius`. Build instances through the named factories,
/// which validate the horizon ordering r_plus >= r_minus >= 0.
struct BulkGeometry {
  GeometryKind kind = GeometryKind::PureAdS;
  double ads_radius = 1.0;
  double r_plus = 0.0;
  double r_minus = 0.0;
  double uv_cutoff = 1e-3;
  double newton_constant = 0.5;

  static BulkGeometry pure_ads(double ads_radius = 1.0, double uv_cutoff = 1e-3,
                               double newton_constant = 0.5);
  static BulkGeometry non_rotating(double r_plus, double ads_radius = 1.0,
                                   double uv_cutoff = 1e-3, double newton_constant = 0.5);
  static BulkGeometry rotating(double r_plus, double r_minus, double ads_radius = 1.0,
                               double uv_cutoff = 1e-3, double newton_constant = 0.5);
  /// Non-rotating BTZ whose inverse temperature is `beta` (r_plus = 2 pi l^2 / beta).
  static BulkGeometry with_beta(double beta, double ads_radius = 1.0,
                                double uv_cutoff = 1e-3, double newton_constant = 0.5);

  /// Replaces G_N so that the Brown-Henneaux central charge equals `c`.
  BulkGeometry& set_central_charge(double c);
  BulkGeometry with_cutoff(double eps) const;

  /// Throws Error(InvalidArgument) when an invariant does not hold.
  void validate() const;
};

/// Inverse temperatures and horizon depths. Scales that do not exist
/// (pure AdS, or the right-movers of an extremal hole) are +infinity.
struct ThermalScales {
  double beta = kInfinity;
  double beta_left = kInfinity;
  double beta_right = kInfinity;
  double z_plus = kInfinity;
  double z_left = kInfinity;
  double z_right = kInfinity;
};

struct HorizonRadii {
  double r_plus;
  double r_minus;
};

struct VirasoroCharges {
  double left;
  double right;
};

/// Outer and inner horizon radii of a BTZ hole of mass M and angular momentum J.
/// Only |J| enters; the sign of J selects which sector is hotter.
HorizonRadii btz_from_mass_spin(double mass, double spin, double ads_radius = 1.0);

/// (M, J) from the horizon radii; inverse of btz_from_mass_spin.
std::pair<double, double> mass_spin(const BulkGeometry& geometry);

ThermalScales thermal_scales(const BulkGeometry& geometry);

/// Brown-Henneaux: c = 3 l / (2 G_N).
double central_charge(const BulkGeometry& geometry);

/// L_0 - c/24 and its right-moving partner.
VirasoroCharges virasoro_charges(const BulkGeometry& geometry);

/// Inverse temperatures of the independent thermal sectors of the geometry:
/// {inf} for pure AdS, {beta} for non-rotating BTZ and {beta_L, beta_R} for
/// rotating BTZ. Geodesic lengths and correlators factorize over this list.
std::vector<double> sector_betas(const BulkGeometry& geometry);

/// log[(beta/pi) sinh(pi dx / beta)] for dx > 0, evaluated without overflow;
/// reduces to log(dx) when beta is infinite.
double log_thermal_distance(double dx, double beta);

/// Regularized length of the boundary-anchored geodesic between x_i and x_j.
/// Non-rotating: 2 l log[(beta / pi eps) sinh(pi |dx| / beta)]. Rotating: the
/// sum of that expression over beta_L and beta_R.
double geodesic_length(const BulkGeometry& geometry, double x_i, double x_j);

}  // namespace holo
