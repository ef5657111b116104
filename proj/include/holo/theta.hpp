#pragma once

#include <cstddef>

namespace holo {

/// Jacobi theta functions theta_nu(omega | tau) restricted to tau = i * tau_im
/// and omega = i * y.
///
/// Convention: nome q = exp(i pi tau) = exp(-pi tau_im) and
///
///   theta_1 = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) omega)
///   theta_2 = 2 sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1) omega)
///   theta_3 = 1 + 2 sum_{n>=1}        q^{n^2} cos(2n omega)
///   theta_4 = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2n omega)
///
/// so theta_1'(0) = theta_2(0) theta_3(0) theta_4(0). On the imaginary axis
/// theta_2,3,4 are real, and theta_1(iy) = i * R(y) with R real; the engine
/// returns R(y) for sector 1.
struct ThetaContext {
  int sector = 3;
  double tau_im = 1.0;
  double tol = 1e-12;

  /// Throws Error(InvalidArgument) for a bad sector, tau_im <= 0 or tol <= 0.
  void validate() const;
};

/// An argument omega = i * value on the imaginary axis.
struct ImagArg {
  double value = 0.0;
};

struct SeriesValue {
  double value = 0.0;
  /// value minus the constant leading term (1 for sectors 3 and 4, else the
  /// value itself). Kept separately so log(theta) stays accurate when theta
  /// is within rounding of 1.
  double excess = 0.0;
  std::size_t terms = 0;
};

inline constexpr std::size_t kMaxThetaTerms = 1'000'000;

/// Adaptive q-series: stops once the series is past its largest term and the
/// next term is below tol * (1 + |partial sum|). Throws NonConvergent when
/// kMaxThetaTerms terms are not enough.
SeriesValue theta_series(const ThetaContext& ctx, ImagArg omega);

/// The first `terms` terms of the same series, no truncation test.
SeriesValue theta_series_fixed(const ThetaContext& ctx, ImagArg omega, std::size_t terms);

double theta(const ThetaContext& ctx, ImagArg omega);

/// log|theta_nu(iy | tau)|, accurate to relative precision for sectors 3, 4
/// even when theta - 1 is far below machine epsilon.
double log_abs_theta(const ThetaContext& ctx, ImagArg omega);

/// d theta_1 / d omega at omega = 0: 2 sum (-1)^n (2n+1) q^{(n+1/2)^2}.
/// `ctx.sector` is ignored.
double theta1_prime_at_zero(const ThetaContext& ctx);

// Torus observables. The boundary separation |u - v| enters as the period-1
// argument z = i |u - v| T, i.e. omega = pi z, with tau = i L T; theta_1' is
// taken with respect to z, so the spatial ring has period L.

/// Free-fermion two-point function on the torus in sector nu in {3, 4}:
/// [theta_nu(z)/theta_nu(0)] [theta_1'(0)/theta_1(z)], factor i removed.
double fermion_correlator_torus(double u, double v, double temperature, double length, int sector,
                                double tol = 1e-12);

/// log |theta_1'(0) / theta_1(z)|.
double upsilon(double u, double v, double temperature, double length, double tol = 1e-12);

/// log theta_nu(i pi T r | i L T) for a separation r, the building block of
/// the finite-size mutual information.
double log_theta_at_separation(double separation, double temperature, double length, int sector,
                               double tol = 1e-12);

}  // namespace holo
