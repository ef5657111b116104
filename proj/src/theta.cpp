#include "holo/theta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "holo/error.hpp"

namespace holo {

namespace {

using std::numbers::pi;

// Largest exponent handed to exp() before the series is declared out of domain.
constexpr double kMaxExponent = 700.0;

// Series in scaled form: sectors 1 and 2 carry a common factor 2 q^{1/4}
// which is kept as a log so that large tau_im cannot underflow it.
struct ScaledSeries {
  double scaled = 0.0;  // value = exp(log_scale) * scaled (+ 1 for sectors 3, 4)
  double log_scale = 0.0;
  std::size_t terms = 0;
};

void check_exponent(double exponent, const ThetaContext& ctx, double y) {
  if (exponent > kMaxExponent) {
    std::ostringstream os;
    os << "theta_" << ctx.sector << " term overflows at tau_im = " << ctx.tau_im << ", y = " << y;
    throw Error(ErrorKind::NonConvergent, os.str());
  }
}

// Term n of the scaled series (sign included).
double scaled_term(const ThetaContext& ctx, double y, std::size_t n) {
  const double a = std::abs(y);
  const double nn = static_cast<double>(n);
  const double sign = (ctx.sector == 1 || ctx.sector == 4) && (n % 2 == 1) ? -1.0 : 1.0;
  switch (ctx.sector) {
    case 1:
    case 2: {
      // q^{(n+1/2)^2} / q^{1/4} = exp(-pi tau n (n+1)); (2n+1) y in the hyperbolic factor.
      const double k = 2.0 * nn + 1.0;
      const double exponent = -pi * ctx.tau_im * nn * (nn + 1.0) + k * a;
      check_exponent(exponent, ctx, y);
      const double e = std::exp(exponent);
      if (ctx.sector == 1) {
        const double odd = -std::expm1(-2.0 * k * a) * 0.5;  // e^{-ka} sinh(ka)
        return sign * (y < 0.0 ? -1.0 : 1.0) * e * odd;
      }
      return sign * e * 0.5 * (1.0 + std::exp(-2.0 * k * a));
    }
    default: {
      // n >= 1: 2 q^{n^2} cosh(2 n y)
      const double exponent = -pi * ctx.tau_im * nn * nn + 2.0 * nn * a;
      check_exponent(exponent, ctx, y);
      return sign * std::exp(exponent) * (1.0 + std::exp(-4.0 * nn * a));
    }
  }
}

std::size_t first_index(const ThetaContext& ctx) { return ctx.sector <= 2 ? 0 : 1; }

// Index beyond which the terms decrease monotonically in magnitude.
double peak_index(const ThetaContext& ctx, double y) {
  return std::abs(y) / (pi * ctx.tau_im) + 1.0;
}

ScaledSeries sum_series(const ThetaContext& ctx, double y, std::size_t max_terms, bool adaptive) {
  ScaledSeries s;
  if (ctx.sector <= 2) s.log_scale = std::log(2.0) - 0.25 * pi * ctx.tau_im;
  const double peak = peak_index(ctx, y);
  const double lead = ctx.sector >= 3 ? 1.0 : 0.0;
  std::size_t n = first_index(ctx);
  for (; s.terms < max_terms; ++n) {
    const double t = scaled_term(ctx, y, n);
    if (adaptive && static_cast<double>(n) > peak) {
      // Compare in unscaled units against the full partial sum.
      const double scale = std::exp(s.log_scale);
      const double mag = std::abs(t) * scale;
      const double excess = std::abs(s.scaled) * scale;
      if (mag <= ctx.tol * (1.0 + lead + excess) && mag <= ctx.tol * excess) return s;
    }
    s.scaled += t;
    ++s.terms;
  }
  if (adaptive) {
    std::ostringstream os;
    os << "theta_" << ctx.sector << " needs more than " << max_terms
       << " terms at tau_im = " << ctx.tau_im;
    throw Error(ErrorKind::NonConvergent, os.str());
  }
  return s;
}

SeriesValue unscale(const ThetaContext& ctx, const ScaledSeries& s) {
  SeriesValue v;
  v.terms = s.terms;
  v.excess = std::exp(s.log_scale) * s.scaled;
  v.value = ctx.sector >= 3 ? 1.0 + v.excess : v.excess;
  return v;
}

void check_torus(double r, double temperature, double length) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw Error(ErrorKind::InvalidArgument, "temperature must be positive");
  if (!(length > 0.0) || !std::isfinite(length))
    throw Error(ErrorKind::InvalidArgument, "system length must be positive");
  if (r == 0.0) throw Error(ErrorKind::CoincidentPoints, "torus correlator at zero separation");
  if (!(r < length)) {
    std::ostringstream os;
    os << "separation " << r << " must lie inside (0, L = " << length << ")";
    throw Error(ErrorKind::DomainError, os.str());
  }
}

// sum (-1)^n (2n+1) q^{n(n+1)}, i.e. theta_1'(0) / (2 q^{1/4}).
double scaled_theta1_prime(double tau_im, double tol) {
  const double peak = 1.0 / std::sqrt(2.0 * pi * tau_im) + 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < kMaxThetaTerms; ++n) {
    const double nn = static_cast<double>(n);
    const double t =
        (n % 2 == 1 ? -1.0 : 1.0) * (2.0 * nn + 1.0) * std::exp(-pi * tau_im * nn * (nn + 1.0));
    if (nn > peak && std::abs(t) <= tol * std::abs(sum)) return sum;
    sum += t;
  }
  throw Error(ErrorKind::NonConvergent, "theta_1'(0) series did not converge");
}

// pi * theta_1'(0) / |theta_1(i y)|; the common 2 q^{1/4} cancels.
double prime_over_theta1(double y, double tau_im, double tol) {
  const ThetaContext one{1, tau_im, tol};
  const ScaledSeries den = sum_series(one, y, kMaxThetaTerms, true);
  return pi * scaled_theta1_prime(tau_im, tol) / std::abs(den.scaled);
}

}  // namespace

void ThetaContext::validate() const {
  if (sector < 1 || sector > 4) {
    throw Error(ErrorKind::InvalidArgument, "theta sector must be 1, 2, 3 or 4");
  }
  if (!(tau_im > 0.0) || !std::isfinite(tau_im))
    throw Error(ErrorKind::InvalidArgument, "tau_im must be positive");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
}

SeriesValue theta_series(const ThetaContext& ctx, ImagArg omega) {
  ctx.validate();
  return unscale(ctx, sum_series(ctx, omega.value, kMaxThetaTerms, true));
}

SeriesValue theta_series_fixed(const ThetaContext& ctx, ImagArg omega, std::size_t terms) {
  ctx.validate();
  return unscale(ctx, sum_series(ctx, omega.value, terms, false));
}

double theta(const ThetaContext& ctx, ImagArg omega) { return theta_series(ctx, omega).value; }

double log_abs_theta(const ThetaContext& ctx, ImagArg omega) {
  ctx.validate();
  const ScaledSeries s = sum_series(ctx, omega.value, kMaxThetaTerms, true);
  if (ctx.sector >= 3) {
    const double excess = std::exp(s.log_scale) * s.scaled;
    // theta_4 turns negative for large |y|; log1p only where it helps.
    return excess > -0.5 ? std::log1p(excess) : std::log(std::abs(1.0 + excess));
  }
  return s.log_scale + std::log(std::abs(s.scaled));
}

double theta1_prime_at_zero(const ThetaContext& ctx) {
  ThetaContext c = ctx;
  c.sector = 1;
  c.validate();
  return 2.0 * std::exp(-0.25 * pi * c.tau_im) * scaled_theta1_prime(c.tau_im, c.tol);
}

double fermion_correlator_torus(double u, double v, double temperature, double length, int sector,
                                double tol) {
  if (sector != 3 && sector != 4) {
    throw Error(ErrorKind::SectorUnsupported,
                "torus fermion correlator is defined for sectors 3 and 4 only");
  }
  const double r = std::abs(u - v);
  check_torus(r, temperature, length);
  const double tau_im = length * temperature;
  const double y = pi * temperature * r;
  const ThetaContext ctx{sector, tau_im, tol};
  const double ratio_nu = std::exp(log_abs_theta(ctx, ImagArg{y}) - log_abs_theta(ctx, ImagArg{0.0}));
  const double sign_nu = theta(ctx, ImagArg{y}) < 0.0 ? -1.0 : 1.0;
  return sign_nu * ratio_nu * prime_over_theta1(y, tau_im, tol);
}

double upsilon(double u, double v, double temperature, double length, double tol) {
  const double r = std::abs(u - v);
  check_torus(r, temperature, length);
  return std::log(prime_over_theta1(pi * temperature * r, length * temperature, tol));
}

double log_theta_at_separation(double separation, double temperature, double length, int sector,
                               double tol) {
  if (!(temperature > 0.0) || !(length > 0.0))
    throw Error(ErrorKind::InvalidArgument, "temperature and length must be positive");
  const ThetaContext ctx{sector, length * temperature, tol};
  return log_abs_theta(ctx, ImagArg{std::numbers::pi * temperature * separation});
}

}  // namespace holo
