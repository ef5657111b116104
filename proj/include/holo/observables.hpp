#pragma once

#include <optional>

#include "holo/bulk_geometry.hpp"

namespace holo {

/// Two disjoint boundary intervals A = [u1, v1], B = [u2, v2] of equal size
/// l, separated by d = u2 - v1.
class IntervalPair {
 public:
  /// Requires u1 < v1 < u2 < v2 and |u1 - v1| = |u2 - v2| (to rounding).
  IntervalPair(double u1, double v1, double u2, double v2);

  static IntervalPair from_size(double start, double size, double separation);

  double u1() const { return u1_; }
  double v1() const { return v1_; }
  double u2() const { return u2_; }
  double v2() const { return v2_; }

  double size() const { return v1_ - u1_; }
  double separation() const { return u2_ - v1_; }
  /// |u1 - v2|, equal to 2 l + d.
  double outer_span() const { return v2_ - u1_; }

  /// x = l^2 / (l + d)^2.
  double cross_ratio() const;
  /// The same ratio from the four endpoints, |u1-v1||u2-v2| / (|u1-u2||v1-v2|).
  double cross_ratio_four_point() const;
  /// log(x / (1 - x)) = log(l^2 / (d (2l + d))) without forming 1 - x.
  double log_cross_ratio_odds() const;

  IntervalPair shifted(double offset) const;

 private:
  double u1_, v1_, u2_, v2_;
};

enum class MiPhase { Connected, Disconnected };

struct MiResult {
  double value = 0.0;
  MiPhase phase = MiPhase::Disconnected;
  double length_connected = 0.0;     // L(u1, v2) + L(v1, u2)
  double length_disconnected = 0.0;  // L(u1, v1) + L(u2, v2)
  double newton_constant = 0.5;

  /// (L_dis - L_con) / 4 G_N, positive exactly in the connected phase.
  double unclamped() const {
    return (length_disconnected - length_connected) / (4.0 * newton_constant);
  }
};

/// S = L(a, b) / 4 G_N.
double interval_entropy(const BulkGeometry& geometry, double a, double b);

/// Holographic mutual information, taking the shorter of the two candidate
/// geodesic configurations for A u B.
MiResult mutual_information(const BulkGeometry& geometry, const IntervalPair& pair);

/// 0 for x < 1/2, (c/3) log(x / (1 - x)) otherwise.
double mi_pure_ads(double x, double c);

/// Finite-size mutual information on a ring of length L at temperature T,
/// (c/3) log(x/(1-x)) + (c/3) f_nu, returned unclamped.
double mi_torus(const IntervalPair& pair, double temperature, double length, int sector, double c,
                double tol = 1e-12);

/// Near-extremal rotating version: (2c/3) log(x/(1-x)) + (c/3) f_nu at T = T_L.
double mi_torus_rotating(const IntervalPair& pair, double temperature_left, double length, int sector,
                         double c, double tol = 1e-12);

/// f_nu = log[theta(|u1-v2|) theta(|u2-v1|) / (theta(|u1-v1|) theta(|u2-v2|))].
double theta_correction(const IntervalPair& pair, double temperature, double length, int sector,
                        double tol = 1e-12);

enum class TorusModel { NonRotating, Rotating };

struct TransitionPoint {
  double x0 = 0.0;
  /// 1/2 - x0, computed from logit(x0) so that it keeps full relative
  /// precision when x0 rounds to 1/2.
  double deficit = 0.0;
  double logit = 0.0;  // log(x0 / (1 - x0))
  double separation = 0.0;
  double size = 0.0;
  double length = 1.0;
  double temperature = 0.0;
};

/// Cross ratio at which the unclamped finite-size MI changes sign. The ring
/// has L = 1 and T = tau_abs; the intervals have size l = l_over_L, by
/// default the tied-horizon value 1 / (2 pi tau_abs). The solver scans d
/// upward from 1e-4 l for the first sign change (d <= min(100 l, L - 2 l))
/// and bisects in logit(x). Throws Error(NoBracket) when there is none.
TransitionPoint transition_point(TorusModel model, double tau_abs, int sector, double c,
                                 std::optional<double> l_over_L = std::nullopt,
                                 double tol = 1e-12);

/// <O(xA) O(xB)> for an operator of dimension delta, normalized so that each
/// thermal sector contributes |dx|^{-2 delta} at short distance:
/// prod_sectors [(beta/pi) sinh(pi |dx| / beta)]^{-2 delta}.
double two_point_correlator(const BulkGeometry& geometry, double delta, double x_a, double x_b);
double log_two_point_correlator(const BulkGeometry& geometry, double delta, double x_a, double x_b);

/// Separation z_+ = beta / (2 pi) at which 2 pi T |xA - xB| = 1.
double crossover_separation(const BulkGeometry& geometry);

struct WolfBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
};

/// Compares I(A:B) with C^2 / (2 |O_A|^2 |O_B|^2), assuming <O_A> = <O_B> = 0.
WolfBound wolf_bound_report(double mi_value, double connected_correlator, double op_a_norm,
                            double op_b_norm);

}  // namespace holo
