#include <cmath>
#include <numbers>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/observables.hpp"
#include "oracle.hpp"

using namespace holo;
using std::numbers::pi;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

// Pair with cross ratio x at l = 1.
IntervalPair pair_at_x(double x) { return IntervalPair::from_size(0.0, 1.0, 1.0 / std::sqrt(x) - 1.0); }

}  // namespace

TEST_CASE("interval pair") {
  const IntervalPair p(0.0, 1.0, 2.0, 3.0);
  CHECK(p.size() == 1.0);
  CHECK(p.separation() == 1.0);
  CHECK(p.outer_span() == 3.0);
  CHECK(p.cross_ratio() == doctest::Approx(0.25));
  CHECK(p.cross_ratio_four_point() == doctest::Approx(0.25));

  const auto q = IntervalPair::from_size(0.0, 1.0, 0.3655);
  CHECK(q.cross_ratio() == doctest::Approx(0.53631085971837512).epsilon(1e-14));
  CHECK(q.cross_ratio_four_point() == doctest::Approx(q.cross_ratio()).epsilon(1e-12));
  CHECK(q.log_cross_ratio_odds() ==
        doctest::Approx(std::log(q.cross_ratio() / (1.0 - q.cross_ratio()))).epsilon(1e-12));

  CHECK(IntervalPair::from_size(0.0, 1.0, 1e-9).cross_ratio() == doctest::Approx(1.0).epsilon(1e-8));

  CHECK(kind_of([] { IntervalPair(0.0, 1.0, 2.0, 3.5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { IntervalPair(0.0, 1.0, 0.5, 1.5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { IntervalPair(1.0, 0.0, 2.0, 3.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { IntervalPair::from_size(0.0, 1.0, 0.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("interval entropy") {
  BulkGeometry ads = BulkGeometry::pure_ads(1.0, 0.01);
  CHECK(interval_entropy(ads, 0.0, 1.0) == doctest::Approx(std::log(100.0)).epsilon(1e-14));

  // Non-rotating: (c/3) log[(beta / pi eps) sinh(pi l / beta)]
  const auto g = BulkGeometry::with_beta(3.0, 1.0, 1e-3);
  const double want = std::log(3.0 / (pi * 1e-3) * std::sinh(pi * 2.0 / 3.0));
  CHECK(interval_entropy(g, 0.0, 2.0) == doctest::Approx(want).epsilon(1e-13));

  CHECK(kind_of([&] { interval_entropy(g, 1.0, 1.0); }) == ErrorKind::CoincidentPoints);
}

TEST_CASE("pure AdS mutual information") {
  const auto g = BulkGeometry::pure_ads();
  const MiResult hi = mutual_information(g, pair_at_x(0.8));
  CHECK(hi.phase == MiPhase::Connected);
  CHECK(hi.value == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  const MiResult lo = mutual_information(g, pair_at_x(0.3));
  CHECK(lo.phase == MiPhase::Disconnected);
  CHECK(lo.value == 0.0);
  CHECK(lo.unclamped() < 0.0);

  CHECK(mi_pure_ads(0.5, 3.0) == 0.0);
  CHECK(mi_pure_ads(0.49, 3.0) == 0.0);
  CHECK(mi_pure_ads(0.9, 3.0) == doctest::Approx(std::log(9.0)).epsilon(1e-15));
  CHECK(mi_pure_ads(0.9, 6.0) == doctest::Approx(2.0 * std::log(9.0)).epsilon(1e-15));
  CHECK(kind_of([] { mi_pure_ads(0.0, 3.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { mi_pure_ads(1.0, 3.0); }) == ErrorKind::DomainError);
}

TEST_CASE("tied-horizon BTZ transition") {
  // beta = 2 pi l with l = 1.
  const auto g = BulkGeometry::with_beta(2.0 * pi);
  const double d0 = static_cast<double>(oracle::tied_transition_separation());
  CHECK(d0 == doctest::Approx(0.365332914243211).epsilon(1e-13));
  CHECK(mutual_information(g, IntervalPair::from_size(0.0, 1.0, d0 * 0.999)).phase == MiPhase::Connected);
  CHECK(mutual_information(g, IntervalPair::from_size(0.0, 1.0, d0 * 1.001)).phase == MiPhase::Disconnected);
  CHECK(std::abs(mutual_information(g, IntervalPair::from_size(0.0, 1.0, d0)).unclamped()) < 1e-12);
  CHECK(IntervalPair::from_size(0.0, 1.0, d0).cross_ratio() == doctest::Approx(0.536442132301119).epsilon(1e-12));
}

TEST_CASE("mutual information lengths and clamp") {
  const auto g = BulkGeometry::rotating(1.2, 0.7, 1.0, 1e-2);
  const auto p = IntervalPair::from_size(0.3, 0.9, 0.4);
  const MiResult r = mutual_information(g, p);
  CHECK(r.length_disconnected ==
        doctest::Approx(geodesic_length(g, p.u1(), p.v1()) + geodesic_length(g, p.u2(), p.v2())));
  CHECK(r.length_connected ==
        doctest::Approx(geodesic_length(g, p.u1(), p.v2()) + geodesic_length(g, p.v1(), p.u2())));
  CHECK(r.unclamped() ==
        doctest::Approx((r.length_disconnected - r.length_connected) / (4.0 * g.newton_constant)).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(std::max(0.0, r.unclamped())));
}

TEST_CASE("finite-size mutual information") {
  const double T = 1.0 / (2.0 * pi);
  const auto p = IntervalPair::from_size(0.0, 1.0, 1.0);
  CHECK(mi_torus(p, T, 8.0, 3, 3.0) == doctest::Approx(-0.83963705340241156531).epsilon(1e-12));
  CHECK(mi_torus(p, T, 8.0, 3, 3.0) ==
        doctest::Approx(static_cast<double>(oracle::mi_torus(1, 1, 8, oracle::mp(1) / (2 * oracle::pi()), 3, 3)))
            .epsilon(1e-12));
  CHECK(mi_torus(p, T, 8.0, 4, 3.0) ==
        doctest::Approx(static_cast<double>(oracle::mi_torus(1, 1, 8, oracle::mp(1) / (2 * oracle::pi()), 4, 3)))
            .epsilon(1e-12));

  const auto q = IntervalPair::from_size(0.0, 1.0, 0.8);
  CHECK(mi_torus_rotating(q, T, 8.0, 3, 3.0) == doctest::Approx(-1.4109321628173686893).epsilon(1e-12));
  CHECK(mi_torus_rotating(q, T, 8.0, 3, 3.0) - mi_torus(q, T, 8.0, 3, 3.0) ==
        doctest::Approx(std::log(q.cross_ratio() / (1.0 - q.cross_ratio()))).epsilon(1e-12));

  // d -> 0: the odds term dominates.
  CHECK(mi_torus(IntervalPair::from_size(0.0, 1.0, 1e-8), T, 8.0, 3, 3.0) > 10.0);

  // Large LT: theta ratios -> 1, pure-AdS law.
  const auto deep = IntervalPair::from_size(0.0, 0.1, 0.02);
  CHECK(std::abs(mi_torus(deep, 50.0, 1.0, 3, 3.0) - mi_pure_ads(deep.cross_ratio(), 3.0)) < 3e-3);
  CHECK(std::abs(mi_torus_rotating(deep, 50.0, 1.0, 3, 3.0) - 2.0 * mi_pure_ads(deep.cross_ratio(), 3.0)) < 3e-3);

  CHECK(kind_of([&] { mi_torus(p, T, 2.5, 3, 3.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { mi_torus(p, T, 8.0, 2, 3.0); }) == ErrorKind::SectorUnsupported);
  CHECK(kind_of([&] { mi_torus(p.shifted(-0.5), T, 8.0, 3, 3.0); }) == ErrorKind::DomainError);
}

TEST_CASE("transition point") {
  const TransitionPoint tp = transition_point(TorusModel::NonRotating, 2.0, 3, 3.0);
  CHECK(tp.deficit == doctest::Approx(0.003373).epsilon(1e-3));
  CHECK(tp.x0 == doctest::Approx(0.5 - tp.deficit).epsilon(1e-15));
  CHECK(tp.size == doctest::Approx(1.0 / (4.0 * pi)));
  // The root really is a zero of the unclamped MI.
  const auto p = IntervalPair::from_size(0.0, tp.size, tp.separation);
  CHECK(std::abs(mi_torus(p, tp.temperature, tp.length, 3, 3.0)) < 1e-9);
  CHECK(p.cross_ratio() == doctest::Approx(tp.x0).epsilon(1e-9));

  const TransitionPoint rot = transition_point(TorusModel::Rotating, 1.0, 3, 3.0);
  CHECK(rot.deficit == doctest::Approx(0.03165).epsilon(2e-3));

  // Tiny deficits keep relative precision.
  const TransitionPoint far = transition_point(TorusModel::NonRotating, 20.0, 3, 3.0);
  CHECK(far.deficit == doctest::Approx(9.38e-28).epsilon(2e-3));
  CHECK(far.deficit > 0.0);

  // Central charge drops out of the location.
  CHECK(transition_point(TorusModel::NonRotating, 2.0, 3, 24.0).x0 == doctest::Approx(tp.x0).epsilon(1e-12));

  CHECK(kind_of([] { transition_point(TorusModel::NonRotating, 0.5, 3, 3.0); }) == ErrorKind::NoBracket);
  CHECK(kind_of([] { transition_point(TorusModel::NonRotating, 0.0, 3, 3.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { transition_point(TorusModel::NonRotating, 1.0, 3, 3.0, 0.6); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("two-point correlator") {
  const auto g = BulkGeometry::with_beta(2.0);
  const double T = 0.5;
  // Non-rotating closed form [pi T / sinh(pi T dx)]^{2 Delta}.
  for (double dx : {0.01, 0.5, 3.0}) {
    CHECK(two_point_correlator(g, 1.5, 0.0, dx) ==
          doctest::Approx(std::pow(pi * T / std::sinh(pi * T * dx), 3.0)).epsilon(1e-12));
  }
  const double small = 0.05 / (pi * T);
  CHECK(two_point_correlator(g, 1.0, 0.0, small) * small * small == doctest::Approx(1.0).epsilon(1e-2));

  const auto ads = BulkGeometry::pure_ads();
  CHECK(two_point_correlator(ads, 2.0, 1.0, 3.0) == doctest::Approx(std::pow(2.0, -4.0)).epsilon(1e-14));

  // Rotating: product of the two sector factors.
  const auto rot = BulkGeometry::rotating(2.0, 1.0);
  const auto s = thermal_scales(rot);
  const double dx = 0.7;
  const double want = std::pow(s.beta_left / pi * std::sinh(pi * dx / s.beta_left), -2.0) *
                      std::pow(s.beta_right / pi * std::sinh(pi * dx / s.beta_right), -2.0);
  CHECK(two_point_correlator(rot, 1.0, 0.0, dx) == doctest::Approx(want).epsilon(1e-12));

  CHECK(kind_of([&] { two_point_correlator(g, 1.0, 0.3, 0.3); }) == ErrorKind::CoincidentPoints);
  CHECK(kind_of([&] { two_point_correlator(g, 0.0, 0.0, 1.0); }) == ErrorKind::InvalidArgument);
  // Deep in the thermal regime the log stays finite.
  CHECK(std::isfinite(log_two_point_correlator(g, 1.0, 0.0, 1e6)));
}

TEST_CASE("crossover separation") {
  CHECK(crossover_separation(BulkGeometry::non_rotating(1.0)) == doctest::Approx(1.0));
  CHECK(crossover_separation(BulkGeometry::non_rotating(0.5)) == doctest::Approx(2.0));
  CHECK(kind_of([] { crossover_separation(BulkGeometry::pure_ads()); }) == ErrorKind::NoHorizon);
  // At the crossover the correlator, in horizon units, is e^{-Delta} up to a
  // factor < 3. The factor is (e (1/2 / sinh(1/2))^2)^Delta ~ 2.3^Delta, so this
  // only holds at order-one Delta.
  const auto g = BulkGeometry::non_rotating(1.0);
  const double z = crossover_separation(g);
  for (double delta : {0.5, 1.0}) {
    const double ratio = std::pow(z, 2.0 * delta) * two_point_correlator(g, delta, 0.0, z) / std::exp(-delta);
    CHECK(ratio < 3.0);
    CHECK(ratio > 1.0 / 3.0);
  }
}

TEST_CASE("wolf bound report") {
  const WolfBound a = wolf_bound_report(0.0, 0.0, 1.0, 1.0);
  CHECK(a.satisfied);
  const WolfBound b = wolf_bound_report(1.0, 1.0, 1.0, 1.0);
  CHECK(b.lhs == 1.0);
  CHECK(b.rhs == 0.5);
  CHECK(b.satisfied);
  const WolfBound c = wolf_bound_report(0.0, 0.1, 1.0, 1.0);
  CHECK(c.rhs == doctest::Approx(0.005));
  CHECK_FALSE(c.satisfied);
  CHECK(kind_of([] { wolf_bound_report(0.0, 0.1, 0.0, 1.0); }) == ErrorKind::DomainError);
}
