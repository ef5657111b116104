#include "holo/commands.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "holo/error.hpp"
#include "holo/mera.hpp"
#include "holo/observables.hpp"

namespace holo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_number(v[i]);
  return s;
}

void common_meta(ScanResult& r, const std::string& command, const CommonOptions& o) {
  r.set_meta("tool", kToolVersion);
  r.set_meta("command", command);
  r.set_meta("geometry", o.geometry);
  r.set_meta("r_plus", format_number(o.r_plus));
  r.set_meta("r_minus", format_number(o.r_minus));
  r.set_meta("ads_radius", format_number(o.ads_radius));
  r.set_meta("uv_cutoff", format_number(o.uv_cutoff));
  if (o.central_charge) r.set_meta("central_charge", format_number(*o.central_charge));
  r.set_meta("sector", std::to_string(o.sector));
  r.set_meta("tol", format_number(o.tol));
  r.set_meta("log_grid", o.log_grid ? "true" : "false");
}

void grid_meta(ScanResult& r, const GridOptions& g, bool log) {
  r.set_meta("from", format_number(g.from));
  r.set_meta("to", format_number(g.to));
  r.set_meta("steps", std::to_string(g.steps));
  r.set_meta("spacing", log ? "log" : "linear");
}

void fill(ScanResult& r, std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn,
          unsigned threads) {
  for (auto& row : parallel_rows(n, fn, threads)) r.add_row(std::move(row));
}

}  // namespace

BulkGeometry make_geometry(const CommonOptions& o) {
  BulkGeometry g;
  if (o.geometry == "ads") {
    g = BulkGeometry::pure_ads(o.ads_radius, o.uv_cutoff);
  } else if (o.geometry == "btz") {
    g = BulkGeometry::non_rotating(o.r_plus, o.ads_radius, o.uv_cutoff);
  } else if (o.geometry == "btz-rot") {
    g = BulkGeometry::rotating(o.r_plus, o.r_minus, o.ads_radius, o.uv_cutoff);
  } else {
    usage("unknown geometry '" + o.geometry + "' (expected ads, btz or btz-rot)");
  }
  if (o.central_charge) g.set_central_charge(*o.central_charge);
  return g;
}

ScanResult cmd_geodesic(const GeodesicOptions& o) {
  const BulkGeometry g = make_geometry(o.common);
  const auto xs = Grid{o.grid.from, o.grid.to, o.grid.steps, o.common.log_grid}.points();
  ScanResult r;
  r.header = {"dx", "length"};
  common_meta(r, "geodesic", o.common);
  grid_meta(r, o.grid, o.common.log_grid);
  fill(r, xs.size(), [&](std::size_t i) { return std::vector<double>{xs[i], geodesic_length(g, 0.0, xs[i])}; },
       o.common.threads);
  return r;
}

ScanResult cmd_entropy(const EntropyOptions& o) {
  const BulkGeometry g = make_geometry(o.common);
  const auto xs = Grid{o.grid.from, o.grid.to, o.grid.steps, o.common.log_grid}.points();
  ScanResult r;
  r.header = {"l_A", "S"};
  common_meta(r, "entropy", o.common);
  r.set_meta("newton_constant", format_number(g.newton_constant));
  grid_meta(r, o.grid, o.common.log_grid);
  fill(r, xs.size(), [&](std::size_t i) { return std::vector<double>{xs[i], interval_entropy(g, 0.0, xs[i])}; },
       o.common.threads);
  return r;
}

ScanResult cmd_mi_scan(const MiScanOptions& o) {
  const bool by_x = o.x_from.has_value() || o.x_to.has_value();
  const bool by_d = o.d_from.has_value() || o.d_to.has_value();
  if (by_x && by_d) usage("give either a d range or an x range, not both");
  if (by_x && !(o.x_from && o.x_to)) usage("--x-from and --x-to go together");
  if (by_d && !(o.d_from && o.d_to)) usage("--d-from and --d-to go together");
  if (!(o.l > 0.0)) usage("--l must be positive");

  BulkGeometry g;
  if (o.tie_horizon) {
    g = BulkGeometry::with_beta(2.0 * std::numbers::pi * o.l, o.common.ads_radius, o.common.uv_cutoff);
    if (o.common.central_charge) g.set_central_charge(*o.common.central_charge);
  } else {
    g = make_geometry(o.common);
  }

  std::vector<double> ds;
  if (by_x) {
    if (!(*o.x_from > 0.0 && *o.x_from < 1.0 && *o.x_to > 0.0 && *o.x_to < 1.0))
      usage("x range must lie inside (0, 1)");
    for (double x : Grid{*o.x_from, *o.x_to, o.steps, o.common.log_grid}.points())
      ds.push_back(o.l * (1.0 / std::sqrt(x) - 1.0));
  } else {
    ds = Grid{o.d_from.value_or(0.01), o.d_to.value_or(2.0), o.steps, o.common.log_grid}.points();
  }

  ScanResult r;
  r.header = {"d", "x", "I_unclamped", "I", "phase_connected"};
  common_meta(r, "mi-scan", o.common);
  r.set_meta("l", format_number(o.l));
  r.set_meta("tie_horizon", o.tie_horizon ? "true" : "false");
  if (o.tie_horizon) r.set_meta("beta", format_number(2.0 * std::numbers::pi * o.l));
  r.set_meta("range", by_x ? "x" : "d");
  r.set_meta("from", format_number(by_x ? *o.x_from : o.d_from.value_or(0.01)));
  r.set_meta("to", format_number(by_x ? *o.x_to : o.d_to.value_or(2.0)));
  r.set_meta("steps", std::to_string(o.steps));
  fill(r, ds.size(),
       [&](std::size_t i) {
         const IntervalPair p = IntervalPair::from_size(0.0, o.l, ds[i]);
         const MiResult mi = mutual_information(g, p);
         return std::vector<double>{ds[i], p.cross_ratio(), mi.unclamped(), mi.value,
                                    mi.phase == MiPhase::Connected ? 1.0 : 0.0};
       },
       o.common.threads);
  return r;
}

ScanResult cmd_x0_scan(const X0ScanOptions& o, std::ostream& diag) {
  TorusModel model;
  if (o.model == "non-rotating") {
    model = TorusModel::NonRotating;
  } else if (o.model == "rotating") {
    model = TorusModel::Rotating;
  } else {
    usage("unknown model '" + o.model + "' (expected non-rotating or rotating)");
  }
  if (o.common.sector != 3 && o.common.sector != 4) usage("--sector must be 3 or 4");
  const double c = o.common.central_charge.value_or(o.c);
  const std::vector<double> taus =
      o.tau_values ? *o.tau_values : Grid{o.grid.from, o.grid.to, o.grid.steps, o.common.log_grid}.points();

  ScanResult r;
  r.header = {"tau_abs", "inv_tau_abs", "x0", "deficit", "bracketed"};
  r.set_meta("tool", kToolVersion);
  r.set_meta("command", "x0-scan");
  r.set_meta("model", o.model);
  r.set_meta("sector", std::to_string(o.common.sector));
  r.set_meta("central_charge", format_number(c));
  r.set_meta("tol", format_number(o.common.tol));
  r.set_meta("l_over_L", o.l_over_L ? format_number(*o.l_over_L) : "tied");
  r.set_meta("tau_abs", join(taus));

  std::vector<std::string> warnings(taus.size());
  fill(r, taus.size(),
       [&](std::size_t i) {
         const double tau = taus[i];
         try {
           const TransitionPoint tp = transition_point(model, tau, o.common.sector, c, o.l_over_L, o.common.tol);
           return std::vector<double>{tau, 1.0 / tau, tp.x0, tp.deficit, 1.0};
         } catch (const Error& e) {
           if (e.kind() != ErrorKind::NoBracket && e.kind() != ErrorKind::NonConvergent) throw;
           warnings[i] = e.what();
           return std::vector<double>{tau, 1.0 / tau, kNaN, kNaN, 0.0};
         }
       },
       o.common.threads);
  for (const auto& w : warnings)
    if (!w.empty()) diag << "warning: " << w << '\n';
  return r;
}

ScanResult cmd_correlator(const CorrelatorOptions& o) {
  const BulkGeometry g = make_geometry(o.common);
  if (!(o.delta > 0.0)) usage("--delta must be positive");
  // Separations are always log-spaced here.
  const auto xs = Grid{o.grid.from, o.grid.to, o.grid.steps, true}.points();
  ScanResult r;
  r.header = {"dx", "corr", "log_slope", "local_power"};
  common_meta(r, "correlator", o.common);
  r.set_meta("delta", format_number(o.delta));
  grid_meta(r, o.grid, true);
  fill(r, xs.size(),
       [&](std::size_t i) {
         const double dx = xs[i];
         const double h = 1e-4 * dx;
         const double slope = (log_two_point_correlator(g, o.delta, 0.0, dx + h) -
                               log_two_point_correlator(g, o.delta, 0.0, dx - h)) /
                              (2.0 * h);
         return std::vector<double>{dx, two_point_correlator(g, o.delta, 0.0, dx), slope, slope * dx};
       },
       o.common.threads);
  return r;
}

ScanResult cmd_mera(const MeraOptions& o) {
  const MeraNetwork net = build_network(o.n_sites, o.branch, o.bond_entropy);
  ScanResult r;
  r.set_meta("tool", kToolVersion);
  r.set_meta("command", "mera");
  r.set_meta("branch", std::to_string(o.branch));
  r.set_meta("n_sites", std::to_string(o.n_sites));
  r.set_meta("bond_entropy", format_number(o.bond_entropy));
  r.set_meta("l_values", join(o.l_values));
  if (o.single_block) {
    r.header = {"l", "log_b_l", "cut_bonds", "cut_length"};
    r.set_meta("mode", "single-block");
    const double lb = std::log(static_cast<double>(o.branch));
    fill(r, o.l_values.size(),
         [&](std::size_t i) {
           const std::int64_t l = o.l_values[i];
           const CutResult c = minimal_cut(net, centred_block(net, l));
           return std::vector<double>{static_cast<double>(l), std::log(static_cast<double>(l)) / lb,
                                      static_cast<double>(c.bond_count), c.length};
         },
         o.threads);
    if (r.rows.size() >= 2) {
      std::vector<double> x, y;
      for (const auto& row : r.rows) {
        x.push_back(row[1]);
        y.push_back(row[3]);
      }
      const LineFit f = fit_line(x, y);
      r.set_meta("fit_slope", format_number(f.slope));
      r.set_meta("fit_intercept", format_number(f.intercept));
      r.set_meta("fit_r2", format_number(f.r_squared));
    }
    return r;
  }

  r.header = {"l", "d", "overlap_level", "cut_connected", "cut_disconnected", "regime_connected",
              "routing_connected"};
  r.set_meta("mode", "two-block");
  r.set_meta("d_values", join(o.d_values));
  const std::size_t nd = o.d_values.size();
  fill(r, o.l_values.size() * nd,
       [&](std::size_t i) {
         const std::int64_t l = o.l_values[i / nd];
         const std::int64_t d = o.d_values[i % nd];
         const auto [a, b] = centred_blocks(net, l, d);
         const auto level = cone_overlap_level(net, a, b);
         const CutResult c = minimal_cut(net, a, b);
         return std::vector<double>{static_cast<double>(l),
                                    static_cast<double>(d),
                                    level ? static_cast<double>(*level) : -1.0,
                                    static_cast<double>(c.connected_bonds) * o.bond_entropy,
                                    static_cast<double>(c.disconnected_bonds) * o.bond_entropy,
                                    regime_classify(l, d, o.branch) == Regime::Connected ? 1.0 : 0.0,
                                    c.routing == Routing::Connected ? 1.0 : 0.0};
       },
       o.threads);
  return r;
}

}  // namespace holo
