// holoent: parameter scans over holographic entanglement observables, CSV out.
//
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "holo/commands.hpp"
#include "holo/error.hpp"

namespace {

struct Output {
  std::string path;
  bool header_comments = false;
};

void add_common(CLI::App* sub, holo::CommonOptions& o, Output& out) {
  sub->add_option("--geometry", o.geometry, "Bulk background")
      ->check(CLI::IsMember({"ads", "btz", "btz-rot"}))
      ->capture_default_str();
  sub->add_option("--r-plus", o.r_plus, "Outer horizon radius")->capture_default_str();
  sub->add_option("--r-minus", o.r_minus, "Inner horizon radius")->capture_default_str();
  sub->add_option("--ads-radius", o.ads_radius, "AdS radius")->capture_default_str();
  sub->add_option("--uv-cutoff", o.uv_cutoff, "UV cutoff epsilon")->capture_default_str();
  sub->add_option("--central-charge", o.central_charge, "Central charge (overrides G_N)");
  sub->add_option("--sector", o.sector, "Theta sector")->check(CLI::IsMember({3, 4}))->capture_default_str();
  sub->add_option("--tol", o.tol, "Theta series tolerance")->capture_default_str();
  sub->add_flag("--log-grid", o.log_grid, "Logarithmic grid spacing");
  sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  sub->add_option("--out", out.path, "Output file (default stdout)");
  sub->add_flag("--header-comments", out.header_comments, "Prefix metadata as #key=value lines");
}

void add_grid(CLI::App* sub, holo::GridOptions& g) {
  sub->add_option("--from", g.from, "First grid value")->capture_default_str();
  sub->add_option("--to", g.to, "Last grid value")->capture_default_str();
  sub->add_option("--steps", g.steps, "Number of grid points")->check(CLI::PositiveNumber)->capture_default_str();
}

int emit(const holo::ScanResult& r, const Output& out) {
  if (out.path.empty()) {
    holo::write_csv(std::cout, r, out.header_comments);
    return 0;
  }
  std::ofstream f(out.path);
  if (!f) {
    std::cerr << "error: cannot open " << out.path << " for writing\n";
    return 1;
  }
  holo::write_csv(f, r, out.header_comments);
  return f ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holographic entanglement scans (CSV output)", "holoent"};
  app.set_version_flag("--version", holo::kToolVersion);
  app.require_subcommand(1);

  Output out;

  holo::GeodesicOptions geo;
  auto* geodesic = app.add_subcommand("geodesic", "Geodesic length against separation");
  add_common(geodesic, geo.common, out);
  add_grid(geodesic, geo.grid);

  holo::EntropyOptions ent;
  auto* entropy = app.add_subcommand("entropy", "Single-interval entanglement entropy");
  add_common(entropy, ent.common, out);
  add_grid(entropy, ent.grid);

  holo::MiScanOptions mi;
  auto* mi_scan = app.add_subcommand("mi-scan", "Mutual information of two equal intervals");
  add_common(mi_scan, mi.common, out);
  mi_scan->add_option("--l", mi.l, "Interval size")->capture_default_str();
  mi_scan->add_option("--d-from", mi.d_from, "First separation");
  mi_scan->add_option("--d-to", mi.d_to, "Last separation");
  mi_scan->add_option("--x-from", mi.x_from, "First cross ratio");
  mi_scan->add_option("--x-to", mi.x_to, "Last cross ratio");
  mi_scan->add_option("--steps", mi.steps, "Number of points")->check(CLI::PositiveNumber)->capture_default_str();
  mi_scan->add_flag("--tie-horizon", mi.tie_horizon, "Non-rotating BTZ with beta = 2 pi l");

  holo::X0ScanOptions x0;
  auto* x0_scan = app.add_subcommand("x0-scan", "Finite-size transition point against tau");
  add_common(x0_scan, x0.common, out);
  add_grid(x0_scan, x0.grid);
  x0_scan->add_option("--model", x0.model, "Torus model")
      ->check(CLI::IsMember({"non-rotating", "rotating"}))
      ->capture_default_str();
  x0_scan->add_option("--tau", x0.tau_values, "Explicit tau values (overrides the grid)")->delimiter(',');
  x0_scan->add_option("--l-over-L", x0.l_over_L, "Fixed interval size over ring length");

  holo::CorrelatorOptions corr;
  auto* correlator = app.add_subcommand("correlator", "Boundary two-point function");
  add_common(correlator, corr.common, out);
  add_grid(correlator, corr.grid);
  correlator->add_option("--delta", corr.delta, "Operator dimension")->capture_default_str();

  holo::MeraOptions mera;
  auto* mera_cmd = app.add_subcommand("mera", "MERA cone overlap and minimal cuts");
  mera_cmd->add_option("--branch", mera.branch, "2 or 3")->capture_default_str();
  mera_cmd->add_option("--n-sites", mera.n_sites, "Boundary sites")->capture_default_str();
  mera_cmd->add_option("--l", mera.l_values, "Block sizes")->delimiter(',');
  mera_cmd->add_option("--d", mera.d_values, "Separations")->delimiter(',');
  mera_cmd->add_flag("--single-block", mera.single_block, "Single-block cut scaling");
  mera_cmd->add_option("--bond-entropy", mera.bond_entropy, "Entropy per bond")->capture_default_str();
  mera_cmd->add_option("--threads", mera.threads, "Worker threads (0 = all cores)");
  mera_cmd->add_option("--out", out.path, "Output file (default stdout)");
  mera_cmd->add_flag("--header-comments", out.header_comments, "Prefix metadata as #key=value lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (geodesic->parsed()) return emit(holo::cmd_geodesic(geo), out);
    if (entropy->parsed()) return emit(holo::cmd_entropy(ent), out);
    if (mi_scan->parsed()) return emit(holo::cmd_mi_scan(mi), out);
    if (correlator->parsed()) return emit(holo::cmd_correlator(corr), out);
    if (mera_cmd->parsed()) return emit(holo::cmd_mera(mera), out);
    if (x0_scan->parsed()) {
      const holo::ScanResult r = holo::cmd_x0_scan(x0, std::cerr);
      const int status = emit(r, out);
      const std::size_t col = r.column("bracketed");
      bool any = false;
      for (const auto& row : r.rows) any = any || row[col] == 1.0;
      if (!any) {
        std::cerr << "error: no tau value produced a transition point\n";
        return 1;
      }
      return status;
    }
  } catch (const holo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    // Bad flag values surface as InvalidArgument from the library.
    return e.kind() == holo::ErrorKind::InvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
