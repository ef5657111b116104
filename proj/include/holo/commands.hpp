#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holo/bulk_geometry.hpp"
#include "holo/scan.hpp"

namespace holo {

inline constexpr const char* kToolVersion = "holoent 1.0.0";

/// Flags shared by every subcommand.
struct CommonOptions {
  std::string geometry = "ads";  // ads | btz | btz-rot
  double r_plus = 1.0;
  double r_minus = 0.0;
  double ads_radius = 1.0;
  double uv_cutoff = 1e-3;
  std::optional<double> central_charge;
  int sector = 3;
  double tol = 1e-12;
  bool log_grid = false;
  unsigned threads = 0;
};

BulkGeometry make_geometry(const CommonOptions& o);

struct GridOptions {
  double from = 0.1;
  double to = 5.0;
  int steps = 50;
};

struct GeodesicOptions {
  CommonOptions common;
  GridOptions grid;
};

struct EntropyOptions {
  CommonOptions common;
  GridOptions grid;
};

struct MiScanOptions {
  CommonOptions common;
  double l = 1.0;
  std::optional<double> d_from, d_to, x_from, x_to;
  int steps = 50;
  /// Non-rotating BTZ with beta = 2 pi l, overriding the geometry flags.
  bool tie_horizon = false;
};

struct X0ScanOptions {
  CommonOptions common;
  std::string model = "non-rotating";  // non-rotating | rotating
  GridOptions grid{0.5, 50.0, 7};
  std::optional<std::vector<double>> tau_values;
  std::optional<double> l_over_L;
  double c = 3.0;
};

struct CorrelatorOptions {
  CommonOptions common;
  double delta = 1.0;
  GridOptions grid{1e-3, 10.0, 60};
};

struct MeraOptions {
  int branch = 2;
  std::int64_t n_sites = 1 << 16;
  std::vector<std::int64_t> l_values{2, 4, 8, 16, 32, 64, 128, 256};
  std::vector<std::int64_t> d_values{2, 4, 8, 16, 32, 64, 128, 256};
  bool single_block = false;
  double bond_entropy = 1.0;
  unsigned threads = 0;
};

/// Columns: dx, length.
ScanResult cmd_geodesic(const GeodesicOptions& o);
/// Columns: l_A, S.
ScanResult cmd_entropy(const EntropyOptions& o);
/// Columns: d, x, I_unclamped, I, phase_connected.
ScanResult cmd_mi_scan(const MiScanOptions& o);
/// Columns: tau_abs, inv_tau_abs, x0, deficit, bracketed. Rows without a
/// sign change carry NaN and a warning on `diag`.
ScanResult cmd_x0_scan(const X0ScanOptions& o, std::ostream& diag);
/// Columns: dx, corr, log_slope, local_power (log-spaced separations).
ScanResult cmd_correlator(const CorrelatorOptions& o);
/// Columns: l, d, overlap_level (-1 = none), cut_connected, cut_disconnected,
/// regime_connected, routing_connected; or l, log2_l, cut_bonds, cut_length
/// in single-block mode with the log fit in the metadata.
ScanResult cmd_mera(const MeraOptions& o);

}  // namespace holo
