#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace holo {

/// Layered coarse-graining graph of a binary or ternary MERA on an open chain.
/// Level 0 holds the n_sites boundary sites; level k holds n_sites / branch^k
/// sites and site j at level k has parent j / branch at level k + 1. Within a
/// level, nearest neighbours are joined by a bond (the disentangler reach).
struct MeraNetwork {
  int branch = 2;
  std::int64_t n_sites = 2;
  int depth = 1;
  double bond_entropy = 1.0;

  std::int64_t level_size(int k) const;
  /// Width at which cones stop shrinking: 3 for binary, 2 for ternary.
  int width_floor() const { return branch == 2 ? 3 : 2; }
};

/// Throws BadBranch unless branch is 2 or 3, NotPowerOfBranch unless n_sites
/// is branch^depth with depth >= 1 and n_sites <= 2^24.
MeraNetwork build_network(std::int64_t n_sites, int branch, double bond_entropy = 1.0);

/// Closed interval of sites [lo, hi] at one level.
struct SiteInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t width() const { return hi - lo + 1; }
  bool intersects(const SiteInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool contains(const SiteInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool operator==(const SiteInterval&) const = default;
};

struct CausalCone {
  std::vector<SiteInterval> per_level;  // levels 0..depth
};

/// Propagates a block upward: [lo, hi] -> [(lo - 1) / b, (hi + 1) / b] (floor
/// division), clamped to the next level. Throws BlockOutOfRange.
CausalCone causal_cone(const MeraNetwork& net, SiteInterval block);

/// First level at which the two cones intersect, or nullopt when they only
/// meet at a level too small to hold two disjoint floor-width cones.
std::optional<int> cone_overlap_level(const MeraNetwork& net, SiteInterval a, SiteInterval b);

enum class Routing { Single, Connected, Disconnected };

struct CutResult {
  std::int64_t bond_count = 0;
  double length = 0.0;  // bond_count * bond_entropy
  std::vector<std::int64_t> per_level_bonds;
  Routing routing = Routing::Single;
  // Two-block candidates; -1 for a single block.
  std::int64_t connected_bonds = -1;
  std::int64_t disconnected_bonds = -1;
};

/// Fewest bonds whose removal separates the block's level-0 sites from the
/// rest of the boundary, found as a shortest path on the planar dual.
CutResult minimal_cut(const MeraNetwork& net, SiteInterval block);

/// Two disjoint blocks: min of the disconnected routing cut(A) + cut(B) and
/// the connected routing cut(A u gap u B) + cut(gap). Ties go to Connected.
CutResult minimal_cut(const MeraNetwork& net, SiteInterval a, SiteInterval b);

enum class Regime { Connected, Disconnected };

/// Connected iff log_b l >= log_b d, i.e. l >= d.
Regime regime_classify(std::int64_t l, std::int64_t d, int branch);

/// Two blocks of l sites separated by d sites, centred in the network.
std::pair<SiteInterval, SiteInterval> centred_blocks(const MeraNetwork& net, std::int64_t l,
                                                     std::int64_t d);
/// One block of l sites centred in the network.
SiteInterval centred_block(const MeraNetwork& net, std::int64_t l);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares y = slope * x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace holo
