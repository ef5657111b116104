#include "holo/mera.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "holo/error.hpp"

namespace holo {

namespace {

constexpr std::int64_t kMaxSites = std::int64_t{1} << 24;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_block(const MeraNetwork& net, SiteInterval block) {
  if (block.lo < 0 || block.hi >= net.n_sites || block.lo > block.hi) {
    std::ostringstream os;
    os << "block [" << block.lo << ", " << block.hi << "] not inside [0, " << net.n_sites << ")";
    throw Error(ErrorKind::BlockOutOfRange, os.str());
  }
}

void check_disjoint(SiteInterval a, SiteInterval b) {
  if (a.intersects(b)) throw Error(ErrorKind::InvalidArgument, "blocks must be disjoint");
}

// Dual faces: F(k, j) is the gap between sites j and j + 1 of level k, bounded
// below by their horizontal bond and above by the level-(k+1) bond between
// their parents when they differ. kOut is the outer face.
using Face = std::uint64_t;
constexpr Face kOut = ~Face{0};

Face face(int k, std::int64_t j) { return (static_cast<Face>(k) << 32) | static_cast<Face>(j); }
int face_level(Face f) { return static_cast<int>(f >> 32); }
std::int64_t face_index(Face f) { return static_cast<std::int64_t>(f & 0xffffffffu); }

struct Visit {
  Face parent;
  int bond_level;  // level of the bond crossed to get here
};

CutResult single_cut(const MeraNetwork& net, SiteInterval block) {
  CutResult r;
  r.per_level_bonds.assign(static_cast<std::size_t>(net.depth) + 1, 0);
  const std::int64_t n = net.n_sites;
  const std::int64_t u = block.lo, v = block.hi;
  if (u == 0 && v == n - 1) return r;

  const int top = net.depth;  // faces live on levels 0..top-1
  auto neighbours = [&](Face f, auto&& emit) {
    if (f == kOut) {
      for (int k = 0; k < top; ++k) {
        emit(face(k, 0), k);
        emit(face(k, net.level_size(k) - 2), k);
      }
      return;
    }
    const int k = face_level(f);
    const std::int64_t j = face_index(f);
    const std::int64_t nk = net.level_size(k);
    // Sideways: through the vertical bond of site j or j + 1.
    emit(j >= 1 ? face(k, j - 1) : kOut, k);
    emit(j + 1 <= nk - 2 ? face(k, j + 1) : kOut, k);
    // Up through the bond joining the two parents.
    if ((j + 1) % net.branch == 0 && k + 1 < top) emit(face(k + 1, j / net.branch), k + 1);
    // Down through this face's own floor.
    if (k >= 1) emit(face(k - 1, net.branch * j + net.branch - 1), k);
  };

  const Face src = u > 0 ? face(0, u - 1) : kOut;
  const Face dst = v < n - 1 ? face(0, v) : kOut;
  std::int64_t base = 0;
  if (u > 0) {
    ++base;
    ++r.per_level_bonds[0];
  }
  if (v < n - 1) {
    ++base;
    ++r.per_level_bonds[0];
  }

  std::unordered_map<Face, Visit> seen;
  std::deque<std::pair<Face, std::int64_t>> queue;
  seen.emplace(src, Visit{src, -1});
  queue.emplace_back(src, 0);
  std::int64_t dist = -1;
  while (!queue.empty()) {
    const auto [f, df] = queue.front();
    queue.pop_front();
    if (f == dst) {
      dist = df;
      break;
    }
    neighbours(f, [&](Face g, int level) {
      if (g != kOut && net.level_size(face_level(g)) < 2) return;
      if (seen.emplace(g, Visit{f, level}).second) queue.emplace_back(g, df + 1);
    });
  }
  // The dual is connected through the outer face, so dst is always reached.
  for (Face f = dst; f != src;) {
    const Visit& vis = seen.at(f);
    ++r.per_level_bonds[static_cast<std::size_t>(vis.bond_level)];
    f = vis.parent;
  }
  r.bond_count = base + dist;
  r.length = static_cast<double>(r.bond_count) * net.bond_entropy;
  return r;
}

CutResult combine(const MeraNetwork& net, const CutResult& a, const CutResult& b) {
  CutResult r = a;
  r.bond_count = a.bond_count + b.bond_count;
  for (std::size_t i = 0; i < r.per_level_bonds.size(); ++i) r.per_level_bonds[i] += b.per_level_bonds[i];
  r.length = static_cast<double>(r.bond_count) * net.bond_entropy;
  return r;
}

}  // namespace

std::int64_t MeraNetwork::level_size(int k) const {
  std::int64_t s = n_sites;
  for (int i = 0; i < k; ++i) s /= branch;
  return s;
}

MeraNetwork build_network(std::int64_t n_sites, int branch, double bond_entropy) {
  if (branch != 2 && branch != 3) {
    throw Error(ErrorKind::BadBranch, "branch must be 2 or 3, got " + std::to_string(branch));
  }
  if (!(bond_entropy > 0.0)) throw Error(ErrorKind::InvalidArgument, "bond entropy must be positive");
  int depth = 0;
  std::int64_t s = 1;
  while (s < n_sites && s <= kMaxSites) {
    s *= branch;
    ++depth;
  }
  if (n_sites < branch || s != n_sites || n_sites > kMaxSites) {
    std::ostringstream os;
    os << n_sites << " is not a power of " << branch << " in [" << branch << ", 2^24]";
    throw Error(ErrorKind::NotPowerOfBranch, os.str());
  }
  return {branch, n_sites, depth, bond_entropy};
}

CausalCone causal_cone(const MeraNetwork& net, SiteInterval block) {
  check_block(net, block);
  CausalCone c;
  c.per_level.reserve(static_cast<std::size_t>(net.depth) + 1);
  c.per_level.push_back(block);
  SiteInterval cur = block;
  for (int k = 1; k <= net.depth; ++k) {
    const std::int64_t nk = net.level_size(k);
    cur.lo = std::max<std::int64_t>(0, floor_div(cur.lo - 1, net.branch));
    cur.hi = std::min<std::int64_t>(nk - 1, floor_div(cur.hi + 1, net.branch));
    c.per_level.push_back(cur);
  }
  return c;
}

std::optional<int> cone_overlap_level(const MeraNetwork& net, SiteInterval a, SiteInterval b) {
  check_block(net, a);
  check_block(net, b);
  check_disjoint(a, b);
  const CausalCone ca = causal_cone(net, a);
  const CausalCone cb = causal_cone(net, b);
  for (int k = 0; k <= net.depth; ++k) {
    if (ca.per_level[k].intersects(cb.per_level[k])) {
      if (net.level_size(k) < 2 * net.width_floor()) return std::nullopt;
      return k;
    }
  }
  return std::nullopt;
}

CutResult minimal_cut(const MeraNetwork& net, SiteInterval block) {
  check_block(net, block);
  return single_cut(net, block);
}

CutResult minimal_cut(const MeraNetwork& net, SiteInterval a, SiteInterval b) {
  check_block(net, a);
  check_block(net, b);
  check_disjoint(a, b);
  if (b.lo < a.lo) std::swap(a, b);
  const CutResult dis = combine(net, single_cut(net, a), single_cut(net, b));
  CutResult con = single_cut(net, {a.lo, b.hi});
  if (b.lo > a.hi + 1) con = combine(net, con, single_cut(net, {a.hi + 1, b.lo - 1}));

  CutResult r = con.bond_count <= dis.bond_count ? con : dis;
  r.routing = con.bond_count <= dis.bond_count ? Routing::Connected : Routing::Disconnected;
  r.connected_bonds = con.bond_count;
  r.disconnected_bonds = dis.bond_count;
  return r;
}

Regime regime_classify(std::int64_t l, std::int64_t d, int branch) {
  if (branch != 2 && branch != 3) {
    throw Error(ErrorKind::BadBranch, "branch must be 2 or 3, got " + std::to_string(branch));
  }
  if (l < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "l and d must be positive");
  // log_b is monotone, so w_H >= w_* reduces to l >= d.
  return l >= d ? Regime::Connected : Regime::Disconnected;
}

std::pair<SiteInterval, SiteInterval> centred_blocks(const MeraNetwork& net, std::int64_t l,
                                                     std::int64_t d) {
  const std::int64_t span = 2 * l + d;
  if (l < 1 || d < 1 || span > net.n_sites)
    throw Error(ErrorKind::BlockOutOfRange, "blocks do not fit in the network");
  const std::int64_t start = (net.n_sites - span) / 2;
  return {{start, start + l - 1}, {start + l + d, start + 2 * l + d - 1}};
}

SiteInterval centred_block(const MeraNetwork& net, std::int64_t l) {
  if (l < 1 || l > net.n_sites) throw Error(ErrorKind::BlockOutOfRange, "block does not fit in the network");
  const std::int64_t start = (net.n_sites - l) / 2;
  return {start, start + l - 1};
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "fit needs two or more paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::InvalidArgument, "fit needs distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace holo
