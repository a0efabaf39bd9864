#include "tangles/surface.hpp"

#include <algorithm>
#include <numeric>

#include "tangles/errors.hpp"
#include "tangles/slope.hpp"

namespace tangles {

namespace {

// Plain positive-denominator fraction for the billiard arithmetic.
struct Frac {
  Integer n, d;

  Frac(Integer nn, Integer dd) : n(std::move(nn)), d(std::move(dd)) {
    if (d <= 0) throw std::logic_error("Frac denominator");
    Integer g = boost::multiprecision::gcd(n < 0 ? Integer(-n) : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  // value mod 2, in [0, 2)
  Frac mod2() const {
    Integer m = n % (2 * d);
    if (m < 0) m += 2 * d;
    return Frac(m, d);
  }

  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
};

// Boundary curves of a tangle surface, modelled as billiard lines of
// slope p/q on the pillowcase (the double of the unit square whose
// corners are the tangle endpoints).  A curve of slope p/q meets the east
// or west edge of the square in |q| points; the surviving boundary arcs
// of a tangle sum pair up consecutive edge hits along each curve.
struct EdgeHit {
  Frac height;     // fold of y into [0,1]
  bool in_front;   // sheet of the incoming flag
  int line;        // which parallel curve
  int index;       // hit counter along the curve
};

// Hits of `lines` parallel slope p/q curves on the given square edge
// (east: x odd; west: x even), ordered along each curve.
std::vector<EdgeHit> edge_hits(const Integer& p, const Integer& q,
                               long long lines, bool east_edge) {
  std::vector<EdgeHit> hits;
  Integer denom = 8 * q * Integer(lines + 2);
  for (long long j = 0; j < lines; ++j) {
    Frac offset(2 * Integer(j) + 1, denom);
    for (Integer t = east_edge ? 1 : 0; t < 2 * q; t += 2) {
      // y = offset + p*t/q at the hit
      Frac y = Frac(offset.n * q + p * t * offset.d, offset.d * q).mod2();
      if (y.n == 0 || y.n == y.d || y.n == 2 * y.d)
        throw std::logic_error("billiard line through a corner");
      bool below_one = y.n < y.d;
      Frac h = below_one ? y : Frac(2 * y.d - y.n, y.d);
      // east edge: incoming flag on the front sheet iff y < 1;
      // west edge: incoming flag on the back sheet iff y < 1
      bool in_front = east_edge ? below_one : !below_one;
      hits.push_back({h, in_front, static_cast<int>(j),
                      static_cast<int>((t - (east_edge ? 1 : 0)) / 2)});
    }
  }
  return hits;
}

struct RankedSide {
  std::vector<int> rank_of;     // per (line, index): rank in height order
  std::vector<int> line_of;     // per rank
  std::vector<char> in_front;   // per (line, index)
  long long hits_per_line = 0;
};

RankedSide rank_side(const std::vector<EdgeHit>& hits, long long lines) {
  RankedSide side;
  side.hits_per_line = static_cast<long long>(hits.size()) / lines;
  std::vector<int> order(hits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (hits[a].height == hits[b].height)
      throw std::logic_error("coincident billiard edge hits");
    return hits[a].height < hits[b].height;
  });
  side.rank_of.assign(hits.size(), -1);
  side.line_of.assign(hits.size(), -1);
  side.in_front.assign(hits.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const EdgeHit& h = hits[order[r]];
    int key = static_cast<int>(h.line * side.hits_per_line + h.index);
    side.rank_of[key] = static_cast<int>(r);
    side.line_of[r] = h.line;
    side.in_front[key] = h.in_front;
  }
  return side;
}

struct UnionFind {
  std::vector<int> root;
  explicit UnionFind(int n) : root(n) { std::iota(root.begin(), root.end(), 0); }
  int find(int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  }
  void unite(int a, int b) { root[find(a)] = find(b); }
  int count() {
    int c = 0;
    for (std::size_t i = 0; i < root.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

constexpr long long kArcLimit = 200000;

}  // namespace

Integer arcs_in_gluing_disk(const ExtendedRational& s) {
  return s.den();
}

GlueTrace trace_glued_boundary(const ExtendedRational& s1, long long circles1,
                               long long copies1, const ExtendedRational& s2,
                               long long circles2, long long copies2) {
  if (s1.is_infinite() || s2.is_infinite())
    throw std::logic_error("loop gluing has no arc trace");
  long long q1 = static_cast<long long>(s1.den());
  long long q2 = static_cast<long long>(s2.den());
  long long n = circles1 * q1;
  if (n != circles2 * q2) throw std::logic_error("gluing arc totals differ");
  if (n > kArcLimit) throw ResourceLimit("gluing trace too large");

  std::vector<EdgeHit> h1 = edge_hits(s1.num(), s1.den(), circles1, true);
  std::vector<EdgeHit> h2 = edge_hits(s2.num(), s2.den(), circles2, false);
  RankedSide side1 = rank_side(h1, circles1);
  RankedSide side2 = rank_side(h2, circles2);

  // nodes: (rank, sheet); the boundary graph has one side-1 arc and one
  // side-2 arc at every node
  UnionFind boundary(static_cast<int>(2 * n));
  auto node = [&](int rank, bool front) { return 2 * rank + (front ? 0 : 1); };

  auto add_side = [&](const RankedSide& side, long long lines) {
    long long per = side.hits_per_line;
    for (long long j = 0; j < lines; ++j) {
      for (long long i = 0; i < per; ++i) {
        int key = static_cast<int>(j * per + i);
        int key_next = static_cast<int>(j * per + (i + 1) % per);
        // outgoing flag of hit i joins the incoming flag of hit i+1;
        // flags at one hit sit on opposite sheets
        bool out_front = !side.in_front[key];
        bool next_in_front = side.in_front[key_next] != 0;
        boundary.unite(node(side.rank_of[key], out_front),
                       node(side.rank_of[key_next], next_in_front));
      }
    }
  };
  add_side(side1, circles1);
  add_side(side2, circles2);

  GlueTrace out;
  out.boundary = boundary.count();

  // connectivity of the glued surface: copies joined through shared arcs
  UnionFind copies(static_cast<int>(copies1 + copies2));
  for (long long r = 0; r < n; ++r) {
    int c1 = side1.line_of[r] % copies1;
    int c2 = side2.line_of[r] % copies2;
    copies.unite(static_cast<int>(c1), static_cast<int>(copies1 + c2));
  }
  out.connected = copies.count() == 1;
  return out;
}

namespace {

struct SurfaceCtx {
  std::vector<std::string> warnings;
};

SurfaceData disk(const ExtendedRational& s) {
  return {Integer(1), Integer(1), s, Integer(0)};
}

SurfaceData glue_sum(const SurfaceData& a, const SurfaceData& b, SurfaceCtx& ctx) {
  if (a.boundary_slope.is_infinite() || b.boundary_slope.is_infinite()) {
    // A slope-infinity piece meets the gluing disk in loops parallel to
    // its boundary; the essential surface of the sum is that piece alone.
    // With both slopes infinite the sum is closed and the left piece
    // still carries the unique with-boundary surface (this case is only
    // reachable through the canonical Q_m chain).
    const SurfaceData& keep = a.boundary_slope.is_infinite() ? a : b;
    return {keep.euler, keep.boundary_count, ExtendedRational::infinity(),
            keep.genus};
  }

  Integer alpha1 = a.boundary_count * a.boundary_slope.den();
  Integer alpha2 = b.boundary_count * b.boundary_slope.den();
  Integer base = boost::multiprecision::lcm(alpha1, alpha2);
  ExtendedRational total = er_add(a.boundary_slope, b.boundary_slope);

  struct Candidate {
    Integer euler, boundary, genus;
    int k;
  };
  std::vector<Candidate> found;
  for (int k = 1; k <= 4; ++k) {
    Integer n = base * k;
    if (n > kArcLimit) throw ResourceLimit("gluing requires too many arcs");
    Integer m1 = n / alpha1;
    Integer m2 = n / alpha2;
    GlueTrace trace = trace_glued_boundary(
        a.boundary_slope, static_cast<long long>(m1 * a.boundary_count),
        static_cast<long long>(m1), b.boundary_slope,
        static_cast<long long>(m2 * b.boundary_count),
        static_cast<long long>(m2));
    if (!trace.connected) continue;
    Integer euler = m1 * a.euler + m2 * b.euler - n;
    Integer boundary = trace.boundary;
    Integer two_genus = 2 - euler - boundary;
    if (two_genus < 0 || boost::multiprecision::bit_test(two_genus, 0))
      throw std::logic_error("traced boundary breaks genus integrality");
    found.push_back({euler, boundary, two_genus / 2, k});
    if (k == 1) break;  // the lcm-minimal parallelism is connected
  }
  if (found.empty())
    throw Disconnected("no connected parallelism with multiplier <= 4");
  const Candidate* best = &found.front();
  for (const Candidate& c : found)
    if (c.genus < best->genus) best = &c;
  if (best->k > 1)
    ctx.warnings.push_back("parallelism multiplier " + std::to_string(best->k) +
                           " used at a sum node");
  return {best->euler, best->boundary, total, best->genus};
}

SurfaceData recurse(const ExprPtr& e, SurfaceCtx& ctx) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
      return disk(continued_fraction_value(e->coeffs()));
    case ExprKind::q_loop: {
      // canonical decomposition: rotation of a sum of m+1 slope-infinity
      // rational tangles
      SurfaceData v = disk(ExtendedRational::infinity());
      SurfaceData acc = v;
      for (long long i = 0; i < e->loop_count(); ++i) acc = glue_sum(acc, v, ctx);
      acc.boundary_slope = er_rotate(acc.boundary_slope);
      return acc;
    }
    case ExprKind::sum:
      return glue_sum(recurse(e->left(), ctx), recurse(e->right(), ctx), ctx);
    case ExprKind::rotate: {
      SurfaceData s = recurse(e->inner(), ctx);
      s.boundary_slope = er_rotate(s.boundary_slope);
      return s;
    }
    case ExprKind::reflect: {
      SurfaceData s = recurse(e->inner(), ctx);
      s.boundary_slope = er_neg(s.boundary_slope);
      return s;
    }
    case ExprKind::product:
      throw std::logic_error("product after expansion");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SurfaceResult surface_of_detailed(const ExprPtr& e) {
  ExtendedRational s = slope(e);  // propagates IndefiniteProduct
  ExprPtr x = expand_products(e);
  std::vector<TreePath> closed = find_closed_subtangles(x);
  if (!closed.empty())
    throw ClosedSubtangle("closed sub-tangle at " + closed.front().str());

  SurfaceCtx ctx;
  SurfaceResult out;
  out.data = recurse(x, ctx);
  out.warnings = std::move(ctx.warnings);
  if (!(out.data.boundary_slope == s))
    throw std::logic_error("surface boundary slope disagrees with the slope map");
  return out;
}

SurfaceData surface_of(const ExprPtr& e) { return surface_of_detailed(e).data; }

Integer genus(const ExprPtr& e) { return surface_of(e).genus; }

}  // namespace tangles
