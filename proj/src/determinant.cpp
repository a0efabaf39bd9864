#include "tangles/determinant.hpp"

#include <array>
#include <numeric>

#include "tangles/errors.hpp"
#include "tangles/slope.hpp"

namespace tangles {

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Fraction-free Bareiss elimination; exact |det| over the integers.
Integer bareiss_abs_det(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t swap_row = i + 1;
      while (swap_row < n && m[swap_row][i] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[i], m[swap_row]);
    }
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k)
        m[j][k] = (m[j][k] * m[i][i] - m[j][i] * m[i][k]) / prev;
    prev = m[i][i];
  }
  return abs_int(m[n - 1][n - 1]);
}

// Arithmetic in Z[zeta_8], zeta^4 = -1.
struct Zeta8 {
  std::array<Integer, 4> c{};

  static Zeta8 zero() { return {}; }
  static Zeta8 one() {
    Zeta8 z;
    z.c[0] = 1;
    return z;
  }
  // zeta^k for any integer k
  static Zeta8 power(long long k) {
    long long r = ((k % 8) + 8) % 8;
    Zeta8 z;
    if (r < 4)
      z.c[r] = 1;
    else
      z.c[r - 4] = -1;
    return z;
  }

  Zeta8& operator+=(const Zeta8& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }

  Zeta8 conj() const {
    // zeta -> zeta^{-1}: 1 -> 1, zeta -> -zeta^3, zeta^2 -> -zeta^2,
    // zeta^3 -> -zeta
    Zeta8 z;
    z.c[0] = c[0];
    z.c[1] = -c[3];
    z.c[2] = -c[2];
    z.c[3] = -c[1];
    return z;
  }

  Zeta8 operator*(const Zeta8& o) const {
    Zeta8 z;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int k = i + j;
        Integer term = c[i] * o.c[j];
        if (k >= 4) {
          k -= 4;
          term = -term;
        }
        z.c[k] += term;
      }
    return z;
  }
};

Integer isqrt_exact(const Integer& v) {
  Integer r = boost::multiprecision::sqrt(v);
  if (r * r != v) throw std::logic_error("bracket norm is not a perfect square");
  return r;
}

struct Checkerboard {
  FaceStructure faces;
  std::vector<char> color;  // per face
};

Checkerboard checkerboard(const LinkDiagram& d) {
  Checkerboard cb;
  cb.faces = trace_faces(d);
  long long V = static_cast<long long>(d.xings.size());
  long long E = 2 * V;
  long long F = cb.faces.count;
  if (V - E + F != 2) throw std::logic_error("shadow is not a sphere map");

  // adjacency across arcs; two-color by BFS
  cb.color.assign(cb.faces.count, 2);
  std::vector<std::vector<int>> adj(cb.faces.count);
  for (std::size_t x = 0; x < d.partner.size(); ++x) {
    int f1 = cb.faces.face_of[x];
    int f2 = cb.faces.face_of[d.partner[x]];
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }
  std::vector<int> queue = {0};
  cb.color[0] = 0;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int g : adj[f]) {
      if (cb.color[g] == 2) {
        cb.color[g] = 1 - cb.color[f];
        queue.push_back(g);
      } else if (cb.color[g] == cb.color[f]) {
        throw std::logic_error("shadow faces admit no checkerboard coloring");
      }
    }
  }
  return cb;
}

// Face at the corner between slots s and s+1 of crossing c.
int corner_face(const FaceStructure& fs, int c, int s) {
  return fs.face_of[node_id(c, (s + 1) % 4)];
}

}  // namespace

LinkDiagram numerator_closure(const ExprPtr& e) {
  return close_fragment(fragment_of(e), true);
}

LinkDiagram denominator_closure(const ExprPtr& e) {
  return close_fragment(fragment_of(e), false);
}

Integer determinant(const LinkDiagram& d) {
  if (is_split(d)) return 0;
  if (d.xings.empty()) return 1;  // single crossingless circle

  Checkerboard cb = checkerboard(d);
  // white = the color class of face 0
  std::vector<int> white_index(cb.faces.count, -1);
  int whites = 0;
  for (int f = 0; f < cb.faces.count; ++f)
    if (cb.color[f] == 0) white_index[f] = whites++;

  std::vector<std::vector<Integer>> g(
      whites, std::vector<Integer>(whites, Integer(0)));
  std::vector<Integer> row_sum(whites, Integer(0));
  for (std::size_t c = 0; c < d.xings.size(); ++c) {
    int ci = static_cast<int>(c);
    std::array<int, 4> corner{};
    for (int s = 0; s < 4; ++s) corner[s] = corner_face(cb.faces, ci, s);
    if (cb.color[corner[0]] != cb.color[corner[2]] ||
        cb.color[corner[1]] != cb.color[corner[3]] ||
        cb.color[corner[0]] == cb.color[corner[1]])
      throw std::logic_error("corner coloring is not alternating");
    bool white01 = cb.color[corner[0]] == 0;  // white corners at 0,2
    int wa = white_index[corner[white01 ? 0 : 1]];
    int wb = white_index[corner[white01 ? 2 : 3]];
    // type of the crossing: +1 when rotating the over-strand
    // counterclockwise sweeps the black corners
    bool sweeps_white = d.xings[c].over02 == white01;
    Integer eta = sweeps_white ? -1 : 1;
    if (wa != wb) {
      g[wa][wb] -= eta;
      g[wb][wa] -= eta;
      row_sum[wa] -= eta;
      row_sum[wb] -= eta;
    }
  }
  for (int i = 0; i < whites; ++i) g[i][i] = -row_sum[i];

  // principal minor: drop the first white region
  std::vector<std::vector<Integer>> minor;
  for (int i = 1; i < whites; ++i)
    minor.emplace_back(g[i].begin() + 1, g[i].end());
  return bareiss_abs_det(std::move(minor));
}

Integer determinant_by_bracket(const LinkDiagram& d) {
  std::size_t n = d.xings.size();
  if (n > 16) throw ResourceLimit("bracket oracle capped at 16 crossings");
  if (d.free_loops > 0) {
    // each crossingless circle multiplies the bracket by
    // delta = -zeta^2 - zeta^{-2} = 0 at the determinant point
    if (n > 0 || d.free_loops > 1) return 0;
    return 1;
  }
  if (n == 0) return 1;

  Zeta8 total = Zeta8::zero();
  std::vector<int> uf(d.partner.size());
  for (std::size_t state = 0; state < (std::size_t(1) << n); ++state) {
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

    long long exponent = 0;
    for (std::size_t c = 0; c < n; ++c) {
      bool a_smoothing = (state >> c) & 1;
      exponent += a_smoothing ? 1 : -1;
      // A-smoothing opens the corners swept by turning the over-strand
      // counterclockwise: slots (0,1)(2,3) when the over strand runs
      // through slots 0 and 2, else slots (1,2)(3,0)
      int base = static_cast<int>(4 * c);
      if (d.xings[c].over02 == a_smoothing) {
        unite(base + 0, base + 1);
        unite(base + 2, base + 3);
      } else {
        unite(base + 1, base + 2);
        unite(base + 3, base + 0);
      }
    }
    for (std::size_t x = 0; x < d.partner.size(); ++x)
      unite(static_cast<int>(x), d.partner[x]);
    int loops = 0;
    for (std::size_t x = 0; x < d.partner.size(); ++x)
      if (find(static_cast<int>(x)) == static_cast<int>(x)) ++loops;
    if (loops == 1) total += Zeta8::power(exponent);
  }

  Zeta8 norm = total * total.conj();
  if (norm.c[1] != 0 || norm.c[2] != 0 || norm.c[3] != 0)
    throw std::logic_error("bracket norm is not rational");
  if (norm.c[0] < 0) throw std::logic_error("bracket norm is negative");
  return isqrt_exact(norm.c[0]);
}

KrebesFraction krebes_fraction(const ExprPtr& e) {
  return {determinant(numerator_closure(e)), determinant(denominator_closure(e))};
}

bool check_slope_consistency(const ExprPtr& e) {
  if (has_loop(e)) throw LoopPresent();
  KrebesFraction f = krebes_fraction(e);
  ExtendedRational s = slope(e);
  Integer g = boost::multiprecision::gcd(f.num, f.den);
  if (g == 0) return false;  // both closures split; cannot happen loop-free
  return f.num / g == abs_int(s.num()) && f.den / g == s.den();
}

bool krebes_divisibility_check(const DiagramTemplate& t, const std::string& vertex) {
  auto it = t.tangles.find(vertex);
  if (it == t.tangles.end())
    throw InvalidTemplate("no tangle at vertex '" + vertex + "'");
  KrebesFraction f = krebes_fraction(it->second);
  Integer g = boost::multiprecision::gcd(f.num, f.den);
  Integer det = determinant(assemble(t));
  if (g == 0) return det == 0;
  return det % g == 0;
}

}  // namespace tangles
