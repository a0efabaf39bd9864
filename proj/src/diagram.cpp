#include "tangles/diagram.hpp"

#include <algorithm>
#include <functional>

#include "stitcher.hpp"
#include "tangles/errors.hpp"
#include "tangles/slope.hpp"

namespace tangles {

namespace {

constexpr int wire_code(int c) { return -2 - c; }

void append_arena(TangleFragment& dst, const TangleFragment& src) {
  int offset = 4 * static_cast<int>(dst.xings.size());
  dst.xings.insert(dst.xings.end(), src.xings.begin(), src.xings.end());
  for (int p : src.partner) dst.partner.push_back(p < 0 ? -1 : p + offset);
  dst.free_loops += src.free_loops;
}

}  // namespace

TangleFragment fragment_crossing(int sign) {
  TangleFragment f;
  f.xings.push_back({true});
  f.partner.assign(4, -1);
  if (sign > 0) {
    // slots counterclockwise from NW: [NW, SW, SE, NE]; over strand NW-SE
    f.ends = {node_id(0, 0), node_id(0, 3), node_id(0, 2), node_id(0, 1)};
  } else {
    // the mirror image: over strand NE-SW
    f.ends = {node_id(0, 1), node_id(0, 0), node_id(0, 3), node_id(0, 2)};
  }
  return f;
}

TangleFragment fragment_zero() {
  TangleFragment f;
  f.ends = {wire_code(NE), wire_code(NW), wire_code(SW), wire_code(SE)};
  return f;
}

TangleFragment fragment_qloop(long long m) {
  TangleFragment f = fragment_zero();
  f.free_loops = static_cast<int>(m);
  return f;
}

TangleFragment fragment_sum(const TangleFragment& a, const TangleFragment& b) {
  TangleFragment out;
  append_arena(out, a);
  int offset = 4 * static_cast<int>(a.xings.size());
  append_arena(out, b);

  Stitcher st;
  std::array<int, 4> ma{}, mb{};
  for (int c = 0; c < 4; ++c) ma[c] = st.marker();
  for (int c = 0; c < 4; ++c) mb[c] = st.marker();
  bind_fragment_ends(st, a, ma, 0);
  bind_fragment_ends(st, b, mb, offset);
  st.link_markers(ma[NE], mb[NW]);
  st.link_markers(ma[SE], mb[SW]);

  // surviving boundary: west side of a, east side of b
  std::vector<int> survivors = {ma[NW], ma[SW], mb[NE], mb[SE]};
  auto res = st.resolve(survivors);
  for (auto [x, y] : res.node_pairs) {
    out.partner[x] = y;
    out.partner[y] = x;
  }
  out.free_loops += res.free_loops;

  // survivor order above: new NW, SW, NE, SE
  std::array<int, 4> new_compass = {NW, SW, NE, SE};
  for (int i = 0; i < 4; ++i) {
    int link = res.survivor_link[i];
    out.ends[new_compass[i]] =
        link >= 0 ? link : wire_code(new_compass[-2 - link]);
  }
  return out;
}

TangleFragment fragment_rotate(const TangleFragment& f) {
  // counterclockwise quarter turn: new corner <- old corner
  static constexpr std::array<int, 4> old_of_new = {NE, SE, SW, NW};
  static constexpr std::array<int, 4> new_of_old = {SW, NW, NE, SE};
  TangleFragment out = f;
  for (int c = 0; c < 4; ++c) {
    int v = f.ends[old_of_new[c]];
    out.ends[c] = v >= 0 ? v : wire_code(new_of_old[-2 - v]);
  }
  return out;
}

TangleFragment fragment_mirror(const TangleFragment& f) {
  // left-right mirror: swap NW<->NE and SW<->SE, reverse every rotation
  // cycle by exchanging slots 1 and 3
  auto sigma = [](int node) { return (node & ~3) | ((4 - (node & 3)) & 3); };
  static constexpr std::array<int, 4> mu = {NE, NW, SW, SE};
  TangleFragment out;
  out.xings = f.xings;
  out.free_loops = f.free_loops;
  out.partner.assign(f.partner.size(), -1);
  for (std::size_t x = 0; x < f.partner.size(); ++x)
    if (f.partner[x] >= 0) out.partner[sigma(static_cast<int>(x))] = sigma(f.partner[x]);
  for (int c = 0; c < 4; ++c) {
    int v = f.ends[c];
    out.ends[mu[c]] = v >= 0 ? sigma(v) : wire_code(mu[-2 - v]);
  }
  return out;
}

namespace {

TangleFragment build_fragment(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
      if (e->coeffs().size() == 1 && e->coeffs()[0] == 1)
        return fragment_crossing(+1);
      if (e->coeffs().size() == 1 && e->coeffs()[0] == 0) return fragment_zero();
      throw std::logic_error("unexpected leaf in crossing-level tree");
    case ExprKind::q_loop:
      return fragment_qloop(e->loop_count());
    case ExprKind::sum:
      return fragment_sum(build_fragment(e->left()), build_fragment(e->right()));
    case ExprKind::rotate:
      return fragment_rotate(build_fragment(e->inner()));
    case ExprKind::reflect:
      return fragment_mirror(build_fragment(e->inner()));
    case ExprKind::product:
      throw std::logic_error("product in crossing-level tree");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TangleFragment fragment_of(const ExprPtr& e) {
  return build_fragment(crossing_level_expr(expand_products(e)));
}

FragmentTrace trace_fragment(const TangleFragment& f) {
  FragmentTrace t;
  t.closed_components = f.free_loops;
  std::array<int, 4> pairing{-1, -1, -1, -1};

  std::vector<char> seen(f.partner.size(), 0);
  // walk from each boundary corner to its partner corner
  for (int c = 0; c < 4; ++c) {
    if (pairing[c] >= 0) continue;
    if (f.end_is_wire(c)) {
      pairing[c] = f.wire_target(c);
      pairing[pairing[c]] = c;
      continue;
    }
    int cur = f.ends[c];
    for (;;) {
      seen[cur] = 1;
      int out = through(cur);
      seen[out] = 1;
      int next = f.partner[out];
      if (next < 0) {
        // reached another boundary corner
        int corner = -1;
        for (int c2 = 0; c2 < 4; ++c2)
          if (!f.end_is_wire(c2) && f.ends[c2] == out) corner = c2;
        if (corner < 0) throw std::logic_error("dangling node is not a boundary end");
        pairing[c] = corner;
        pairing[corner] = c;
        break;
      }
      cur = next;
    }
  }
  t.pairing = pairing;

  // remaining strands are closed components
  for (std::size_t x = 0; x < f.partner.size(); ++x) {
    if (seen[x] || f.partner[x] < 0) continue;
    int cur = static_cast<int>(x);
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = through(cur);
      seen[out] = 1;
      cur = f.partner[out];
    }
    ++t.closed_components;
  }
  return t;
}

LinkDiagram close_fragment(const TangleFragment& f, bool numerator) {
  TangleFragment work;
  append_arena(work, f);

  Stitcher st;
  std::array<int, 4> m{};
  for (int c = 0; c < 4; ++c) m[c] = st.marker();
  bind_fragment_ends(st, f, m, 0);
  if (numerator) {
    st.link_markers(m[NW], m[NE]);
    st.link_markers(m[SW], m[SE]);
  } else {
    st.link_markers(m[NW], m[SW]);
    st.link_markers(m[NE], m[SE]);
  }
  auto res = st.resolve({});
  for (auto [x, y] : res.node_pairs) {
    work.partner[x] = y;
    work.partner[y] = x;
  }

  LinkDiagram d;
  d.xings = std::move(work.xings);
  d.partner = std::move(work.partner);
  d.free_loops = work.free_loops + res.free_loops;
  for (int p : d.partner)
    if (p < 0) throw std::logic_error("open strand in closed diagram");
  return d;
}

int trace_components(const LinkDiagram& d) {
  std::vector<char> seen(d.partner.size(), 0);
  int components = d.free_loops;
  for (std::size_t x = 0; x < d.partner.size(); ++x) {
    if (seen[x]) continue;
    int cur = static_cast<int>(x);
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = through(cur);
      seen[out] = 1;
      cur = d.partner[out];
    }
    ++components;
  }
  return components;
}

bool is_alternating(const LinkDiagram& d) {
  std::vector<char> seen(d.partner.size(), 0);
  for (std::size_t x = 0; x < d.partner.size(); ++x) {
    if (seen[x]) continue;
    std::vector<bool> passes;
    int cur = static_cast<int>(x);
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = through(cur);
      seen[out] = 1;
      bool over = d.xings[node_crossing(cur)].over02 == (node_slot(cur) % 2 == 0);
      passes.push_back(over);
      cur = d.partner[out];
    }
    for (std::size_t i = 0; i < passes.size(); ++i)
      if (passes[i] == passes[(i + 1) % passes.size()]) return false;
  }
  return true;
}

bool is_split(const LinkDiagram& d) {
  std::size_t n = d.xings.size();
  if (n == 0) return d.free_loops >= 2;
  std::vector<int> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (std::size_t x = 0; x < d.partner.size(); ++x)
    root[find(node_crossing(static_cast<int>(x)))] =
        find(node_crossing(d.partner[x]));
  int shadow_components = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++shadow_components;
  return shadow_components + d.free_loops >= 2;
}

FaceStructure trace_faces(const LinkDiagram& d) {
  FaceStructure fs;
  fs.face_of.assign(d.partner.size(), -1);
  for (std::size_t x = 0; x < d.partner.size(); ++x) {
    if (fs.face_of[x] >= 0) continue;
    int id = fs.count++;
    int len = 0;
    int cur = static_cast<int>(x);
    while (fs.face_of[cur] < 0) {
      fs.face_of[cur] = id;
      ++len;
      int across = d.partner[cur];
      cur = (across & ~3) | ((across + 1) & 3);
    }
    fs.length.push_back(len);
  }
  return fs;
}

PDCode pd_code(const LinkDiagram& d) {
  PDCode pd;
  pd.entries.resize(d.xings.size());
  std::vector<int> label_at(d.partner.size(), 0);
  std::vector<char> in_mark(d.partner.size(), 0);

  // Arc labels are edge numbers: each component's strand segments are
  // numbered consecutively along the orientation, incrementing at every
  // crossing passage.
  std::vector<char> seen(d.partner.size(), 0);
  int next_label = 1;
  for (std::size_t start = 0; start < d.partner.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> in_nodes;
    int cur = static_cast<int>(start);
    while (!seen[cur]) {
      seen[cur] = 1;
      int out = through(cur);
      seen[out] = 1;
      in_mark[cur] = 1;
      in_nodes.push_back(cur);
      cur = d.partner[out];
    }
    int base = next_label;
    int len = static_cast<int>(in_nodes.size());
    for (int k = 0; k < len; ++k) {
      // segment base+k ends at passage k and continues from passage k-1
      label_at[in_nodes[k]] = base + k;
      label_at[through(in_nodes[k])] = base + (k + 1) % len;
    }
    next_label = base + len;
  }

  // order each entry counterclockwise from the incoming under-strand
  for (std::size_t c = 0; c < d.xings.size(); ++c) {
    int under_in = -1;
    for (int s = 0; s < 4; ++s) {
      int x = node_id(static_cast<int>(c), s);
      bool under = d.xings[c].over02 != (s % 2 == 0);
      if (under && in_mark[x]) under_in = s;
    }
    if (under_in < 0) throw std::logic_error("crossing without incoming under-strand");
    for (int k = 0; k < 4; ++k)
      pd.entries[c].arcs[k] = label_at[node_id(static_cast<int>(c), (under_in + k) % 4)];
  }

  for (int i = 0; i < d.free_loops; ++i) pd.loop_labels.push_back(next_label++);
  return pd;
}

std::string pd_text(const LinkDiagram& d) {
  PDCode pd = pd_code(d);
  std::string out;
  for (const PDEntry& e : pd.entries) {
    out += "X[" + std::to_string(e.arcs[0]) + "," + std::to_string(e.arcs[1]) +
           "," + std::to_string(e.arcs[2]) + "," + std::to_string(e.arcs[3]) + "]\n";
  }
  for (int k : pd.loop_labels) out += "O[" + std::to_string(k) + "]\n";
  return out;
}

}  // namespace tangles
