#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tangles/diagram.hpp"

namespace tangles {

// Resolves a gluing: chains of symbolic markers between strand ends are
// contracted away, leaving node-to-node segments, marker cycles (free
// loops) and connections to surviving boundary markers.
class Stitcher {
public:
  int marker() {
    incident_.emplace_back();
    return static_cast<int>(incident_.size()) - 1;
  }

  void link_markers(int m1, int m2) { add_edge({false, m1}, {false, m2}); }
  void link_marker_node(int m, int node) { add_edge({false, m}, {true, node}); }

  struct Result {
    std::vector<std::pair<int, int>> node_pairs;
    // per survivor (by index into the survivors argument):
    //   >= 0   node reached
    //   < 0    wire to survivor index -2-i
    std::vector<int> survivor_link;
    int free_loops = 0;
  };

  Result resolve(const std::vector<int>& survivors) {
    std::vector<int> survivor_index(incident_.size(), -1);
    for (std::size_t i = 0; i < survivors.size(); ++i)
      survivor_index[survivors[i]] = static_cast<int>(i);

    for (std::size_t m = 0; m < incident_.size(); ++m) {
      std::size_t expected = survivor_index[m] >= 0 ? 1 : 2;
      if (incident_[m].size() != expected)
        throw std::logic_error("stitch marker with wrong degree");
    }

    Result out;
    out.survivor_link.assign(survivors.size(), 0);
    std::vector<char> edge_used(edges_.size(), 0);

    auto walk = [&](End start, std::size_t first_edge) -> End {
      std::size_t e = first_edge;
      End from = start;
      for (;;) {
        edge_used[e] = 1;
        End to = other_side(e, from);
        if (to.is_node || survivor_index[to.id] >= 0) return to;
        const auto& inc = incident_[to.id];
        e = inc[0] == e ? inc[1] : inc[0];
        from = to;
      }
    };

    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edge_used[e]) continue;
      if (edges_[e].a.is_node) {
        End dst = walk(edges_[e].a, e);
        record(out, edges_[e].a, dst, survivor_index);
      } else if (edges_[e].b.is_node) {
        End dst = walk(edges_[e].b, e);
        record(out, edges_[e].b, dst, survivor_index);
      }
    }
    for (int s : survivors) {
      const auto& inc = incident_[s];
      if (inc.empty() || edge_used[inc[0]]) continue;
      End self{false, s};
      End dst = walk(self, inc[0]);
      record(out, self, dst, survivor_index);
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edge_used[e]) continue;
      End from = edges_[e].a;
      std::size_t cur = e;
      while (!edge_used[cur]) {
        edge_used[cur] = 1;
        End to = other_side(cur, from);
        const auto& inc = incident_[to.id];
        cur = inc[0] == cur ? inc[1] : inc[0];
        from = to;
      }
      ++out.free_loops;
    }
    return out;
  }

private:
  struct End {
    bool is_node = false;
    int id = 0;
    bool operator==(const End& o) const { return is_node == o.is_node && id == o.id; }
  };
  struct Edge {
    End a, b;
  };

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;

  void add_edge(End a, End b) {
    std::size_t id = edges_.size();
    edges_.push_back({a, b});
    if (!a.is_node) incident_[a.id].push_back(id);
    if (!b.is_node) incident_[b.id].push_back(id);
  }

  End other_side(std::size_t e, const End& from) const {
    return edges_[e].a == from ? edges_[e].b : edges_[e].a;
  }

  void record(Result& out, const End& src, const End& dst,
              const std::vector<int>& survivor_index) {
    if (src.is_node && dst.is_node) {
      out.node_pairs.emplace_back(src.id, dst.id);
    } else if (src.is_node) {
      out.survivor_link[survivor_index[dst.id]] = src.id;
    } else if (dst.is_node) {
      out.survivor_link[survivor_index[src.id]] = dst.id;
    } else {
      int si = survivor_index[src.id];
      int di = survivor_index[dst.id];
      out.survivor_link[si] = -2 - di;
      out.survivor_link[di] = -2 - si;
    }
  }
};

// Registers a fragment's boundary attachments with a stitcher.  markers[c]
// must already exist; node ids are shifted by `offset`.
inline void bind_fragment_ends(Stitcher& st, const TangleFragment& f,
                               const std::array<int, 4>& markers, int offset) {
  for (int c = 0; c < 4; ++c) {
    if (f.end_is_wire(c)) {
      int c2 = f.wire_target(c);
      if (c < c2) st.link_markers(markers[c], markers[c2]);
    } else {
      st.link_marker_node(markers[c], f.ends[c] + offset);
    }
  }
}

}  // namespace tangles
