#pragma once

#include <array>
#include <string>
#include <vector>

#include "tangles/expr.hpp"

namespace tangles {

// Tangle endpoints and template ports share one numbering.
enum Compass : int { NW = 0, NE = 1, SE = 2, SW = 3 };

// A crossing is a 4-valent vertex whose slots are stored in
// counterclockwise order; the strand through slots (0,2) passes over
// when over02 is set.  Nodes are slot references encoded as
// 4*crossing + slot.
struct Xing {
  bool over02 = true;
};

inline int node_id(int crossing, int slot) { return 4 * crossing + slot; }
inline int node_crossing(int node) { return node / 4; }
inline int node_slot(int node) { return node % 4; }
inline int through(int node) { return (node & ~3) | ((node + 2) & 3); }

// Crossing-level diagram of a 4-ended tangle.  partner[x] is the node at
// the far end of the strand segment leaving node x, or -1 when the
// segment runs to the tangle boundary.  ends[c] names the node reached
// from boundary corner c, or encodes a crossingless wire between two
// corners as -2-c'.
struct TangleFragment {
  std::vector<Xing> xings;
  std::vector<int> partner;
  std::array<int, 4> ends{};
  int free_loops = 0;

  bool end_is_wire(int c) const { return ends[c] < 0; }
  int wire_target(int c) const { return -2 - ends[c]; }
};

TangleFragment fragment_crossing(int sign);
TangleFragment fragment_zero();
TangleFragment fragment_qloop(long long m);
TangleFragment fragment_sum(const TangleFragment& a, const TangleFragment& b);
TangleFragment fragment_rotate(const TangleFragment& f);
TangleFragment fragment_mirror(const TangleFragment& f);

// Crossing-level diagram of an algebraic tangle expression.  Products are
// expanded by crossing substitution first.
TangleFragment fragment_of(const ExprPtr& e);

// Endpoint pairing and closed-component count traced through a fragment.
struct FragmentTrace {
  std::array<int, 4> pairing{};  // pairing[c] = corner joined to corner c
  int closed_components = 0;     // loops inside the tangle, free loops included
};

FragmentTrace trace_fragment(const TangleFragment& f);

// A closed diagram: every strand segment joins two crossing slots, plus
// crossingless circles counted separately.
struct LinkDiagram {
  std::vector<Xing> xings;
  std::vector<int> partner;
  int free_loops = 0;

  std::size_t crossing_count() const { return xings.size(); }
};

// Closes a fragment: numerator joins NW-NE and SW-SE, denominator joins
// NW-SW and NE-SE.
LinkDiagram close_fragment(const TangleFragment& f, bool numerator);

int trace_components(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
bool is_split(const LinkDiagram& d);

// Face structure of the shadow on the sphere (via the rotation system).
struct FaceStructure {
  int count = 0;
  std::vector<int> face_of;  // per node: face id of the dart
  std::vector<int> length;   // per face: boundary length in arcs
};

FaceStructure trace_faces(const LinkDiagram& d);

// PD entry: arc labels counterclockwise from the incoming under-strand.
struct PDEntry {
  std::array<int, 4> arcs{};
};

struct PDCode {
  std::vector<PDEntry> entries;
  std::vector<int> loop_labels;  // one label per crossingless circle
};

PDCode pd_code(const LinkDiagram& d);
std::string pd_text(const LinkDiagram& d);

}  // namespace tangles
