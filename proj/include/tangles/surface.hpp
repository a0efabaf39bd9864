#pragma once

#include <string>
#include <vector>

#include "tangles/expr.hpp"

namespace tangles {

// Profile of the m-essential surface with boundary of an algebraic
// tangle: an orientable connected surface, so
// genus = (2 - euler - boundary_count) / 2.
struct SurfaceData {
  Integer euler;
  Integer boundary_count;
  ExtendedRational boundary_slope;
  Integer genus;
};

struct SurfaceResult {
  SurfaceData data;
  std::vector<std::string> warnings;
};

// Essential arcs of one boundary loop of slope s in the gluing disk:
// |den(s)|.  Slope-infinity loops run parallel to the disk boundary and
// contribute no arcs.
Integer arcs_in_gluing_disk(const ExtendedRational& s);

// Surface profile by the non-trivial-sum recursion.  Requires
// find_closed_subtangles(e) empty; throws ClosedSubtangle otherwise, and
// Disconnected when no parallelism multiplier within the search bound
// yields a connected glued surface.
SurfaceResult surface_of_detailed(const ExprPtr& e);
SurfaceData surface_of(const ExprPtr& e);

Integer genus(const ExprPtr& e);

// Boundary circles of the surface glued from two families of curves on
// the tangle spheres: `circles1` parallel curves of slope p1/q1 on the
// west side meet `circles2` of slope p2/q2 on the east side along the
// gluing disk.  Exposed for the gluing tests; requires equal arc totals
// circles1*q1 = circles2*q2.
struct GlueTrace {
  long long boundary = 0;
  bool connected = false;  // the glued surface, with copies1/copies2 copies
};

GlueTrace trace_glued_boundary(const ExtendedRational& s1, long long circles1,
                               long long copies1, const ExtendedRational& s2,
                               long long circles2, long long copies2);

}  // namespace tangles
