#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tangles/slope.hpp"
#include "tangles/templates.hpp"

namespace tangles {

// Evidence attached to a positive decision; every yes answer carries one
// and can be re-verified independently.
struct Witness {
  std::string kind;  // basic-split | closed-subtangle | cut-tangle |
                     // q-summand | q-chain
  std::string vertex;
  std::string vertex2;   // q-chain only
  TreePath path;         // closed-subtangle / q-summand
  std::string subexpr;   // rendered subtree
  Integer genus{-1};     // cut-tangle only
  long long q_m = 0;     // q-summand / q-chain
};

struct Decision {
  bool value = false;
  std::optional<Witness> witness;
};

enum class TriState { yes, no, unknown };

struct TorusDecision {
  TriState value = TriState::unknown;
  std::optional<Witness> witness;
};

struct VertexQSummand {
  std::string vertex;
  long long m = 0;
  TreePath path;
};

// Closed m-essential surface existence: the basic diagram is split, or
// some vertex tangle contains a closed algebraic sub-tangle, or Q_{m>=2}
// evidence forces a closed torus.
Decision decide_closed_surface(const DiagramTemplate& t);

// m-essential 2-sphere existence: a genus-0 cut tangle.
Decision decide_sphere(const DiagramTemplate& t);

// m-essential torus existence, assuming no genus-0 cut tangle: a genus-1
// cut tangle, a Q_{m>=2} summand, or two chained Q_{m>=1} summands give
// yes; syntactically Q-free templates without a genus-1 cut tangle give
// no; anything else is unknown.
TorusDecision decide_torus(const DiagramTemplate& t);

// For a single-component, loop-free, algebraically alternating template:
// certifies that no closed m-essential surface exists.
bool check_meridian_lemma(const DiagramTemplate& t);

struct SurfaceExistenceReport {
  Decision closed_surface;
  Decision sphere;
  TorusDecision torus;
  bool alternating_precondition = false;
  bool no_genus0_cut_tangle = false;
  std::vector<VertexQSummand> q_summands;
};

SurfaceExistenceReport decide_all(const DiagramTemplate& t);

// Re-checks a witness from scratch against the template.
bool verify_witness(const DiagramTemplate& t, const Witness& w);

std::string tri_state_name(TriState v);

}  // namespace tangles
