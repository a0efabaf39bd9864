#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangles/diagram.hpp"
#include "tangles/expr.hpp"

namespace tangles {

// Sphere-embedded 4-valent graph with a tangle assigned to each vertex.
// Ports are indexed 0=NW, 1=NE, 2=SE, 3=SW, cyclic clockwise as drawn.
struct PortRef {
  std::string vertex;
  int port = 0;
};

struct DiagramTemplate {
  bool closure = false;
  std::vector<std::string> vertices;
  std::vector<std::array<PortRef, 2>> edges;
  std::map<std::string, ExprPtr> tangles;
};

// Single-vertex closure templates.  They violate the face rules on
// purpose and carry the closure flag.
DiagramTemplate numerator_template(const ExprPtr& tangle);
DiagramTemplate denominator_template(const ExprPtr& tangle);

struct TemplateReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the structural invariants: each port used exactly once,
// connected, V - E + F = 2 by face tracing, and no monogon or bigon face
// (face checks are skipped for closure templates).
TemplateReport validate_template(const DiagramTemplate& t);

LinkDiagram assemble(const DiagramTemplate& t);

// Assembly plus bookkeeping used by the decision engine: which crossing
// came from which vertex, and the link component passing each port.
struct AssembledTemplate {
  LinkDiagram diagram;
  std::vector<int> crossing_vertex;             // per crossing: vertex index
  std::map<std::string, std::array<int, 4>> port_component;
  int strand_components = 0;                    // components through ports
};

AssembledTemplate assemble_detailed(const DiagramTemplate& t);

// Replaces each assignment by a rational tangle of slope 1, -1, 0 or
// infinity according to the sign of its slope.
DiagramTemplate basic_diagram(const DiagramTemplate& t);

struct CutTangle {
  std::string vertex;
  Integer genus;
};

// Vertices of slope infinity (resp. 0) whose replacement by the rational
// tangle of that slope splits the diagram.
std::vector<CutTangle> find_cut_tangles(const DiagramTemplate& t);

bool is_algebraically_alternating(const DiagramTemplate& t);

// JSON template format:
//   { "closure": bool, "vertices": [{"id": str}],
//     "edges": [[["v1", 0], ["v2", 3]], ...],
//     "tangles": {"v1": "<expression>"} }
DiagramTemplate template_from_json(const std::string& json_text);
std::string template_to_json(const DiagramTemplate& t);
DiagramTemplate load_template_file(const std::string& path);

}  // namespace tangles
