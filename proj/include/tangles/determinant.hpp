#pragma once

#include "tangles/diagram.hpp"
#include "tangles/expr.hpp"
#include "tangles/templates.hpp"

namespace tangles {

LinkDiagram numerator_closure(const ExprPtr& e);
LinkDiagram denominator_closure(const ExprPtr& e);

// Link determinant: |det| of a Goeritz matrix of the diagram, by
// fraction-free integer elimination.  Split diagrams give 0; the unknot
// with no crossings gives 1 (empty matrix).
Integer determinant(const LinkDiagram& d);

// Independent slow path: Kauffman bracket state sum evaluated at the
// determinant point, exact in Z[zeta_8].  Exponential in crossings;
// capped at 16.
Integer determinant_by_bracket(const LinkDiagram& d);

// Formal fraction: determinants of the numerator and denominator
// closures.  Not reduced.
struct KrebesFraction {
  Integer num;
  Integer den;
};

KrebesFraction krebes_fraction(const ExprPtr& e);

// True iff the reduced magnitudes of the Krebes fraction equal
// (|num|, den) of slope(e).  Requires a loop-free tangle.
bool check_slope_consistency(const ExprPtr& e);

// gcd(krebes num, krebes den) of the vertex tangle divides the
// determinant of the assembled template.
bool krebes_divisibility_check(const DiagramTemplate& t, const std::string& vertex);

}  // namespace tangles
