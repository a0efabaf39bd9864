#pragma once

#include <string>
#include <vector>

#include "tangles/expr.hpp"

namespace tangles {

// Classification of a reduced slope p/q by the parities of p and q.
// Indefinite arises only from sum_type on two one_zero operands.
enum class ParityType { zero_one, one_zero, one_one, indefinite };

std::string parity_name(ParityType t);

// Slope of an algebraic tangle: structural recursion through the
// homomorphism laws.  Q_m has slope 0.  Throws IndefiniteProduct when a
// product of slopes {0, infinity} arises.
ExtendedRational slope(const ExprPtr& e);

ParityType classify(const ExtendedRational& s);

// Parity of a sum of tangles of the given types (never fed indefinite).
ParityType sum_type(ParityType a, ParityType b);

// Rewrites rational-sequence leaves into their twist-block construction
// over single crossings [1] and -[1].  Q_m leaves are crossingless and
// stay; sums, rotations and reflections are preserved.
ExprPtr crossing_level_expr(const ExprPtr& e);

// Eliminates product nodes: the left operand is taken to crossing level
// and each positive crossing is replaced by the right operand, each
// negative crossing by its reflection.
ExprPtr expand_products(const ExprPtr& e);

// True iff the product-expanded tree has a sum of two Type 1/0 tangles,
// or contains a Q_m leaf.
bool has_loop(const ExprPtr& e);

// Endpoint pairing of a loop-free tangle, as the parity type of its slope:
//   zero_one: NW-NE and SW-SE joined
//   one_zero: NW-SW and NE-SE
//   one_one:  NW-SE and NE-SW
// Throws LoopPresent when has_loop(e).
ParityType connection_type(const ExprPtr& e);

// Every sum node of the product-expanded tree whose children both have
// slope infinity.  Paths refer to the expanded tree.
std::vector<TreePath> find_closed_subtangles(const ExprPtr& e);

struct QSummand {
  long long m = 0;
  TreePath where;
};

// Q_m occurrences that are direct summands of a sum node or the whole
// expression: Q_m leaves and the canonical pattern, a rotation of a sum
// chain of m+1 slope-infinity rational tangles.  Purely syntactic.
std::vector<QSummand> find_qm_summands(const ExprPtr& e);

// The canonical decomposition of Q_m used by the surface recursion.
ExprPtr q_loop_chain(long long m);

}  // namespace tangles
