#pragma once

#include <memory>
#include <vector>

#include "tangles/rational.hpp"

namespace tangles {

class TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

enum class ExprKind {
  rational_seq,  // Conway integer sequence
  q_loop,        // two parallel strings encircled by m loops
  sum,
  product,
  rotate,
  reflect,
};

// Immutable expression tree over rational-sequence leaves.  Nodes are
// shared; all accessors are const and thread-safe.
class TangleExpr {
public:
  static ExprPtr rational(std::vector<Integer> coeffs);
  static ExprPtr q_loop(long long m);
  // Throws NonTrivialSumViolation when either child is a rational-sequence
  // leaf of slope 0 or infinity.  Non-leaf children of those slopes are
  // permitted; closed tangles exist.
  static ExprPtr sum(ExprPtr left, ExprPtr right);
  static ExprPtr product(ExprPtr left, ExprPtr right);
  static ExprPtr rotate(ExprPtr inner);
  static ExprPtr reflect(ExprPtr inner);

  // Bypasses sum validation.  Used by diagram-level expansions, which glue
  // trivial tangles freely; never exposed through the parser.
  static ExprPtr sum_unchecked(ExprPtr left, ExprPtr right);

  ExprKind kind() const { return kind_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  long long loop_count() const { return m_; }
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }
  const ExprPtr& inner() const { return left_; }

  bool equals(const TangleExpr& other) const;

  // Number of rational-sequence leaves; used for sizing test cases.
  int leaf_count() const;
  // Crossings of the fully expanded diagram: sum of |a_i| over leaves,
  // multiplied through products.
  Integer crossing_count() const;

protected:
  TangleExpr() = default;

private:
  ExprKind kind_ = ExprKind::rational_seq;
  std::vector<Integer> coeffs_;
  long long m_ = 0;
  ExprPtr left_;
  ExprPtr right_;
};

// Path from the root: 0 = left/inner child, 1 = right child.
struct TreePath {
  std::vector<int> steps;

  std::string str() const;
  bool operator==(const TreePath& o) const { return steps == o.steps; }
};

TreePath path_append(const TreePath& p, int step);

// Subtree at a path; throws std::logic_error if the path does not exist.
ExprPtr subexpr_at(const ExprPtr& e, const TreePath& path);

}  // namespace tangles
