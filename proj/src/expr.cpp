#include "tangles/expr.hpp"

namespace tangles {

namespace {

struct ExprBuilder : TangleExpr {};

std::shared_ptr<TangleExpr> make_node() {
  return std::make_shared<ExprBuilder>();
}

}  // namespace

ExprPtr TangleExpr::rational(std::vector<Integer> coeffs) {
  if (coeffs.empty())
    throw std::logic_error("rational tangle needs at least one coefficient");
  auto n = make_node();
  n->kind_ = ExprKind::rational_seq;
  n->coeffs_ = std::move(coeffs);
  return n;
}

ExprPtr TangleExpr::q_loop(long long m) {
  if (m < 1) throw std::logic_error("Q_m requires m >= 1");
  auto n = make_node();
  n->kind_ = ExprKind::q_loop;
  n->m_ = m;
  return n;
}

ExprPtr TangleExpr::sum(ExprPtr left, ExprPtr right) {
  for (const ExprPtr& child : {left, right}) {
    if (child->kind() == ExprKind::rational_seq) {
      ExtendedRational s = continued_fraction_value(child->coeffs());
      if (s.is_zero() || s.is_infinite())
        throw NonTrivialSumViolation(
            "sum with a rational tangle of slope " + s.str());
    }
  }
  return sum_unchecked(std::move(left), std::move(right));
}

ExprPtr TangleExpr::sum_unchecked(ExprPtr left, ExprPtr right) {
  auto n = make_node();
  n->kind_ = ExprKind::sum;
  n->left_ = std::move(left);
  n->right_ = std::move(right);
  return n;
}

ExprPtr TangleExpr::product(ExprPtr left, ExprPtr right) {
  auto n = make_node();
  n->kind_ = ExprKind::product;
  n->left_ = std::move(left);
  n->right_ = std::move(right);
  return n;
}

ExprPtr TangleExpr::rotate(ExprPtr inner) {
  auto n = make_node();
  n->kind_ = ExprKind::rotate;
  n->left_ = std::move(inner);
  return n;
}

ExprPtr TangleExpr::reflect(ExprPtr inner) {
  auto n = make_node();
  n->kind_ = ExprKind::reflect;
  n->left_ = std::move(inner);
  return n;
}

bool TangleExpr::equals(const TangleExpr& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ExprKind::rational_seq:
      return coeffs_ == other.coeffs_;
    case ExprKind::q_loop:
      return m_ == other.m_;
    case ExprKind::sum:
    case ExprKind::product:
      return left_->equals(*other.left_) && right_->equals(*other.right_);
    case ExprKind::rotate:
    case ExprKind::reflect:
      return left_->equals(*other.left_);
  }
  return false;
}

int TangleExpr::leaf_count() const {
  switch (kind_) {
    case ExprKind::rational_seq:
      return 1;
    case ExprKind::q_loop:
      return 0;
    case ExprKind::sum:
    case ExprKind::product:
      return left_->leaf_count() + right_->leaf_count();
    case ExprKind::rotate:
    case ExprKind::reflect:
      return left_->leaf_count();
  }
  return 0;
}

Integer TangleExpr::crossing_count() const {
  switch (kind_) {
    case ExprKind::rational_seq: {
      Integer total = 0;
      for (const Integer& a : coeffs_) total += a < 0 ? Integer(-a) : a;
      return total;
    }
    case ExprKind::q_loop:
      return 0;
    case ExprKind::sum:
      return left_->crossing_count() + right_->crossing_count();
    case ExprKind::product:
      return left_->crossing_count() * right_->crossing_count();
    case ExprKind::rotate:
    case ExprKind::reflect:
      return left_->crossing_count();
  }
  return 0;
}

std::string TreePath::str() const {
  std::string out = "root";
  for (int s : steps) out += s == 0 ? ".left" : ".right";
  return out;
}

TreePath path_append(const TreePath& p, int step) {
  TreePath q = p;
  q.steps.push_back(step);
  return q;
}

ExprPtr subexpr_at(const ExprPtr& e, const TreePath& path) {
  ExprPtr cur = e;
  for (int s : path.steps) {
    switch (cur->kind()) {
      case ExprKind::sum:
      case ExprKind::product:
        cur = s == 0 ? cur->left() : cur->right();
        break;
      case ExprKind::rotate:
      case ExprKind::reflect:
        if (s != 0) throw std::logic_error("bad path step");
        cur = cur->inner();
        break;
      default:
        throw std::logic_error("path descends into a leaf");
    }
  }
  return cur;
}

}  // namespace tangles
