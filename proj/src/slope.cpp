#include "tangles/slope.hpp"

#include <unordered_map>

namespace tangles {

namespace {

ExprPtr single_crossing(int sign) {
  ExprPtr one = TangleExpr::rational({Integer(1)});
  return sign > 0 ? one : TangleExpr::reflect(one);
}

// Sum chain of |a| single crossings of sign(a); nullptr when a = 0.
ExprPtr horizontal_block(const Integer& a) {
  if (a == 0) return nullptr;
  int sign = a < 0 ? -1 : 1;
  Integer count = a < 0 ? Integer(-a) : a;
  if (count > 10000) throw ResourceLimit("twist block too large to expand");
  ExprPtr e = single_crossing(sign);
  for (Integer i = 1; i < count; ++i)
    e = TangleExpr::sum_unchecked(e, single_crossing(sign));
  return e;
}

// Appends a vertical block of a crossings below t: slope s -> 1/(a + 1/s).
ExprPtr vertical_append(ExprPtr t, const Integer& a) {
  ExprPtr block = horizontal_block(-a);
  if (!block) return t;
  return TangleExpr::rotate(
      TangleExpr::sum_unchecked(TangleExpr::rotate(std::move(t)), block));
}

// Standard twist construction for a Conway sequence: blocks alternate
// vertical/horizontal and end horizontal, so block i is horizontal iff
// i and n have the same parity.  Zero blocks contribute no crossings.
ExprPtr rational_to_crossings(const std::vector<Integer>& coeffs) {
  std::size_t n = coeffs.size();
  bool first_horizontal = (n % 2 == 1);
  ExprPtr e;
  if (first_horizontal) {
    e = horizontal_block(coeffs[0]);
    if (!e) e = TangleExpr::rational({Integer(0)});
  } else {
    ExprPtr block = horizontal_block(-coeffs[0]);
    if (!block) block = TangleExpr::rational({Integer(0)});
    e = TangleExpr::rotate(block);
  }
  for (std::size_t i = 1; i < n; ++i) {
    bool horizontal = ((n - i) % 2 == 1);
    if (coeffs[i] == 0) continue;
    if (horizontal)
      e = TangleExpr::sum_unchecked(e, horizontal_block(coeffs[i]));
    else
      e = vertical_append(e, coeffs[i]);
  }
  return e;
}

// Replaces every positive crossing leaf [1] by `pos`.  Negative crossings
// appear as Reflect([1]) in crossing-level trees, so their substitution
// becomes Reflect(pos) for free.  Inside a rotation the drawing is turned
// a quarter turn, which flips every crossing sign as drawn; the occupant
// of a leaf under k rotations must be pre-rotated and pre-reflected so
// that it sits in standard position in the final drawing.
ExprPtr substitute_crossings(const ExprPtr& e, const ExprPtr& pos) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
      if (e->coeffs().size() == 1 && e->coeffs()[0] == 1) return pos;
      if (e->coeffs().size() != 1 || e->coeffs()[0] != 0)
        throw std::logic_error("unexpected leaf in crossing-level tree");
      return e;  // trivial tangle [0]
    case ExprKind::q_loop:
      return e;
    case ExprKind::sum:
      return TangleExpr::sum_unchecked(substitute_crossings(e->left(), pos),
                                       substitute_crossings(e->right(), pos));
    case ExprKind::rotate:
      return TangleExpr::rotate(substitute_crossings(
          e->inner(), TangleExpr::rotate(TangleExpr::reflect(pos))));
    case ExprKind::reflect:
      return TangleExpr::reflect(substitute_crossings(e->inner(), pos));
    case ExprKind::product:
      throw std::logic_error("product in crossing-level tree");
  }
  return e;
}

using SlopeCache = std::unordered_map<const TangleExpr*, ExtendedRational>;

const ExtendedRational& cached_slope(const ExprPtr& e, SlopeCache& cache) {
  auto it = cache.find(e.get());
  if (it != cache.end()) return it->second;
  ExtendedRational s(0);
  switch (e->kind()) {
    case ExprKind::rational_seq:
      s = continued_fraction_value(e->coeffs());
      break;
    case ExprKind::q_loop:
      s = ExtendedRational(0);
      break;
    case ExprKind::sum:
      s = er_add(cached_slope(e->left(), cache), cached_slope(e->right(), cache));
      break;
    case ExprKind::product:
      s = er_mul(cached_slope(e->left(), cache), cached_slope(e->right(), cache));
      break;
    case ExprKind::rotate:
      s = er_rotate(cached_slope(e->inner(), cache));
      break;
    case ExprKind::reflect:
      s = er_neg(cached_slope(e->inner(), cache));
      break;
  }
  return cache.emplace(e.get(), std::move(s)).first->second;
}

void collect_closed(const ExprPtr& e, const TreePath& path, SlopeCache& cache,
                    std::vector<TreePath>& out) {
  switch (e->kind()) {
    case ExprKind::sum:
      if (cached_slope(e->left(), cache).is_infinite() &&
          cached_slope(e->right(), cache).is_infinite())
        out.push_back(path);
      collect_closed(e->left(), path_append(path, 0), cache, out);
      collect_closed(e->right(), path_append(path, 1), cache, out);
      break;
    case ExprKind::rotate:
    case ExprKind::reflect:
      collect_closed(e->inner(), path_append(path, 0), cache, out);
      break;
    default:
      break;
  }
}

bool loop_scan(const ExprPtr& e, SlopeCache& cache) {
  switch (e->kind()) {
    case ExprKind::q_loop:
      return true;
    case ExprKind::sum: {
      if (classify(cached_slope(e->left(), cache)) == ParityType::one_zero &&
          classify(cached_slope(e->right(), cache)) == ParityType::one_zero)
        return true;
      return loop_scan(e->left(), cache) || loop_scan(e->right(), cache);
    }
    case ExprKind::rotate:
    case ExprKind::reflect:
      return loop_scan(e->inner(), cache);
    default:
      return false;
  }
}

// A subtree built from a single rational leaf with rotations and
// reflections only; such subtrees denote rational tangles.
bool is_rational_subtree(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
      return true;
    case ExprKind::rotate:
    case ExprKind::reflect:
      return is_rational_subtree(e->inner());
    default:
      return false;
  }
}

void flatten_sum(const ExprPtr& e, std::vector<ExprPtr>& leaves) {
  if (e->kind() == ExprKind::sum) {
    flatten_sum(e->left(), leaves);
    flatten_sum(e->right(), leaves);
  } else {
    leaves.push_back(e);
  }
}

// Matches Rotate(sum chain of k >= 2 slope-infinity rational tangles),
// the canonical presentation of Q_{k-1}.
bool match_q_pattern(const ExprPtr& e, SlopeCache& cache, long long& m_out) {
  if (e->kind() != ExprKind::rotate) return false;
  const ExprPtr& body = e->inner();
  if (body->kind() != ExprKind::sum) return false;
  std::vector<ExprPtr> leaves;
  flatten_sum(body, leaves);
  for (const ExprPtr& leaf : leaves) {
    if (!is_rational_subtree(leaf)) return false;
    if (!cached_slope(leaf, cache).is_infinite()) return false;
  }
  m_out = static_cast<long long>(leaves.size()) - 1;
  return m_out >= 1;
}

void check_q_summand(const ExprPtr& e, const TreePath& path, SlopeCache& cache,
                     std::vector<QSummand>& out) {
  if (e->kind() == ExprKind::q_loop) {
    out.push_back({e->loop_count(), path});
    return;
  }
  long long m = 0;
  if (match_q_pattern(e, cache, m)) out.push_back({m, path});
}

void collect_q_summands(const ExprPtr& e, const TreePath& path, SlopeCache& cache,
                        std::vector<QSummand>& out) {
  switch (e->kind()) {
    case ExprKind::sum:
      check_q_summand(e->left(), path_append(path, 0), cache, out);
      check_q_summand(e->right(), path_append(path, 1), cache, out);
      collect_q_summands(e->left(), path_append(path, 0), cache, out);
      collect_q_summands(e->right(), path_append(path, 1), cache, out);
      break;
    case ExprKind::product:
      collect_q_summands(e->left(), path_append(path, 0), cache, out);
      collect_q_summands(e->right(), path_append(path, 1), cache, out);
      break;
    case ExprKind::rotate:
    case ExprKind::reflect:
      collect_q_summands(e->inner(), path_append(path, 0), cache, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::string parity_name(ParityType t) {
  switch (t) {
    case ParityType::zero_one:
      return "Type 0/1";
    case ParityType::one_zero:
      return "Type 1/0";
    case ParityType::one_one:
      return "Type 1/1";
    case ParityType::indefinite:
      return "indefinite";
  }
  return "?";
}

ExtendedRational slope(const ExprPtr& e) {
  SlopeCache cache;
  return cached_slope(e, cache);
}

ParityType classify(const ExtendedRational& s) {
  bool p_odd = boost::multiprecision::bit_test(
      s.num() < 0 ? Integer(-s.num()) : s.num(), 0);
  bool q_odd = boost::multiprecision::bit_test(s.den(), 0);
  if (!p_odd && q_odd) return ParityType::zero_one;
  if (p_odd && !q_odd) return ParityType::one_zero;
  return ParityType::one_one;
}

ParityType sum_type(ParityType a, ParityType b) {
  if (a == ParityType::indefinite || b == ParityType::indefinite)
    throw std::logic_error("sum_type of indefinite operand");
  if (a == ParityType::one_zero && b == ParityType::one_zero)
    return ParityType::indefinite;
  if (a == ParityType::one_zero || b == ParityType::one_zero)
    return ParityType::one_zero;
  if (a == ParityType::zero_one) return b;
  if (b == ParityType::zero_one) return a;
  // both 1/1
  return ParityType::zero_one;
}

ExprPtr crossing_level_expr(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
      return rational_to_crossings(e->coeffs());
    case ExprKind::q_loop:
      return e;
    case ExprKind::sum:
      return TangleExpr::sum_unchecked(crossing_level_expr(e->left()),
                                       crossing_level_expr(e->right()));
    case ExprKind::rotate:
      return TangleExpr::rotate(crossing_level_expr(e->inner()));
    case ExprKind::reflect:
      return TangleExpr::reflect(crossing_level_expr(e->inner()));
    case ExprKind::product:
      return crossing_level_expr(expand_products(e));
  }
  return e;
}

ExprPtr expand_products(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::rational_seq:
    case ExprKind::q_loop:
      return e;
    case ExprKind::sum:
      return TangleExpr::sum_unchecked(expand_products(e->left()),
                                       expand_products(e->right()));
    case ExprKind::rotate:
      return TangleExpr::rotate(expand_products(e->inner()));
    case ExprKind::reflect:
      return TangleExpr::reflect(expand_products(e->inner()));
    case ExprKind::product: {
      ExprPtr left = expand_products(e->left());
      ExprPtr right = expand_products(e->right());
      if (e->crossing_count() > 10000)
        throw ResourceLimit("product expansion too large");
      return substitute_crossings(crossing_level_expr(left), right);
    }
  }
  return e;
}

bool has_loop(const ExprPtr& e) {
  ExprPtr x = expand_products(e);
  SlopeCache cache;
  return loop_scan(x, cache);
}

ParityType connection_type(const ExprPtr& e) {
  if (has_loop(e)) throw LoopPresent();
  return classify(slope(e));
}

std::vector<TreePath> find_closed_subtangles(const ExprPtr& e) {
  ExprPtr x = expand_products(e);
  SlopeCache cache;
  std::vector<TreePath> out;
  collect_closed(x, TreePath{}, cache, out);
  return out;
}

std::vector<QSummand> find_qm_summands(const ExprPtr& e) {
  SlopeCache cache;
  std::vector<QSummand> out;
  check_q_summand(e, TreePath{}, cache, out);
  collect_q_summands(e, TreePath{}, cache, out);
  return out;
}

ExprPtr q_loop_chain(long long m) {
  if (m < 1) throw std::logic_error("Q_m requires m >= 1");
  auto vertical = [] {
    return TangleExpr::rotate(TangleExpr::rational({Integer(0)}));
  };
  ExprPtr chain = vertical();
  for (long long i = 0; i < m; ++i)
    chain = TangleExpr::sum_unchecked(chain, vertical());
  return TangleExpr::rotate(chain);
}

}  // namespace tangles
