#include <random>

#include "doctest.h"
#include "tangles/parser.hpp"

using namespace tangles;

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0:
    case 1: {
      if (pick(rng) == 0) {
        std::uniform_int_distribution<long long> m(1, 4);
        return TangleExpr::q_loop(m(rng));
      }
      std::uniform_int_distribution<int> len(1, 4);
      std::uniform_int_distribution<int> coeff(-5, 5);
      std::vector<Integer> coeffs;
      int n = len(rng);
      for (int i = 0; i < n; ++i) coeffs.push_back(coeff(rng));
      return TangleExpr::rational(std::move(coeffs));
    }
    case 2: {
      for (int tries = 0; tries < 20; ++tries) {
        try {
          return TangleExpr::sum(random_expr(rng, depth - 1),
                                 random_expr(rng, depth - 1));
        } catch (const NonTrivialSumViolation&) {
        }
      }
      return TangleExpr::rational({Integer(1)});
    }
    case 3:
      return TangleExpr::product(random_expr(rng, depth - 1),
                                 random_expr(rng, depth - 1));
    case 4:
      return TangleExpr::rotate(random_expr(rng, depth - 1));
    default:
      return TangleExpr::reflect(random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("grammar basics") {
  ExprPtr e = parse("[2 3]");
  CHECK(e->kind() == ExprKind::rational_seq);
  CHECK(e->coeffs() == std::vector<Integer>{Integer(2), Integer(3)});

  ExprPtr f = parse("-[3]^r + [3]^r");
  REQUIRE(f->kind() == ExprKind::sum);
  CHECK(f->left()->kind() == ExprKind::reflect);
  CHECK(f->left()->inner()->kind() == ExprKind::rotate);
  CHECK(f->left()->inner()->inner()->kind() == ExprKind::rational_seq);
  CHECK(f->right()->kind() == ExprKind::rotate);

  ExprPtr q = parse("Q2");
  CHECK(q->kind() == ExprKind::q_loop);
  CHECK(q->loop_count() == 2);

  ExprPtr p = parse("[2] * [3] + [1]");
  REQUIRE(p->kind() == ExprKind::sum);
  CHECK(p->left()->kind() == ExprKind::product);

  ExprPtr neg = parse("[-1 -2]");
  CHECK(neg->coeffs() == std::vector<Integer>{Integer(-1), Integer(-2)});
}

TEST_CASE("operator structure") {
  // "+" left-associates
  ExprPtr e = parse("[1] + [2] + [3]");
  REQUIRE(e->kind() == ExprKind::sum);
  CHECK(e->left()->kind() == ExprKind::sum);
  // "*" binds tighter than "+"
  ExprPtr f = parse("[1] + [2] * [3]");
  CHECK(f->right()->kind() == ExprKind::product);
  // reflection binds only the first tangle of a sum
  ExprPtr g = parse("-[3] + [2]");
  REQUIRE(g->kind() == ExprKind::sum);
  CHECK(g->left()->kind() == ExprKind::reflect);
  CHECK(g->right()->kind() == ExprKind::rational_seq);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("([2]^r");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
    CHECK(e.found == "end of input");
  }
  CHECK_THROWS_AS(parse("[2 +"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("[2] ^ q"), ParseError);
  CHECK_THROWS_AS(parse("Q0"), ParseError);
  CHECK_THROWS_AS(parse("[2] [3]"), ParseError);
}

TEST_CASE("non-trivial sum rejected at parse time") {
  CHECK_THROWS_AS(parse("[0] + [3]"), NonTrivialSumViolation);
  CHECK_THROWS_AS(parse("[3] + [0 0]"), NonTrivialSumViolation);
  CHECK_THROWS_AS(parse("[3] + [0 5]"), NonTrivialSumViolation);
  // non-leaf summands of slope 0 or infinity are allowed
  CHECK_NOTHROW(parse("([2] + -[2])^r + ([2] + -[2])^r"));
  CHECK_NOTHROW(parse("-[0] + [3]"));
}

TEST_CASE("render canonical forms") {
  CHECK(render(TangleExpr::rational({Integer(2), Integer(3)})) == "[2 3]");
  CHECK(render(TangleExpr::q_loop(2)) == "Q2");
  CHECK(render(TangleExpr::sum(
            TangleExpr::reflect(TangleExpr::rational({Integer(3)})),
            TangleExpr::rational({Integer(2)}))) == "-[3] + [2]");
  CHECK(render(parse("-[3]^r + [3]^r")) == "-[3]^r + [3]^r");
  CHECK(render(parse("([1] + [2])^r")) == "([1] + [2])^r");
  CHECK(render(parse("-([1] + [2])")) == "-([1] + [2])");
}

TEST_CASE("leaf counts size test cases") {
  CHECK(parse("[2 3]")->leaf_count() == 1);
  CHECK(parse("-[3]^r + [3]^r")->leaf_count() == 2);
  CHECK(parse("(-[2]^r + [3]^r)^r + [6]")->leaf_count() == 3);
  CHECK(parse("Q2")->leaf_count() == 0);
}

TEST_CASE("round trip over random trees") {
  std::mt19937_64 rng(7101);
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_expr(rng, 8);
    ExprPtr back = parse(render(e));
    CHECK(back->equals(*e));
  }
}

TEST_CASE("parse never aborts on garbage") {
  std::mt19937_64 rng(7102);
  const std::string alphabet = "[]()+-*^rQ 0123456789xz";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int n = len(rng);
    for (int j = 0; j < n; ++j) s += alphabet[pick(rng)];
    try {
      parse(s);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.position <= s.size() + 1);
      CHECK(e.position >= 1);
    } catch (const NonTrivialSumViolation&) {
    }
  }
  CHECK(parsed >= 0);
}
