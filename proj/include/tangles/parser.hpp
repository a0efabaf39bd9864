#pragma once

#include <string>

#include "tangles/expr.hpp"

namespace tangles {

// Grammar:
//   expr    := sum
//   sum     := prod { "+" prod }
//   prod    := unary { "*" unary }
//   unary   := "-" unary | postfix
//   postfix := atom { "^r" }
//   atom    := "[" int { int } "]" | "Q" uint | "(" expr ")"
//
// "+" is tangle sum, "*" tangle product, prefix "-" reflection, postfix
// "^r" rotation.  Whitespace separates integers inside brackets and is
// otherwise ignored.  Throws ParseError (1-based positions) on malformed
// input and NonTrivialSumViolation when a parsed sum has a
// rational-sequence summand of slope 0 or infinity.
ExprPtr parse(const std::string& text);

// Canonical text for an expression; parse(render(e)) is structurally
// identical to e.
std::string render(const ExprPtr& e);

}  // namespace tangles
