#include "tangles/parser.hpp"

#include <cctype>

namespace tangles {

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ < text_.size()) fail("end of input");
    return e;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) {
    std::string found = pos_ < text_.size()
                            ? std::string("'") + text_[pos_] + "'"
                            : std::string("end of input");
    throw ParseError(pos_ + 1, expected, found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_prod();
    while (eat('+')) e = TangleExpr::sum(e, parse_prod());
    return e;
  }

  ExprPtr parse_prod() {
    ExprPtr e = parse_unary();
    while (eat('*')) e = TangleExpr::product(e, parse_unary());
    return e;
  }

  ExprPtr parse_unary() {
    if (eat('-')) return TangleExpr::reflect(parse_unary());
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'r') fail("'r' after '^'");
        ++pos_;
        e = TangleExpr::rotate(e);
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("'[', 'Q' or '('");
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      std::vector<Integer> coeffs;
      coeffs.push_back(parse_int());
      for (;;) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ']') {
          ++pos_;
          return TangleExpr::rational(std::move(coeffs));
        }
        if (pos_ < text_.size() &&
            (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_]))))
          coeffs.push_back(parse_int());
        else
          fail("integer or ']'");
      }
    }
    if (c == 'Q') {
      ++pos_;
      Integer m = parse_uint();
      if (m < 1) throw ParseError(pos_, "positive loop count after 'Q'", m.str());
      if (m > 100000) throw ParseError(pos_, "loop count <= 100000", m.str());
      return TangleExpr::q_loop(static_cast<long long>(m));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      if (!eat(')')) fail("')'");
      return e;
    }
    fail("'[', 'Q' or '('");
  }

  Integer parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Integer v = parse_uint();
    return neg ? Integer(-v) : v;
  }

  Integer parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("digit");
    Integer v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v *= 10;
      v += text_[pos_++] - '0';
    }
    return v;
  }
};

// Precedence levels used when rendering: sum < product < unary < postfix.
enum Prec { prec_sum = 0, prec_prod = 1, prec_unary = 2, prec_postfix = 3 };

int node_prec(const TangleExpr& e) {
  switch (e.kind()) {
    case ExprKind::sum:
      return prec_sum;
    case ExprKind::product:
      return prec_prod;
    case ExprKind::reflect:
      return prec_unary;
    case ExprKind::rotate:
      return prec_postfix;
    default:
      return prec_postfix + 1;
  }
}

void render_into(const ExprPtr& e, int min_prec, std::string& out) {
  int p = node_prec(*e);
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (e->kind()) {
    case ExprKind::rational_seq: {
      out += '[';
      bool first = true;
      for (const Integer& a : e->coeffs()) {
        if (!first) out += ' ';
        out += a.str();
        first = false;
      }
      out += ']';
      break;
    }
    case ExprKind::q_loop:
      out += 'Q';
      out += std::to_string(e->loop_count());
      break;
    case ExprKind::sum:
      render_into(e->left(), prec_sum, out);
      out += " + ";
      render_into(e->right(), prec_prod, out);
      break;
    case ExprKind::product:
      render_into(e->left(), prec_prod, out);
      out += " * ";
      render_into(e->right(), prec_unary, out);
      break;
    case ExprKind::reflect:
      out += '-';
      render_into(e->inner(), prec_unary, out);
      break;
    case ExprKind::rotate:
      render_into(e->inner(), prec_postfix, out);
      out += "^r";
      break;
  }
  if (parens) out += ')';
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const ExprPtr& e) {
  std::string out;
  render_into(e, prec_sum, out);
  return out;
}

}  // namespace tangles
