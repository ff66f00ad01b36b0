#include "baire/parse.hpp"

#include <cctype>

#include "baire/ordinal.hpp"

namespace baire {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek_is(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      throw parse_error(std::string("expected '") + c + "'", i);
    ++i;
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw parse_error("expected a keyword", i);
    return s.substr(start, i - start);
  }
  long long integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected an integer", i);
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  }

  Rat rational() {
    long long n = integer();
    if (peek_is('/')) {
      ++i;
      long long d = integer();
      if (d <= 0) throw parse_error("denominator must be positive", i);
      return Rat(n, d);
    }
    return Rat(n);
  }

  Point point() {
    skip_ws();
    std::string bits;
    while (i < s.size() && (s[i] == '0' || s[i] == '1')) bits.push_back(s[i++]);
    expect('~');
    skip_ws();
    if (i >= s.size() || (s[i] != '0' && s[i] != '1'))
      throw parse_error("expected a tail bit", i);
    int tail = s[i++] - '0';
    return Point(bits, tail);
  }

  Ordinal ordinal() {
    // Delegate to the ordinal grammar over the balanced slice up to the next
    // top-level ',' or ')'.
    skip_ws();
    size_t start = i;
    int nesting = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == '(') ++nesting;
      if (c == ')') {
        if (nesting == 0) break;
        --nesting;
      }
      if (c == ',' && nesting == 0) break;
      ++i;
    }
    try {
      return parse_ordinal(s.substr(start, i - start));
    } catch (const parse_error& pe) {
      throw parse_error(pe.what(), start + pe.pos);
    }
  }

  Sidedness side() {
    std::string k = ident();
    if (k == "two") return Sidedness::two;
    if (k == "left") return Sidedness::left;
    if (k == "right") return Sidedness::right;
    if (k == "one") return Sidedness::one_neither;
    if (k == "limit") return Sidedness::limit;
    if (k == "cont") return Sidedness::continuous;
    throw parse_error("unknown sidedness '" + k + "'", i);
  }

  ExprPtr expr() {
    std::string k = ident();
    if (k == "const") return mk_const(rational());
    if (k == "affine") {
      expect('(');
      Rat a = rational();
      expect(',');
      Rat b = rational();
      expect(',');
      ExprPtr f = expr();
      expect(')');
      return mk_affine(a, b, std::move(f));
    }
    if (k == "glue") {
      expect('(');
      ExprPtr f0 = expr();
      expect(',');
      ExprPtr f1 = expr();
      expect(')');
      return mk_glue(std::move(f0), std::move(f1));
    }
    if (k == "spike") {
      expect('(');
      ExprPtr f = expr();
      expect(',');
      Point z = point();
      expect(',');
      Rat v = rational();
      expect(')');
      return mk_spike(std::move(f), std::move(z), v);
    }
    if (k == "stack") {
      expect('(');
      skip_ws();
      std::string seqk = ident();
      ExprPtr st;
      if (seqk == "cycle") {
        expect('[');
        std::vector<ExprPtr> items;
        items.push_back(expr());
        while (peek_is(',')) {
          ++i;
          items.push_back(expr());
        }
        expect(']');
        expect(',');
        Rat v = rational();
        expect(')');
        st = mk_stack_cycle(std::move(items), v);
      } else if (seqk == "fund") {
        expect('(');
        Ordinal o = ordinal();
        expect(',');
        Sidedness sd = side();
        expect(')');
        expect(',');
        Rat v = rational();
        expect(')');
        st = mk_stack_fund(std::move(o), sd, v);
      } else {
        throw parse_error("expected 'cycle' or 'fund'", i);
      }
      return st;
    }
    if (k == "sum" || k == "prod") {
      expect('(');
      ExprPtr f = expr();
      expect(',');
      ExprPtr g = expr();
      expect(')');
      return k == "sum" ? mk_sum(std::move(f), std::move(g))
                        : mk_prod(std::move(f), std::move(g));
    }
    if (k == "canon") {
      expect('(');
      Ordinal o = ordinal();
      expect(',');
      Sidedness sd = side();
      expect(')');
      return mk_canon(std::move(o), sd);
    }
    throw parse_error("unknown expression keyword '" + k + "'", i);
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Lexer lx(text);
  ExprPtr e;
  try {
    e = lx.expr();
  } catch (const precondition_error& pe) {
    // Invariant violations surface as semantic errors with a position.
    throw parse_error(std::string("semantic error: ") + pe.what(), lx.i);
  }
  lx.skip_ws();
  if (lx.i != text.size()) throw parse_error("trailing input", lx.i);
  return e;
}

Rat parse_rational(const std::string& text) {
  Lexer lx(text);
  Rat r = lx.rational();
  lx.skip_ws();
  if (lx.i != text.size()) throw parse_error("trailing input", lx.i);
  return r;
}

Point parse_point(const std::string& text) {
  Lexer lx(text);
  Point p = lx.point();
  lx.skip_ws();
  if (lx.i != text.size()) throw parse_error("trailing input", lx.i);
  return p;
}

}  // namespace baire
