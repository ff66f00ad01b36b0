#include "baire/ordinal.hpp"

#include <cctype>

namespace baire {

Ordinal::Ordinal(unsigned long long n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& exp, unsigned long long coeff) {
  Ordinal r;
  if (coeff > 0) r.terms_.push_back(Term{exp, coeff});
  return r;
}

void Ordinal::push_term(Ordinal exp, unsigned long long coeff) {
  if (coeff == 0) return;
  if (!terms_.empty() && cmp(terms_.back().exp, exp) != Order::greater)
    throw precondition_error("CNF exponents must strictly decrease");
  terms_.push_back(Term{std::move(exp), coeff});
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exp.is_zero();
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

unsigned long long Ordinal::as_nat() const {
  if (is_zero()) return 0;
  if (!is_finite()) throw precondition_error("ordinal is not finite");
  return terms_[0].coeff;
}

Order cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    Order e = cmp(ta[i].exp, tb[i].exp);
    if (e != Order::equal) return e;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff ? Order::less : Order::greater;
  }
  if (ta.size() == tb.size()) return Order::equal;
  return ta.size() < tb.size() ? Order::less : Order::greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms()[0].exp;
  Ordinal r;
  // Keep the terms of a with exponent > lead; merge an equal-exponent term.
  for (const auto& t : a.terms()) {
    Order c = cmp(t.exp, lead);
    if (c == Order::greater) {
      r.push_term(t.exp, t.coeff);
    } else if (c == Order::equal) {
      r.push_term(t.exp, t.coeff + b.terms()[0].coeff);
      for (size_t i = 1; i < b.terms().size(); ++i)
        r.push_term(b.terms()[i].exp, b.terms()[i].coeff);
      return r;
    } else {
      break;
    }
  }
  for (const auto& t : b.terms()) r.push_term(t.exp, t.coeff);
  return r;
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  Ordinal r;
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (i == ta.size()) {
      r.push_term(tb[j].exp, tb[j].coeff);
      ++j;
    } else if (j == tb.size()) {
      r.push_term(ta[i].exp, ta[i].coeff);
      ++i;
    } else {
      Order c = cmp(ta[i].exp, tb[j].exp);
      if (c == Order::greater) {
        r.push_term(ta[i].exp, ta[i].coeff);
        ++i;
      } else if (c == Order::less) {
        r.push_term(tb[j].exp, tb[j].coeff);
        ++j;
      } else {
        r.push_term(ta[i].exp, ta[i].coeff + tb[j].coeff);
        ++i;
        ++j;
      }
    }
  }
  return r;
}

Ordinal mul_nat(const Ordinal& a, unsigned long long n) {
  if (n == 0) throw precondition_error("mul_nat requires n >= 1");
  if (a.is_zero() || n == 1) return a;
  // a + a + ... + a collapses to the leading term scaled by n.
  Ordinal r;
  const auto& t = a.terms();
  r.push_term(t[0].exp, t[0].coeff * n);
  for (size_t i = 1; i < t.size(); ++i) r.push_term(t[i].exp, t[i].coeff);
  return r;
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal(1)); }

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor())
    throw precondition_error("pred requires a successor ordinal");
  Ordinal r;
  const auto& t = a.terms();
  for (size_t i = 0; i + 1 < t.size(); ++i) r.push_term(t[i].exp, t[i].coeff);
  if (t.back().coeff > 1) r.push_term(t.back().exp, t.back().coeff - 1);
  return r;
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (cmp(a, b) == Order::greater)
    throw precondition_error("left_subtract requires a <= b");
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t i = 0;
  while (i < ta.size() && i < tb.size() &&
         cmp(ta[i].exp, tb[i].exp) == Order::equal &&
         ta[i].coeff == tb[i].coeff)
    ++i;
  Ordinal r;
  if (i == ta.size()) {
    for (size_t j = i; j < tb.size(); ++j)
      r.push_term(tb[j].exp, tb[j].coeff);
    return r;
  }
  // First difference: b's term dominates a's tail.
  if (cmp(ta[i].exp, tb[i].exp) == Order::equal) {
    r.push_term(tb[i].exp, tb[i].coeff - ta[i].coeff);
    for (size_t j = i + 1; j < tb.size(); ++j)
      r.push_term(tb[j].exp, tb[j].coeff);
    return r;
  }
  for (size_t j = i; j < tb.size(); ++j) r.push_term(tb[j].exp, tb[j].coeff);
  return r;
}

Ordinal fund_seq(const Ordinal& a, unsigned long long n) {
  if (!a.is_limit())
    throw precondition_error("fund_seq requires a limit ordinal");
  const auto& t = a.terms();
  Ordinal head;  // everything before one copy of the last w^e
  for (size_t i = 0; i + 1 < t.size(); ++i) head.push_term(t[i].exp, t[i].coeff);
  const Ordinal::Term& last = t.back();
  if (last.coeff > 1) head.push_term(last.exp, last.coeff - 1);
  Ordinal step;
  if (last.exp.is_successor()) {
    step = Ordinal::omega_pow(pred(last.exp), n + 1);
  } else {
    step = Ordinal::omega_pow(fund_seq(last.exp, n), 1);
  }
  return add(head, step);
}

Ordinal xi_level(const Ordinal& a) {
  if (a.is_zero()) throw precondition_error("xi_level requires a >= 1");
  if (cmp(a, Ordinal(1)) == Order::equal) return Ordinal();
  const auto& t = a.terms();
  if (t.size() == 1 && t[0].coeff == 1) return t[0].exp;  // a = w^e exactly
  return successor(t[0].exp);
}

bool coarse_le(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return cmp(xi_level(a), xi_level(b)) != Order::greater;
}

namespace {

struct OrdParser {
  const std::string& s;
  size_t i = 0;
  int depth = 0;
  static constexpr int kMaxDepth = 8;

  explicit OrdParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  unsigned long long nat() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected a natural number", i);
    unsigned long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
      ++i;
    }
    return v;
  }

  Ordinal ord() {
    if (++depth > kMaxDepth) throw parse_error("ordinal nesting too deep", i);
    Ordinal acc = term();
    while (eat('+')) acc = add(acc, term());
    --depth;
    return acc;
  }

  Ordinal term() {
    skip_ws();
    if (i < s.size() && (s[i] == 'w' || s[i] == 'W')) {
      ++i;
      Ordinal exp(1);
      if (eat('^')) {
        skip_ws();
        if (eat('(')) {
          exp = ord();
          if (!eat(')')) throw parse_error("expected ')'", i);
        } else {
          exp = Ordinal(nat());
        }
      }
      unsigned long long k = 1;
      if (eat('*')) {
        k = nat();
        if (k == 0) throw parse_error("coefficient must be positive", i);
      }
      return Ordinal::omega_pow(exp, k);
    }
    return Ordinal(nat());
  }
};

void format_into(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += "0";
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exp == Ordinal(1))) {
      out += "^";
      if (t.exp.is_finite()) {
        out += std::to_string(t.exp.as_nat());
      } else {
        out += "(";
        format_into(t.exp, out);
        out += ")";
      }
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  OrdParser p(text);
  Ordinal r = p.ord();
  p.skip_ws();
  if (p.i != text.size()) throw parse_error("trailing input after ordinal", p.i);
  return r;
}

std::string format_ordinal(const Ordinal& a) {
  std::string out;
  format_into(a, out);
  return out;
}

std::string Ordinal::str() const { return format_ordinal(*this); }

}  // namespace baire
