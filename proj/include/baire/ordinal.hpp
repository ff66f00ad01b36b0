#ifndef BAIRE_ORDINAL_HPP
#define BAIRE_ORDINAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "baire/error.hpp"

namespace baire {

enum class Order { less, equal, greater };

// Countable ordinal in Cantor normal form: sum of w^exp * coeff terms with
// strictly decreasing exponents and positive coefficients. Empty sum is 0.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  explicit Ordinal(unsigned long long n);

  static Ordinal omega();
  // w^exp * coeff
  static Ordinal omega_pow(const Ordinal& exp, unsigned long long coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  // Defined for ordinals below w; throws otherwise.
  unsigned long long as_nat() const;
  bool is_finite() const;

  friend Order cmp(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == Order::equal;
  }
  friend bool operator!=(const Ordinal& a, const Ordinal& b) {
    return !(a == b);
  }
  friend bool operator<(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == Order::less;
  }
  friend bool operator<=(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) != Order::greater;
  }
  friend bool operator>(const Ordinal& a, const Ordinal& b) { return b < a; }
  friend bool operator>=(const Ordinal& a, const Ordinal& b) { return b <= a; }

  std::string str() const;

  // Pushes a term; exponents must be supplied in strictly decreasing order.
  void push_term(Ordinal exp, unsigned long long coeff);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exp;
  unsigned long long coeff = 1;
};

// Ordinal (non-commutative) addition.
Ordinal add(const Ordinal& a, const Ordinal& b);
// Natural (Hessenberg) sum: merge of CNF terms with coefficient addition.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
// a * n for a natural n >= 1, via iterated ordinal addition.
Ordinal mul_nat(const Ordinal& a, unsigned long long n);
Ordinal successor(const Ordinal& a);
// Predecessor of a successor ordinal; throws otherwise.
Ordinal pred(const Ordinal& a);
// The unique c with a + c = b; requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

// Wainer-style fundamental sequence for a limit ordinal:
//   g + w^(e+1) -> g + w^e * (n+1),  g + w^l -> g + w^fund_seq(l, n).
Ordinal fund_seq(const Ordinal& a, unsigned long long n);

// Least xi with a <= w^xi (L(0) = L(1) = 0). Requires a >= 1 per the public
// contract, but tolerates 0 internally for coarse_le.
Ordinal xi_level(const Ordinal& a);

// The coarsening a <~ b: every g < a is below d * n for some d < b, n < w.
// Decided via xi_level comparison.
bool coarse_le(const Ordinal& a, const Ordinal& b);

Ordinal parse_ordinal(const std::string& text);
std::string format_ordinal(const Ordinal& a);

}  // namespace baire

#endif
