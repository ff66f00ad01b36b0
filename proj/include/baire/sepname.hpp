#ifndef BAIRE_SEPNAME_HPP
#define BAIRE_SEPNAME_HPP

#include <optional>
#include <vector>

#include "baire/expr.hpp"

namespace baire {

struct QueryBit {
  Rat p;
  Rat eps;  // > 0
  int answer = 0;
};

// b = 1 is correct when y < p + eps; b = 0 is correct when y > p - eps.
bool answer_correct(const Rat& y, const Rat& p, const Rat& eps, int b);

// Deterministic answer policy: prefer 1 whenever 1 is correct.
int answer_policy(const Rat& y, const Rat& p, const Rat& eps);

// Stage-w enumeration of Q x Q+ by height (max of |num|+den), documented and
// stable: rationals of equal height ordered by numerator then denominator;
// pairs ordered by max height, then p, then eps.
Pair pair_at(size_t index);
size_t pair_count_up_to_height(int h);

int sepname_bit(const Rat& y, size_t index);

struct Interval {
  std::optional<Rat> lo;  // open bound: y > lo
  std::optional<Rat> hi;  // open bound: y < hi
  bool contains(const Rat& y) const;
  Rat width_or_large() const;
};

// Intersects the constraints of the given bits (bit i refers to pair_at(i))
// until the interval width is at most `precision`; throws on inconsistency.
Interval sepname_decode(const std::vector<int>& bits, const Rat& precision);

}  // namespace baire

#endif
