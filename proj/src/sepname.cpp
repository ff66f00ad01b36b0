#include "baire/sepname.hpp"

#include <numeric>

namespace baire {

bool answer_correct(const Rat& y, const Rat& p, const Rat& eps, int b) {
  if (!(eps > Rat(0))) throw precondition_error("eps must be positive");
  return b == 1 ? y < p + eps : y > p - eps;
}

int answer_policy(const Rat& y, const Rat& p, const Rat& eps) {
  return answer_correct(y, p, eps, 1) ? 1 : 0;
}

namespace {

// Reduced rationals with |num| + den == h, ordered by numerator then den.
void rationals_of_height(int h, bool positive_only, std::vector<Rat>& out) {
  for (long long num = -(h - 1); num <= h - 1; ++num) {
    long long den = h - (num < 0 ? -num : num);
    if (den <= 0) continue;
    if (positive_only && num <= 0) continue;
    if (std::gcd(num < 0 ? -num : num, den) != 1 && num != 0) continue;
    if (num == 0 && den != 1) continue;
    out.push_back(Rat(num, den));
  }
}

void pairs_of_height(int h, std::vector<Pair>& out) {
  // All (p, eps) with max(height p, height eps) == h.
  std::vector<Rat> ps, es, ps_below, es_below;
  for (int k = 1; k < h; ++k) {
    rationals_of_height(k, false, ps_below);
    rationals_of_height(k, true, es_below);
  }
  rationals_of_height(h, false, ps);
  rationals_of_height(h, true, es);
  for (const auto& p : ps) {
    for (const auto& e : es_below) out.push_back({p, e});
    for (const auto& e : es) out.push_back({p, e});
  }
  for (const auto& p : ps_below)
    for (const auto& e : es) out.push_back({p, e});
}

}  // namespace

namespace {
const std::vector<Pair>& pair_table(size_t need) {
  thread_local std::vector<Pair> table;
  thread_local int height = 0;
  while (table.size() <= need && height < 128) {
    ++height;
    pairs_of_height(height, table);
  }
  return table;
}
}  // namespace

Pair pair_at(size_t index) {
  const auto& t = pair_table(index);
  if (index >= t.size())
    throw precondition_error("separation bit index out of supported range");
  return t[index];
}

size_t pair_count_up_to_height(int h) {
  size_t n = 0;
  for (int k = 1; k <= h; ++k) {
    std::vector<Pair> v;
    pairs_of_height(k, v);
    n += v.size();
  }
  return n;
}

int sepname_bit(const Rat& y, size_t index) {
  Pair pr = pair_at(index);
  return answer_policy(y, pr.p, pr.eps);
}

bool Interval::contains(const Rat& y) const {
  if (lo && !(y > *lo)) return false;
  if (hi && !(y < *hi)) return false;
  return true;
}

Rat Interval::width_or_large() const {
  if (lo && hi) return *hi - *lo;
  return Rat(1u << 30);
}

Interval sepname_decode(const std::vector<int>& bits, const Rat& precision) {
  Interval iv;
  for (size_t i = 0; i < bits.size(); ++i) {
    Pair pr = pair_at(i);
    if (bits[i] == 1) {
      Rat b = pr.p + pr.eps;
      if (!iv.hi || b < *iv.hi) iv.hi = b;
    } else {
      Rat b = pr.p - pr.eps;
      if (!iv.lo || b > *iv.lo) iv.lo = b;
    }
    if (iv.lo && iv.hi && !(*iv.lo < *iv.hi))
      throw error("inconsistent separation name");
    if (iv.width_or_large() <= precision) break;
  }
  return iv;
}

}  // namespace baire
