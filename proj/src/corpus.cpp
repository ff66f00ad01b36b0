#include "baire/corpus.hpp"

namespace baire {

namespace {

Rat random_value(std::mt19937_64& rng) {
  static const Rat vals[] = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
                             Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
  return vals[rng() % 8];
}

Point random_point(std::mt19937_64& rng, size_t max_word = 4) {
  size_t len = rng() % (max_word + 1);
  std::string w;
  for (size_t i = 0; i < len; ++i) w.push_back((rng() & 1) ? '1' : '0');
  return Point(w, static_cast<int>(rng() & 1));
}

}  // namespace

ExprPtr random_stack_free(std::mt19937_64& rng, int depth) {
  if (depth <= 1) return mk_const(random_value(rng));
  switch (rng() % 8) {
    case 0:
    case 1:
      return mk_const(random_value(rng));
    case 2: {
      static const Rat as[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-1, 2)};
      return mk_affine(as[rng() % 5], random_value(rng),
                       random_stack_free(rng, depth - 1));
    }
    case 3:
    case 4:
      return mk_glue(random_stack_free(rng, depth - 1),
                     random_stack_free(rng, depth - 1));
    default:
      return mk_spike(random_stack_free(rng, depth - 1), random_point(rng),
                      random_value(rng));
  }
}

std::vector<Ordinal> ordinal_corpus() {
  std::vector<Ordinal> out;
  Ordinal w = Ordinal::omega();
  Ordinal w2 = Ordinal::omega_pow(Ordinal(2));
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; b <= 3; ++b) {
      for (unsigned c = 0; c <= 3; ++c) {
        if (a == 2 && (b || c)) continue;  // stay at or below w^2*2
        Ordinal o;
        if (a) o = Ordinal::omega_pow(Ordinal(2), a);
        if (b) o = add(o, mul_nat(w, b));
        if (c) o = add(o, Ordinal(c));
        if (!o.is_zero()) out.push_back(o);
      }
    }
  }
  return out;
}

ExprPtr one_sided_example() {
  return mk_glue(mk_spike(mk_const(Rat(1)), Point::ones(), Rat(0)),
                 mk_spike(mk_const(Rat(-1)), Point::zeros(), Rat(0)));
}

Corpus make_corpus(uint64_t seed, size_t stack_free_count) {
  Corpus c;
  std::mt19937_64 rng(seed);
  while (c.stack_free.size() < stack_free_count)
    c.stack_free.push_back(random_stack_free(rng, 2 + static_cast<int>(rng() % 5)));
  for (const auto& o : ordinal_corpus()) {
    if (o == Ordinal(1)) {
      c.canons.push_back(mk_canon(o, Sidedness::continuous));
    } else if (o.is_limit()) {
      c.canons.push_back(mk_canon(o, Sidedness::limit));
    } else {
      for (Sidedness s : {Sidedness::left, Sidedness::right, Sidedness::two,
                          Sidedness::one_neither})
        c.canons.push_back(mk_canon(o, s));
    }
  }
  c.all = c.stack_free;
  c.all.insert(c.all.end(), c.canons.begin(), c.canons.end());
  c.all.push_back(one_sided_example());
  return c;
}

std::vector<Point> sample_points(uint64_t seed, size_t n) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Point> pts = {Point::zeros(), Point::ones()};
  while (pts.size() < n) {
    Point q = random_point(rng, 6);
    bool dup = false;
    for (const auto& p : pts) dup = dup || p == q;
    if (!dup) pts.push_back(q);
  }
  return pts;
}

}  // namespace baire
