#ifndef BAIRE_CORPUS_HPP
#define BAIRE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "baire/expr.hpp"

namespace baire {

// Deterministic test corpus; everything flows from the seed.
struct Corpus {
  std::vector<ExprPtr> stack_free;
  std::vector<ExprPtr> canons;
  std::vector<ExprPtr> all;
};

Corpus make_corpus(uint64_t seed, size_t stack_free_count = 200);

// All nonzero CNF ordinals up to w^2*2 with coefficients <= 3.
std::vector<Ordinal> ordinal_corpus();

// Random stack-free expression of the given structural depth budget.
ExprPtr random_stack_free(std::mt19937_64& rng, int depth);

std::vector<Point> sample_points(uint64_t seed, size_t n);

// The one-sided example: value 1 on [0] except one point, -1 on [1] except
// one point, 0 at the two exceptional points.
ExprPtr one_sided_example();

}  // namespace baire

#endif
