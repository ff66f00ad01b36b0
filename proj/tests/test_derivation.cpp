#include "doctest.h"

#include <random>

#include "baire/brute.hpp"
#include "baire/corpus.hpp"
#include "baire/derivation.hpp"
#include "baire/parse.hpp"

using namespace baire;

namespace {
const Pair kMaster{Rat(1, 2), Rat(1, 4)};
ExprPtr canon2l() { return mk_canon(Ordinal(2), Sidedness::left); }
}  // namespace

TEST_CASE("profiles of small expressions") {
  Profile p = derive_profile(mk_const(Rat(0)), kMaster);
  CHECK(p.alpha == Ordinal(1));
  CHECK(p.last_sides == kLowBit);
  CHECK(p.mu_low == Ordinal());
  CHECK(p.mu_high == Ordinal(1));

  Profile q = derive_profile(canon2l(), kMaster);
  CHECK(q.alpha == Ordinal(2));
  CHECK(q.last_sides == kLowBit);
  CHECK(q.mu_low == Ordinal(1));
  CHECK(q.mu_high == Ordinal(2));

  ExprPtr one = one_sided_example();
  Profile r1 = derive_profile(one, kMaster);
  CHECK(r1.alpha == Ordinal(2));
  CHECK(r1.last_sides == kLowBit);
  Profile r2 = derive_profile(one, Pair{Rat(-1, 2), Rat(1, 4)});
  CHECK(r2.alpha == Ordinal(2));
  CHECK(r2.last_sides == kHighBit);
  // both split sets cover the space at this pair, so one stage clears it
  Profile r3 = derive_profile(one, Pair{Rat(0), Rat(1, 4)});
  CHECK(r3.alpha == Ordinal(1));
}

TEST_CASE("alpha_rank") {
  CHECK(alpha_rank(mk_const(Rat(7, 3))) == Ordinal(1));
  CHECK(alpha_rank(one_sided_example()) == Ordinal(2));
  CHECK(alpha_rank(mk_canon(Ordinal::omega(), Sidedness::limit)) ==
        Ordinal::omega());
  CHECK(alpha_rank(mk_canon(parse_ordinal("w^2"), Sidedness::limit)) ==
        parse_ordinal("w^2"));
}

TEST_CASE("point ranks") {
  CHECK(point_rank(mk_const(Rat(0)), kMaster, parse_point("0110~1")) ==
        Ordinal(1));
  CHECK(point_rank(canon2l(), kMaster, Point::zeros()) == Ordinal(2));
  CHECK(point_rank(canon2l(), kMaster, parse_point("10~0")) == Ordinal(1));
  // point ranks are always successors across the corpus
  Corpus c = make_corpus(3, 40);
  auto pts = sample_points(3, 10);
  for (const auto& f : c.all)
    for (const auto& pr : critical_pairs(f))
      for (const auto& x : pts)
        CHECK(point_rank(f, pr, x).is_successor());
}

TEST_CASE("classification examples") {
  CHECK(classify(canon2l()) == Sidedness::left);
  CHECK(classify(one_sided_example()) == Sidedness::one_neither);
  CHECK(classify(mk_const(Rat(5))) == Sidedness::continuous);
  CHECK(classify(mk_glue(mk_const(Rat(0)), mk_const(Rat(1)))) ==
        Sidedness::continuous);
}

TEST_CASE("maximal pairs") {
  auto mp = maximal_pairs(canon2l());
  bool found = false;
  for (const auto& pr : mp) found = found || (pr.p == Rat(1, 2) && pr.eps == Rat(1, 4));
  CHECK(found);
  CHECK(maximal_pairs(mk_const(Rat(0))).empty());
  CHECK_THROWS_AS(maximal_pairs(mk_canon(Ordinal::omega(), Sidedness::limit)),
                  precondition_error);
  // a two-sided witness pair exists at rank 3
  auto mp3 = maximal_pairs(mk_canon(Ordinal(3), Sidedness::two));
  bool two = false;
  for (const auto& pr : mp3) {
    Profile p = derive_profile(mk_canon(Ordinal(3), Sidedness::two), pr);
    two = two || ((p.last_sides & kLowBit) && (p.last_sides & kHighBit));
  }
  CHECK(two);
}

TEST_CASE("canonical family round trip") {
  for (const auto& o : ordinal_corpus()) {
    std::vector<Sidedness> sides;
    if (o == Ordinal(1)) {
      sides = {Sidedness::continuous};
    } else if (o.is_limit()) {
      sides = {Sidedness::limit};
    } else {
      sides = {Sidedness::left, Sidedness::right, Sidedness::two,
               Sidedness::one_neither};
    }
    for (Sidedness s : sides) {
      ExprPtr f = mk_canon(o, s);
      CHECK(alpha_rank(f) == o);
      CHECK(classify(f) == s);
    }
  }
}

TEST_CASE("negation duality") {
  Corpus c = make_corpus(9, 50);
  for (const auto& f : c.all) {
    ExprPtr nf = mk_neg(f);
    CHECK(alpha_rank(nf) == alpha_rank(f));
    Sidedness s = classify(f), ns = classify(nf);
    switch (s) {
      case Sidedness::left: CHECK(ns == Sidedness::right); break;
      case Sidedness::right: CHECK(ns == Sidedness::left); break;
      default: CHECK(ns == s);
    }
  }
}

TEST_CASE("successor law on profiles") {
  Corpus c = make_corpus(17, 60);
  for (const auto& f : c.all) {
    if (has_stack(f) && !alpha_rank(f).is_successor()) continue;  // declared limit
    for (const auto& pr : critical_pairs(f))
      CHECK(derive_profile(f, pr).alpha.is_successor());
  }
}

namespace {
// Replaces the root stack's sequence by its first n copies over a Const
// filler, leaving the copies themselves intact.
ExprPtr truncate_top(const ExprPtr& stack, unsigned n) {
  const auto& st = std::get<StackE>(stack->node);
  ExprPtr acc = mk_const(st.v);
  for (unsigned i = n; i-- > 0;) acc = mk_glue(stack_copy(st, i), acc);
  return acc;
}
}  // namespace

TEST_CASE("truncation coherence for stacks") {
  // Ranks of n-copy truncations are nondecreasing with sup + 1 equal to the
  // full stack's rank (the limit value survives every copy stage).
  for (Sidedness s : {Sidedness::left, Sidedness::right}) {
    for (unsigned full = 3; full <= 5; ++full) {
      ExprPtr stack = canon_expand(Ordinal(full), s);
      Ordinal prev;
      for (unsigned n = 1; n <= 6; ++n) {
        Ordinal rn = alpha_rank(truncate_top(stack, n));
        CHECK(cmp(prev, rn) != Order::greater);
        prev = rn;
      }
      CHECK(successor(prev) == Ordinal(full));
    }
  }
  // At a limit, the truncation ranks climb cofinally instead of stabilizing.
  ExprPtr lim = canon_expand(Ordinal::omega(), Sidedness::limit);
  Ordinal prev;
  for (unsigned n = 1; n <= 6; ++n) {
    Ordinal rn = alpha_rank(truncate_top(lim, n));
    CHECK(cmp(prev, rn) == Order::less);
    prev = rn;
  }
}

TEST_CASE("rank one means continuity") {
  // Continuity has an independent structural certificate: lower and upper
  // semicontinuity together.
  std::mt19937_64 rng(23);
  for (int k = 0; k < 150; ++k) {
    ExprPtr f = random_stack_free(rng, 5);
    bool cont = is_lsc(f) && is_usc(f);
    CHECK(cont == (alpha_rank(f) == Ordinal(1)));
  }
}

TEST_CASE("mask and witness agree") {
  Deriver& d = honest_deriver();
  Corpus c = make_corpus(29, 30);
  for (const auto& f : c.all) {
    for (const auto& pr : critical_pairs(f)) {
      for (const std::string& sigma : {std::string(), std::string("0"),
                                       std::string("1"), std::string("10")}) {
        MaskSeg m = d.cyl_mask(f, pr, sigma, PointSet{});
        for (const auto& [mu, mask] : m) {
          for (Region r : {Region::low, Region::mid, Region::high}) {
            bool present = (mask & region_bit(r)) != 0;
            auto wit = d.find_witness(f, pr, sigma, PointSet{}, r, mu);
            CHECK(wit.has_value() == present);
            if (wit) {
              CHECK(region_of(eval(f, *wit), pr) == r);
              CHECK(wit->in_cylinder(sigma));
              CHECK(cmp(d.point_exit(f, pr, *wit), mu) == Order::greater);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("critical pairs realize the rank supremum") {
  // A sweep of arbitrary rational pairs never beats the critical-pair max;
  // the brute oracle arbitrates.
  std::mt19937_64 rng(71);
  auto rand_rat = [&](long long span) {
    long long den = 1 + static_cast<long long>(rng() % 6);
    long long num = static_cast<long long>(rng() % (2 * span * den + 1)) - span * den;
    return Rat(num, den);
  };
  for (int k = 0; k < 12; ++k) {
    ExprPtr f = random_stack_free(rng, 5);
    size_t depth = default_brute_depth(f);
    Ordinal best(1);
    for (const auto& pr : critical_pairs(f)) {
      auto [a, exact] = brute_alpha(f, pr, depth);
      REQUIRE(exact);
      if (cmp(a, best) == Order::greater) best = a;
    }
    CHECK(best == alpha_rank(f));
    for (int s = 0; s < 200; ++s) {
      Pair pr{rand_rat(3), Rat(1 + static_cast<long long>(rng() % 8),
                               1 + static_cast<long long>(rng() % 8))};
      auto [a, exact] = brute_alpha(f, pr, depth);
      REQUIRE(exact);
      CHECK(cmp(a, best) != Order::greater);
    }
  }
}

TEST_CASE("spike compositions") {
  // overriding a spike at the same point replaces it outright
  ExprPtr flat = mk_spike(mk_canon(Ordinal(2), Sidedness::left), Point::zeros(),
                          Rat(1));
  CHECK(alpha_rank(flat) == Ordinal(1));

  // overriding a stack's limit value to the copies' spike side lets the
  // limit point leave with them, dropping the rank by one
  ExprPtr tower = canon_expand(Ordinal(3), Sidedness::left);
  ExprPtr flipped = mk_spike(tower, Point::ones(), Rat(1));
  CHECK(alpha_rank(flipped) == Ordinal(2));
  CHECK(classify(flipped) == Sidedness::right);
  CHECK(point_rank(flipped, Pair{Rat(1, 2), Rat(1, 4)}, Point::ones()) ==
        Ordinal(2));
  ExprPtr same = mk_spike(tower, Point::ones(), Rat(0));
  CHECK(alpha_rank(same) == Ordinal(3));
  CHECK(classify(same) == Sidedness::left);

  // a spike planted inside a stack copy raises only that copy's stage
  ExprPtr st = mk_stack_cycle({mk_const(Rat(1))}, Rat(0));
  ExprPtr planted = mk_spike(st, parse_point("00~0"), Rat(5));
  Profile p = derive_profile(planted, Pair{Rat(3), Rat(1)});
  CHECK(p.alpha == Ordinal(2));
  CHECK(point_rank(planted, Pair{Rat(3), Rat(1)}, parse_point("00~0")) ==
        Ordinal(2));
  CHECK(point_rank(planted, Pair{Rat(3), Rat(1)}, Point::ones()) == Ordinal(1));
}

TEST_CASE("composites around limit representatives") {
  ExprPtr lim = mk_canon(Ordinal::omega(), Sidedness::limit);
  ExprPtr glued = mk_glue(lim, mk_const(Rat(0)));
  CHECK(alpha_rank(glued) == Ordinal::omega());
  CHECK(classify(glued) == Sidedness::limit);
  CHECK(alpha_rank(mk_affine(Rat(-1), Rat(0), lim)) == Ordinal::omega());
}
