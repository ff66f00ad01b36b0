#include "doctest.h"

#include <random>

#include "baire/corpus.hpp"
#include "baire/expr.hpp"
#include "baire/parse.hpp"

using namespace baire;

TEST_CASE("point canonicalization") {
  CHECK(Point("01", 1) == Point("0", 1));
  CHECK(parse_point("01~1").str() == "0~1");
  CHECK(parse_point("~0") == Point::zeros());
  Point p = parse_point("0110~1");
  CHECK(parse_point(p.str()) == p);
  CHECK(p.bit_at(0) == 0);
  CHECK(p.bit_at(10) == 1);
  // distinct canonical points denote distinct sequences
  CHECK(Point("0", 1) != Point("01", 0));
  CHECK(Point("0", 1).prefix(3) != Point("01", 0).prefix(3));
}

TEST_CASE("eval") {
  CHECK(eval(mk_const(Rat(3)), Point("0110", 1)) == Rat(3));
  ExprPtr f = one_sided_example();
  CHECK(eval(f, parse_point("01~1")) == Rat(0));
  CHECK(eval(f, parse_point("10~0")) == Rat(0));
  CHECK(eval(f, parse_point("00~1")) == Rat(1));
  CHECK(eval(f, parse_point("11~0")) == Rat(-1));
  CHECK(eval(mk_stack_cycle({mk_const(Rat(1))}, Rat(0)), Point::ones()) == Rat(0));
  CHECK(eval(mk_stack_cycle({mk_const(Rat(1))}, Rat(0)), parse_point("110~0")) ==
        Rat(1));
}

TEST_CASE("affine law on random samples") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    ExprPtr f = random_stack_free(rng, 4);
    ExprPtr af = mk_affine(Rat(-3, 2), Rat(1, 3), f);
    for (const auto& x : sample_points(k, 6))
      CHECK(eval(af, x) == Rat(-3, 2) * eval(f, x) + Rat(1, 3));
  }
}

TEST_CASE("range_of") {
  CHECK(range_of(mk_const(Rat(2))).values == std::set<Rat>{Rat(2)});
  CHECK(range_of(one_sided_example()).values ==
        std::set<Rat>{Rat(-1), Rat(0), Rat(1)});
  CHECK(range_of(mk_affine(Rat(2), Rat(1), mk_const(Rat(3)))).values ==
        std::set<Rat>{Rat(7)});
  // an override can hide the base value entirely
  ExprPtr hidden = mk_spike(mk_spike(mk_const(Rat(1)), Point::zeros(), Rat(5)),
                            Point::zeros(), Rat(7));
  CHECK(range_of(hidden).values == std::set<Rat>{Rat(1), Rat(7)});
  CHECK(range_of(mk_sum(mk_const(Rat(1)), mk_const(Rat(2)))).exact == false);
  CHECK(range_of(mk_canon(parse_ordinal("w"), Sidedness::limit)).values ==
        std::set<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("critical pairs") {
  CHECK(critical_pairs(mk_const(Rat(0))).empty());
  auto has = [](const std::vector<Pair>& ps, Rat p, Rat e) {
    for (const auto& pr : ps)
      if (pr.p == p && pr.eps == e) return true;
    return false;
  };
  auto ps01 = critical_pairs(mk_glue(mk_const(Rat(0)), mk_const(Rat(1))));
  CHECK(has(ps01, Rat(1, 2), Rat(1, 4)));
  auto ps3 = critical_pairs(one_sided_example());
  CHECK(has(ps3, Rat(-1, 2), Rat(1, 4)));
  CHECK(has(ps3, Rat(1, 2), Rat(1, 4)));
  CHECK(ps3.size() == 3);  // two gap classes plus the mid-value class
}

TEST_CASE("canon preconditions") {
  CHECK_THROWS_AS(mk_canon(Ordinal(1), Sidedness::left), precondition_error);
  CHECK_THROWS_AS(mk_canon(Ordinal(2), Sidedness::limit), precondition_error);
  CHECK_THROWS_AS(mk_canon(Ordinal::omega(), Sidedness::two), precondition_error);
  CHECK_THROWS_AS(mk_canon(Ordinal(), Sidedness::continuous), precondition_error);
  CHECK_THROWS_AS(mk_affine(Rat(0), Rat(1), mk_const(Rat(0))), precondition_error);
  CHECK_THROWS_AS(mk_stack_fund(Ordinal(3), Sidedness::left, Rat(0)),
                  precondition_error);
}

TEST_CASE("parser") {
  ExprPtr sp = parse_expr("spike(const 1, ~0, 0)");
  CHECK(eval(sp, Point::zeros()) == Rat(0));
  CHECK(eval(sp, Point::ones()) == Rat(1));
  ExprPtr paper = parse_expr("glue(spike(const 1, ~1, 0), spike(const -1, ~0, 0))");
  CHECK(format_expr(paper) == format_expr(one_sided_example()));
  ExprPtr cn = parse_expr("canon(w+1, left)");
  CHECK(format_expr(cn) == "canon(w + 1, left)");
  CHECK_THROWS_AS(parse_expr("spike(const 1, ~0"), parse_error);
  CHECK_THROWS_AS(parse_expr("affine(0, 1, const 2)"), parse_error);
  CHECK_THROWS_AS(parse_expr("canon(2, limit)"), parse_error);
  // format round trip across the corpus
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    ExprPtr f = random_stack_free(rng, 5);
    CHECK(format_expr(parse_expr(format_expr(f))) == format_expr(f));
  }
}

TEST_CASE("semicontinuity") {
  CHECK(is_lsc(mk_const(Rat(0))));
  CHECK(is_usc(mk_const(Rat(0))));
  CHECK(is_lsc(mk_canon(Ordinal(2), Sidedness::left)));
  CHECK_FALSE(is_lsc(mk_canon(Ordinal(2), Sidedness::right)));
  CHECK(is_usc(mk_canon(Ordinal(2), Sidedness::right)));
  CHECK_FALSE(is_lsc(mk_canon(Ordinal(3), Sidedness::left)));
  CHECK_FALSE(is_lsc(one_sided_example()));
  CHECK(is_lsc(mk_neg(mk_canon(Ordinal(2), Sidedness::right))));
  CHECK_THROWS_AS(is_lsc(mk_sum(mk_const(Rat(0)), mk_const(Rat(1)))),
                  unsupported_error);
}

TEST_CASE("truncation produces stack-free expressions") {
  ExprPtr c3 = mk_canon(Ordinal(3), Sidedness::left);
  for (unsigned n = 1; n <= 4; ++n) {
    ExprPtr t = truncate_stacks(c3, n);
    CHECK_FALSE(has_stack(t));
    // the limit value fills the tail
    CHECK(eval(t, Point::ones()) == Rat(0));
  }
}

TEST_CASE("eval lands in the computed range") {
  std::mt19937_64 rng(67);
  auto pts = sample_points(67, 12);
  for (int k = 0; k < 60; ++k) {
    ExprPtr f = random_stack_free(rng, 5);
    RangeInfo ri = range_of(f);
    for (const auto& x : pts) CHECK(ri.values.count(eval(f, x)) == 1);
  }
  for (const auto& o : ordinal_corpus()) {
    if (!o.is_successor() || o == Ordinal(1)) continue;
    ExprPtr f = mk_canon(o, Sidedness::two);
    RangeInfo ri = range_of(f);
    for (const auto& x : pts) CHECK(ri.values.count(eval(f, x)) == 1);
  }
}

TEST_CASE("shadowed overrides are invisible") {
  // the inner value 2 is replaced before it is ever attained
  ExprPtr f = parse_expr(
      "spike(spike(spike(const 1, 11~0, 2), 0~1, -1), 11~0, -1)");
  CHECK(eval(f, parse_point("11~0")) == Rat(-1));
  CHECK(range_of(f).values == std::set<Rat>{Rat(-1), Rat(1)});
  CHECK(is_lsc(f));
  CHECK_FALSE(is_usc(f));
}
