#include "doctest.h"

#include <random>

#include "baire/brute.hpp"
#include "baire/corpus.hpp"
#include "baire/derivation.hpp"

using namespace baire;

namespace {
const Pair kMaster{Rat(1, 2), Rat(1, 4)};
}

TEST_CASE("constant residue") {
  ResidueApprox ra = brute_derive(mk_const(Rat(0)), kMaster, 3);
  REQUIRE(ra.stages.size() == 2);
  CHECK(ra.stages[0].cylinders.size() == 8);
  CHECK(ra.stages[1].cylinders.empty());
  CHECK(ra.stages[1].specials.empty());
  CHECK(ra.exact);
  CHECK(ra.settled);
}

TEST_CASE("spike residue keeps the point one extra stage") {
  ExprPtr f = mk_canon(Ordinal(2), Sidedness::left);
  ResidueApprox ra = brute_derive(f, kMaster, 6);
  REQUIRE(ra.stages.size() == 3);
  CHECK(ra.stages[1].cylinders.empty());
  REQUIRE(ra.stages[1].specials.size() == 1);
  CHECK(ra.stages[1].specials[0] == Point::zeros());
  CHECK(ra.exact);
  auto [a, exact] = brute_alpha(f, kMaster, 6);
  CHECK(a == Ordinal(2));
  CHECK(exact);
}

TEST_CASE("sum of two spikes stays shallow") {
  ExprPtr s = mk_sum(mk_canon(Ordinal(2), Sidedness::left),
                     mk_canon(Ordinal(2), Sidedness::right));
  for (const auto& pr : critical_pairs(s)) {
    auto [a, exact] = brute_alpha(s, pr, 8);
    CHECK(exact);
    CHECK(cmp(a, Ordinal(3)) != Order::greater);
  }
}

TEST_CASE("stacks are lower bounds only") {
  ExprPtr f = mk_canon(Ordinal::omega(), Sidedness::limit);
  auto [a, exact] = brute_alpha(f, kMaster, 6);
  CHECK_FALSE(exact);
  CHECK(cmp(a, Ordinal(1)) == Order::greater);
  // the rank-3 tower's tail cylinder straddles past the horizon, so the
  // count is a lower bound
  auto [a3, e3] = brute_alpha(mk_canon(Ordinal(3), Sidedness::left), kMaster, 8);
  CHECK(cmp(a3, Ordinal(2)) != Order::less);
  CHECK_FALSE(e3);
}

TEST_CASE("stages shrink monotonically") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    ExprPtr f = random_stack_free(rng, 5);
    for (const auto& pr : critical_pairs(f)) {
      ResidueApprox ra = brute_derive(f, pr, default_brute_depth(f));
      for (size_t i = 1; i < ra.stages.size(); ++i) {
        CHECK(ra.stages[i].cylinders.size() <= ra.stages[i - 1].cylinders.size());
        CHECK(ra.stages[i].specials.size() <= ra.stages[i - 1].specials.size());
      }
      CHECK(ra.settled);
    }
  }
}

TEST_CASE("trace serialization") {
  ResidueApprox ra = brute_derive(mk_const(Rat(0)), kMaster, 2);
  std::string t = residue_trace_jsonl(ra);
  CHECK(t.find("\"cylinders\"") != std::string::npos);
  CHECK(std::count(t.begin(), t.end(), '\n') == 2);
}

TEST_CASE("combined-derivation inclusion instances") {
  ExprPtr c0 = mk_const(Rat(0));
  CHECK(check_L1(c0, kMaster, c0, kMaster, 4).ok);
  ExprPtr l = mk_canon(Ordinal(2), Sidedness::left);
  ExprPtr r = mk_canon(Ordinal(2), Sidedness::right);
  for (const auto& pf : critical_pairs(l))
    for (const auto& pg : critical_pairs(r))
      CHECK(check_L1(l, pf, r, pg, 8).ok);
  ExprPtr t3 = truncate_stacks(mk_canon(Ordinal(3), Sidedness::two), 3);
  CHECK(check_L1(t3, kMaster, l, kMaster, 8).ok);
  CHECK_THROWS_AS(check_L1(mk_canon(Ordinal(3), Sidedness::two), kMaster, l,
                           kMaster, 6),
                  precondition_error);
}
