#include "doctest.h"

#include <random>

#include "baire/corpus.hpp"
#include "baire/degrees.hpp"
#include "baire/parse.hpp"

using namespace baire;

namespace {
ExprPtr cn(const std::string& o, Sidedness s) { return mk_canon(parse_ordinal(o), s); }
}  // namespace

TEST_CASE("m-reducibility verdicts") {
  ExprPtr l = cn("2", Sidedness::left), r = cn("2", Sidedness::right);
  CHECK_FALSE(decide_m(l, r).holds);
  CHECK_FALSE(decide_m(r, l).holds);
  CHECK(decide_m(l, l).holds);
  CHECK(decide_m(one_sided_example(), cn("2", Sidedness::two)).holds);
  CHECK_FALSE(decide_m(cn("2", Sidedness::two), one_sided_example()).holds);
  CHECK(decide_m(l, one_sided_example()).holds);  // one-sided sits above both
  CHECK_FALSE(decide_m(one_sided_example(), l).holds);
  // constant / continuous edge rules
  ExprPtr c0 = mk_const(Rat(0)), c7 = mk_const(Rat(7));
  ExprPtr gl = mk_glue(mk_const(Rat(0)), mk_const(Rat(1)));
  CHECK(decide_m(c0, c7).holds);
  CHECK(decide_m(gl, l).holds);
  CHECK_FALSE(decide_m(gl, c0).holds);
  CHECK(decide_m(c0, gl).holds);
  // limit collapse: one degree at each limit rank
  ExprPtr w1 = cn("w", Sidedness::limit);
  CHECK(decide_m(w1, mk_neg(w1)).holds);
  CHECK(decide_m(mk_neg(w1), w1).holds);
}

TEST_CASE("tt1 verdicts") {
  CHECK(decide_tt1(cn("2", Sidedness::left), cn("2", Sidedness::right)));
  CHECK_FALSE(decide_tt1(cn("3", Sidedness::left), cn("2", Sidedness::two)));
  ExprPtr f = one_sided_example();
  CHECK(decide_tt1(f, f));
}

TEST_CASE("tt verdicts") {
  CHECK_FALSE(decide_tt(cn("w+1", Sidedness::left), cn("w", Sidedness::limit)));
  CHECK(decide_tt(cn("4", Sidedness::two), cn("w", Sidedness::limit)));
  CHECK(decide_tt(cn("5", Sidedness::left), cn("2", Sidedness::right)));
  CHECK_FALSE(decide_tt(cn("w+1", Sidedness::left), cn("5", Sidedness::two)));
  // xi levels agree: rank w and rank 4 share level 1
  CHECK(decide_tt(cn("w", Sidedness::limit), cn("4", Sidedness::two)));
}

TEST_CASE("T verdicts") {
  CHECK(decide_T(cn("9", Sidedness::two), cn("2", Sidedness::left)));
  CHECK_FALSE(decide_T(cn("2", Sidedness::left),
                       mk_glue(mk_const(Rat(0)), mk_const(Rat(1)))));
  CHECK(decide_T(mk_const(Rat(0)), mk_const(Rat(7))));
  CHECK(decide_T(mk_glue(mk_const(Rat(0)), mk_const(Rat(1))), mk_const(Rat(7))));
}

TEST_CASE("dichotomy instances") {
  CHECK(dichotomy_check(cn("2", Sidedness::left), cn("2", Sidedness::right)));
  ExprPtr f = one_sided_example();
  CHECK(dichotomy_check(f, f));
  CHECK(dichotomy_check(cn("3", Sidedness::two), cn("2", Sidedness::left)));
}

TEST_CASE("preorder laws on a mixed sample") {
  Corpus c = make_corpus(41, 12);
  std::vector<ExprPtr> fs(c.all.begin(), c.all.begin() + 8);
  fs.push_back(cn("2", Sidedness::left));
  fs.push_back(cn("3", Sidedness::two));
  fs.push_back(cn("w", Sidedness::limit));
  fs.push_back(mk_const(Rat(0)));
  auto m = [&](size_t i, size_t j) { return decide_m(fs[i], fs[j]).holds; };
  auto t1 = [&](size_t i, size_t j) { return decide_tt1(fs[i], fs[j]); };
  auto tt = [&](size_t i, size_t j) { return decide_tt(fs[i], fs[j]); };
  auto tT = [&](size_t i, size_t j) { return decide_T(fs[i], fs[j]); };
  for (size_t i = 0; i < fs.size(); ++i) {
    CHECK(m(i, i));
    CHECK(t1(i, i));
    CHECK(tt(i, i));
    CHECK(tT(i, i));
    for (size_t j = 0; j < fs.size(); ++j) {
      // the implication chain, away from the constant-target corner
      if (m(i, j)) CHECK(t1(i, j));
      if (t1(i, j) && !is_constant(fs[j])) CHECK(tt(i, j));
      if (tt(i, j)) CHECK(tT(i, j));
      for (size_t k = 0; k < fs.size(); ++k) {
        if (m(i, j) && m(j, k)) CHECK(m(i, k));
        if (t1(i, j) && t1(j, k)) CHECK(t1(i, k));
        if (tt(i, j) && tt(j, k)) CHECK(tt(i, k));
        if (tT(i, j) && tT(j, k)) CHECK(tT(i, k));
      }
    }
  }
}

TEST_CASE("strict rank rule") {
  std::vector<ExprPtr> fs = {cn("2", Sidedness::left), cn("3", Sidedness::right),
                             cn("4", Sidedness::one_neither),
                             cn("w+1", Sidedness::two)};
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j)
      CHECK(decide_m(fs[i], fs[j]).holds);
}

TEST_CASE("diagram output") {
  std::string one = degree_diagram({mk_const(Rat(0))});
  CHECK(one.find("n0") != std::string::npos);
  CHECK(one.find("n1") == std::string::npos);
  CHECK(one.find("rank=1") != std::string::npos);
  // equivalent functions collapse into one node
  DegreeGraph gr = degree_graph({cn("2", Sidedness::left), cn("2", Sidedness::left)});
  CHECK(gr.classes.size() == 1);
  CHECK(gr.classes[0].size() == 2);
  CHECK(gr.edges.empty());
}
