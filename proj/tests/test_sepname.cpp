#include "doctest.h"

#include "baire/sepname.hpp"

using namespace baire;

namespace {
size_t index_of_pair(const Rat& p, const Rat& e) {
  for (size_t i = 0; i < 4096; ++i) {
    Pair pr = pair_at(i);
    if (pr.p == p && pr.eps == e) return i;
  }
  throw std::runtime_error("pair not enumerated");
}
}  // namespace

TEST_CASE("answer correctness") {
  CHECK(answer_correct(Rat(0), Rat(1, 2), Rat(1, 4), 1));
  // a value exactly at p admits both answers
  CHECK(answer_correct(Rat(1, 3), Rat(1, 3), Rat(1, 8), 0));
  CHECK(answer_correct(Rat(1, 3), Rat(1, 3), Rat(1, 8), 1));
  CHECK_FALSE(answer_correct(Rat(1), Rat(0), Rat(1, 4), 1));
  CHECK(answer_policy(Rat(1, 3), Rat(1, 3), Rat(1, 8)) == 1);
  CHECK_THROWS_AS(answer_correct(Rat(0), Rat(0), Rat(0), 1), precondition_error);
}

TEST_CASE("pairing is stable and total") {
  // no duplicates among the first stretch
  std::set<std::pair<std::string, std::string>> seen;
  for (size_t i = 0; i < 500; ++i) {
    Pair pr = pair_at(i);
    CHECK(pr.eps > Rat(0));
    CHECK(seen.insert({pr.p.str(), pr.eps.str()}).second);
  }
  CHECK(pair_count_up_to_height(3) > 4);
}

TEST_CASE("separation bits") {
  size_t i = index_of_pair(Rat(1, 2), Rat(1, 4));
  CHECK(sepname_bit(Rat(0), i) == 1);
  CHECK(sepname_bit(Rat(1), i) == 0);
}

TEST_CASE("decode round trip") {
  Rat y(2, 3);
  std::vector<int> bits;
  for (size_t i = 0; i < 20000; ++i) bits.push_back(sepname_bit(y, i));
  Interval iv = sepname_decode(bits, Rat(1, 4));
  CHECK(iv.contains(y));
  CHECK(iv.width_or_large() <= Rat(1, 4));
  // more bits only narrow the interval
  Interval fine = sepname_decode(bits, Rat(1, 1024));
  CHECK(fine.contains(y));
  CHECK(fine.width_or_large() <= iv.width_or_large());
  // flipping a forced bit makes the name inconsistent
  size_t lo = index_of_pair(Rat(0), Rat(1, 4));
  size_t hi = index_of_pair(Rat(1), Rat(1, 4));
  std::vector<int> bad(std::max(lo, hi) + 1, 0);
  for (size_t i = 0; i < bad.size(); ++i) bad[i] = sepname_bit(y, i);
  bad[lo] = 1;  // claims y < 1/4
  bad[hi] = 0;  // claims y > 3/4
  CHECK_THROWS_AS(sepname_decode(bad, Rat(1, 1024)), error);
}
