#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qgordon/partitions.hpp"
#include "qgordon/qcomb.hpp"

using namespace qgordon;

namespace {
QPoly from_coeffs(long long min_exp, std::vector<long long> v) {
  std::vector<Int> c(v.begin(), v.end());
  return QPoly(min_exp, std::move(c));
}
const Partition kExample{9, 7, 5, 4, 4, 3, 1, 1};  // the worked dissection example
}  // namespace

TEST_CASE("weight and conjugate") {
  CHECK(partition_weight({}) == 0);
  CHECK(partition_weight(kExample) == 34);
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(conjugate(kExample)) == kExample);
  CHECK(conjugate({}).empty());
}

TEST_CASE("frequency-vector enumeration") {
  // f_1 <= 1, f_3 <= 1, f_j + f_{j+1} <= 1: exactly 0, {1}, {2}, {3}, {1,3}
  std::set<std::vector<long long>> seen;
  enumerate_frequency_partitions(1, 2, 2, 4, [&](const FrequencyVector& f) {
    CHECK(seen.insert(f).second);  // no duplicates
  });
  CHECK(seen.size() == 5);
  std::set<long long> weights;
  for (const auto& f : seen) {
    long long w = 0;
    for (size_t j = 0; j < f.size(); ++j) w += (long long)(j + 1) * f[j];
    weights.insert(w);
  }
  CHECK(weights == std::set<long long>{0, 1, 2, 3, 4});
  // L <= 1 produces only the empty vector
  for (long long L : {0LL, 1LL}) {
    int count = 0;
    enumerate_frequency_partitions(2, 3, 1, L, [&](const FrequencyVector& f) {
      CHECK(f.empty());
      ++count;
    });
    CHECK(count == 1);
  }
  int count = 0;
  enumerate_frequency_partitions(2, 3, 3, 3, [&](const FrequencyVector&) { ++count; });
  CHECK(count == 6);
  CHECK_THROWS(enumerate_frequency_partitions(0, 1, 1, 2, [](const FrequencyVector&) {}));
}

TEST_CASE("gen_func_bruteforce oracles") {
  CHECK(gen_func_bruteforce(1, 2, 2, 4) == from_coeffs(0, {1, 1, 1, 1, 1}));
  // L = 0 boundary is the delta initial condition
  for (int i = 1; i <= 3; ++i)
    for (int ip = 1; ip <= 3; ++ip)
      CHECK(gen_func_bruteforce(2, i, ip, 0) == (i == ip ? QPoly::one() : QPoly::zero()));
  // L = 2: one vector per f_1 in 0..min(i-1, i'-1)
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= k + 1; ++i)
      for (int ip = 1; ip <= k + 1; ++ip) {
        QPoly expect;
        for (long long l = 0; l <= std::min(i, ip) - 1; ++l) expect += QPoly::monomial(1, l);
        CHECK(gen_func_bruteforce(k, i, ip, 2) == expect);
      }
}

TEST_CASE("row-removal recurrence for the generating function") {
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= k + 1; ++i)
      for (int ip = 1; ip <= k + 1; ++ip)
        for (long long L = 1; L <= 6; ++L) CHECK(check_grec(k, i, ip, L));
}

TEST_CASE("Durfee square and rectangle sizes") {
  CHECK(durfee_square_size(kExample) == 4);
  CHECK(durfee_square_size({}) == 0);
  CHECK(durfee_square_size({7}) == 1);
  CHECK(durfee_rectangle_size(kExample) == 4);
  CHECK(durfee_rectangle_size({}) == 0);
  CHECK(durfee_rectangle_size({1}) == 0);  // needs two rows of length >= 1
  CHECK(durfee_rectangle_size({1, 1}) == 1);
}

TEST_CASE("successive Durfee dissection") {
  CHECK(dissect({}, 3, 2) == std::vector<long long>{0, 0, 0});
  // four successive squares followed by rectangles on the worked example
  CHECK(dissect(kExample, 4, 5) == std::vector<long long>{4, 2, 1, 1});
  // small hand case: 2+1 with one square then one rectangle
  CHECK(dissect({2, 1}, 2, 2) == std::vector<long long>{1, 0});
}

TEST_CASE("admissibility") {
  CHECK(is_admissible({}, 2, 3, 4, 0));
  CHECK_FALSE(is_admissible({}, 2, 3, 4, 1));
  // largest part above L fails
  CHECK_FALSE(is_admissible({5}, 1, 2, 4, 1));
  // a part below a width-0 rectangle fails
  CHECK_FALSE(is_admissible({1}, 1, 1, 4, 0));
  // single part n <= L is a size-1 Durfee square for i = 2, k = 1
  CHECK(is_admissible({3}, 1, 2, 4, 1));
}

TEST_CASE("admissible generating function oracles") {
  CHECK(gen_func_admissible(1, 2, 3, 1) == from_coeffs(1, {1, 1, 1}));
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= k + 1; ++i)
      for (long long L = 0; L <= 3; ++L) CHECK(gen_func_admissible(k, i, L, 0) == QPoly::one());
  // the Durfee-count generating function equality on a small grid
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= k + 1; ++i)
      for (long long L = 0; L <= 4; ++L)
        for (long long a = 0; a <= 4; ++a)
          CHECK(gen_func_admissible(k, i, L, a) == q_multinomial_tilde(L, a, k - i + 1, k));
}

TEST_CASE("column bijection") {
  CHECK(add_column({}, 0).empty());
  CHECK(add_column({2, 1}, 3) == Partition{3, 2, 1});
  CHECK(remove_column({3, 2, 1}) == Partition{2, 1});
  CHECK_THROWS(add_column({2, 1}, 1));  // more parts than the column height
  // round trip and unique-m classification on admissible partitions
  for (int k = 1; k <= 2; ++k)
    for (long long L = 1; L <= 4; ++L)
      for (long long a = 0; a <= 4; ++a)
        enumerate_box_partitions(L, a + k, [&](const Partition& p) {
          if (!is_admissible(p, k, k + 1, L, a)) return;
          REQUIRE((long long)p.size() == a);
          Partition pi = remove_column(p);
          CHECK(add_column(pi, a) == p);
          int hits = 0;
          for (int m = 0; m <= std::min<long long>(k, a); ++m)
            if (is_admissible(pi, k, k - m + 1, L - 1, a - m)) ++hits;
          CHECK(hits == 1);
        });
}

TEST_CASE("successive ranks") {
  CHECK(successive_ranks({}).empty());
  CHECK(successive_ranks({2, 1}) == std::vector<long long>{0});  // self-conjugate
  CHECK(successive_ranks({3, 1}) == std::vector<long long>{1});
  CHECK(successive_ranks({4, 3, 2, 1}) == std::vector<long long>{0, 0});
}

TEST_CASE("rank-restricted generating function") {
  CHECK(gen_func_rank_restricted(1, 2, 2) == from_coeffs(0, {1, 1}));
  // below the part bound every partition is excluded except the empty one
  CHECK(gen_func_rank_restricted(2, 1, 2) == QPoly::one());
  CHECK_THROWS(gen_func_rank_restricted(2, 1, 0));
}

TEST_CASE("box enumeration streams each partition once") {
  std::set<Partition> seen;
  enumerate_box_partitions(2, 2, [&](const Partition& p) { CHECK(seen.insert(p).second); });
  // partitions with parts <= 2 and at most 2 rows: {}, 1, 2, 11, 21, 22
  CHECK(seen.size() == 6);
}
