#include "vclines/abstract.hpp"

#include "vclines/generators.hpp"
#include "vclines/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace vclines;

namespace {

// Exhaustive reference: the largest subset all of whose sub-subsets occur as
// traces.
int brute_vc(const FiniteSetSystem& sys) {
  int best = 0;
  for (Mask y = 0; y < (Mask{1} << sys.ground); ++y) {
    std::set<Mask> traces;
    for (Mask s : sys.family) traces.insert(s & y);
    if (static_cast<int>(traces.size()) == (1 << popcount(y)))
      best = std::max(best, popcount(y));
  }
  return best;
}

FiniteSetSystem random_system(Rng& rng, int ground, int members) {
  std::vector<Mask> fam;
  for (int i = 0; i < members; ++i)
    fam.push_back(static_cast<Mask>(rng.range(0, (1 << ground) - 1)));
  return make_system(ground, std::move(fam));
}

}  // namespace

TEST_CASE("interval chains pin the union dimensions") {
  for (int k : {1, 2, 3}) {
    CAPTURE(k);
    FiniteSetSystem even = intervals_system(2 * k);
    FiniteSetSystem odd = intervals_system(2 * k + 1);
    CHECK(vc_dim(k_fold_union(even, k)) == 2 * k);
    CHECK(vc_dim(k_fold_union(odd, k)) == 2 * k);
    CHECK(s_k_count(even, k) == 1);
    CHECK(s_k_count(odd, k) == 1);
  }
}

TEST_CASE("interval traces enumerate exactly the runs") {
  FiniteSetSystem iv = intervals_system(4);
  // Empty set plus C(5,2) = 10 runs.
  CHECK(iv.family.size() == 11);
  std::set<Mask> fam(iv.family.begin(), iv.family.end());
  CHECK(fam.count(0) == 1);
  CHECK(fam.count(0b0110) == 1);
  CHECK(fam.count(0b1111) == 1);
  CHECK(fam.count(0b1010) == 0);
  CHECK(intersection_closed(iv));
}

TEST_CASE("vc_dim matches exhaustive search on random systems") {
  for (int i = 0; i < 60; ++i) {
    Rng rng(derive_seed(4040, i));
    FiniteSetSystem sys = random_system(rng, static_cast<int>(rng.range(1, 7)),
                                        static_cast<int>(rng.range(0, 20)));
    CHECK(vc_dim(sys) == brute_vc(sys));
  }
}

TEST_CASE("k-fold unions contain exactly the k-unions") {
  FiniteSetSystem sys = make_system(5, {0b00011, 0b00100, 0b11000});
  FiniteSetSystem u2 = k_fold_union(sys, 2);
  std::set<Mask> got(u2.family.begin(), u2.family.end());
  std::set<Mask> want;
  for (Mask a : sys.family)
    for (Mask b : sys.family) want.insert(a | b);
  CHECK(got == std::set<Mask>(want.begin(), want.end()));
  CHECK(vc_dim(k_fold_union(sys, 1)) == vc_dim(sys));
}

TEST_CASE("union dimension is monotone in k") {
  Rng rng(515);
  for (int i = 0; i < 20; ++i) {
    FiniteSetSystem sys = random_system(rng, 6, static_cast<int>(rng.range(1, 10)));
    int prev = 0;
    for (int k = 1; k <= 3; ++k) {
      int d = vc_dim(k_fold_union(sys, k));
      CHECK(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("degenerate systems have the obvious dimensions") {
  CHECK(vc_dim(make_system(4, {})) == 0);
  CHECK(vc_dim(make_system(4, {0b1010})) == 0);
  std::vector<Mask> powerset;
  for (Mask s = 0; s < 16; ++s) powerset.push_back(s);
  CHECK(vc_dim(make_system(4, powerset)) == 4);
}

TEST_CASE("hulls are the minimal containing members") {
  FiniteSetSystem iv = intervals_system(5);
  CHECK(s_hull(iv, 0b10001) == 0b11111);
  CHECK(s_hull(iv, 0b00100) == 0b00100);
  CHECK(s_hull(iv, 0) == 0);

  FiniteSetSystem open = make_system(3, {0b001, 0b010});
  CHECK(!intersection_closed(open));
  CHECK_THROWS_AS(s_hull(open, 0b001), std::invalid_argument);
  FiniteSetSystem closed = make_system(3, {0b001, 0b010, 0b000, 0b011});
  CHECK(intersection_closed(closed));
  CHECK_THROWS_AS(s_hull(closed, 0b100), std::invalid_argument);
}

TEST_CASE("intersection-closed families have a single maximal structure") {
  for (int i = 0; i < 40; ++i) {
    Rng rng(derive_seed(660, i));
    FiniteSetSystem sys = random_intersection_closed(rng, static_cast<int>(rng.range(2, 8)));
    REQUIRE(intersection_closed(sys));
    CHECK(s_k_count(sys, 1) == 1);
  }
}

TEST_CASE("ground-size guards trip and can be widened") {
  std::vector<Mask> fam;
  for (int i = 0; i < 13; ++i) fam.push_back(bit(i));
  FiniteSetSystem wide = make_system(13, fam);
  CHECK_THROWS_AS(vc_dim(wide), std::invalid_argument);
  CHECK(vc_dim(wide, 13) == 1);
  CHECK_THROWS_AS(make_system(2, {0b100}), std::invalid_argument);
}
