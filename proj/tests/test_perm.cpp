#include <doctest.h>

#include <algorithm>

#include "kfact/perm.hpp"

using namespace kfact;

TEST_CASE("composition is left to right") {
  const Permutation t01 = cycle_to_permutation(Cycle::min_first({0, 1}), 2);
  const Permutation t02 = cycle_to_permutation(Cycle::min_first({0, 2}), 2);
  const Permutation t12 = cycle_to_permutation(Cycle::min_first({1, 2}), 2);

  CHECK(compose(t01, t02) == full_cycle(2));
  CHECK(compose(t02, t12) == full_cycle(2));
  CHECK(compose(t12, t01) == full_cycle(2));
  CHECK(compose(t01, t12) != full_cycle(2));

  const Permutation p({2, 0, 1});
  CHECK(compose(p, Permutation::identity(2)) == p);
  CHECK(compose(Permutation::identity(2), p) == p);
}

TEST_CASE("full_cycle") {
  CHECK(full_cycle(0) == Permutation::identity(0));
  const Permutation c2 = full_cycle(2);
  CHECK(c2(0) == 1);
  CHECK(c2(1) == 2);
  CHECK(c2(2) == 0);
  CHECK(full_cycle(4) == Permutation({1, 2, 3, 4, 0}));
}

TEST_CASE("cycle_to_permutation") {
  const Permutation p = cycle_to_permutation(Cycle::min_first({0, 3, 4}), 4);
  CHECK(p(0) == 3);
  CHECK(p(3) == 4);
  CHECK(p(4) == 0);
  CHECK(p(1) == 1);
  CHECK(p(2) == 2);

  const Permutation swap = cycle_to_permutation(Cycle::min_first({1, 2}), 2);
  CHECK(swap(1) == 2);
  CHECK(swap(2) == 1);
  CHECK(swap(0) == 0);

  CHECK(compose(cycle_to_permutation(Cycle::min_first({0, 1, 2}), 4),
                cycle_to_permutation(Cycle::min_first({0, 3, 4}), 4)) == full_cycle(4));

  CHECK_THROWS_AS(cycle_to_permutation(Cycle::min_first({0, 5}), 4), Error);
  CHECK_THROWS_AS(cycle_to_permutation(Cycle{{1, 1}}, 2), Error);
}

TEST_CASE("cycle normalization") {
  CHECK(Cycle::normalized({3, 0, 2}) == Cycle::min_first({0, 2, 3}));
  CHECK_THROWS_AS(Cycle::min_first({3, 0, 2}), Error);
  CHECK(cycle_to_permutation(Cycle::normalized({0, 1, 2}), 2) == full_cycle(2));
}

TEST_CASE("compose is associative for small m") {
  for (int m = 1; m <= 3; ++m) {
    std::vector<Permutation> all;
    std::vector<int> img(m + 1);
    for (int i = 0; i <= m; ++i) img[i] = i;
    do {
      all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    for (const auto& p : all)
      for (const auto& q : all)
        for (const auto& r : all)
          CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}
