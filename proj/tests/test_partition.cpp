#include "betalag/partition.hpp"

#include "doctest.h"

#include <set>

using namespace betalag;

TEST_CASE("conjugate examples") {
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
}

TEST_CASE("b_stat examples") {
  CHECK(Partition({7}).b_stat() == 0);
  CHECK(Partition({2, 1}).b_stat() == 1);
  CHECK(Partition({1, 1, 1}).b_stat() == 3);
}

TEST_CASE("lower examples") {
  CHECK(Partition({2, 1}).lower(1) == Partition({1, 1}));
  CHECK(!Partition({2, 2}).lower(1).has_value());
  CHECK(Partition({2, 2}).lower(2) == Partition({2, 1}));
  CHECK(Partition({1}).lower(1) == Partition{});
}

TEST_CASE("parse and str round trip") {
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition({3, 2, 2}).str() == "3,2,2");
  CHECK(Partition::parse(Partition({5, 1}).str()) == Partition({5, 1}));
  CHECK_THROWS(Partition({1, 2}));  // not weakly decreasing
}

TEST_CASE("enumerate_contained examples and order") {
  CHECK(enumerate_contained(Partition({1}), 1) ==
        std::vector<Partition>{Partition{}, Partition({1})});
  CHECK(enumerate_contained(Partition({2, 1}), 2) ==
        std::vector<Partition>{Partition{}, Partition({1}), Partition({2}),
                               Partition({1, 1}), Partition({2, 1})});
  CHECK(enumerate_contained(Partition({1, 1}), 1) ==
        std::vector<Partition>{Partition{}, Partition({1})});
}

TEST_CASE("enumerate_contained closed under lower and counts match brute force") {
  Partition lmax({3, 2, 1});
  for (int n : {2, 3}) {
    auto basis = enumerate_contained(lmax, n);
    std::set<Partition> in(basis.begin(), basis.end());
    // brute-force count over the box lattice
    long count = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 1; ++c) {
          if (a < b || b < c) continue;
          int len = (a > 0) + (b > 0) + (c > 0);
          if (len <= n) ++count;
        }
    CHECK(static_cast<long>(basis.size()) == count);
    for (const Partition& mu : basis)
      for (int i = 1; i <= mu.length(); ++i)
        if (auto low = mu.lower(i)) CHECK(in.count(*low) == 1);
  }
}

TEST_CASE("b_stat of conjugate equals sum of binomials") {
  for (int w = 0; w <= 8; ++w)
    for (const Partition& lam : partitions_of(w, 8)) {
      long expect = 0;
      for (int i = 0; i < lam.length(); ++i)
        expect += static_cast<long>(lam.part(i)) * (lam.part(i) - 1) / 2;
      CHECK(lam.conjugate().b_stat() == expect);
      CHECK(lam.conjugate().conjugate() == lam);
    }
}

TEST_CASE("dominance and containment") {
  CHECK(Partition({2}).dominates(Partition({1, 1})));
  CHECK(!Partition({1, 1}).dominates(Partition({2})));
  CHECK(Partition({3, 1}).contains(Partition({2, 1})));
  CHECK(!Partition({3, 1}).contains(Partition({2, 2})));
}
