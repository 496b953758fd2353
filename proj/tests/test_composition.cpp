#include "ncsf/composition.hpp"
#include "ncsf/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ncsf;

TEST_CASE("composition: validation and text forms") {
  const Composition I{3, 1, 2};
  REQUIRE(I.weight() == 6);
  REQUIRE(I.length() == 3);
  REQUIRE(I.str() == "[3,1,2]");
  REQUIRE(I.dotted() == "3.1.2");
  REQUIRE(Composition{}.str() == "[]");
  REQUIRE_THROWS_AS(Composition({2, 0, 1}), DomainError);
  REQUIRE_THROWS_AS(Composition({-1}), DomainError);
}

TEST_CASE("descent sets") {
  REQUIRE(descent_set({3, 1, 2, 2}) == std::set<int>{3, 4, 6});
  REQUIRE(descent_set({5}).empty());
  REQUIRE(from_descents(8, {3, 4, 6}) == Composition{3, 1, 2, 2});
  REQUIRE_THROWS_AS(descent_set(Composition{}), DomainError);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& I : compositions_of(n)) {
      REQUIRE(from_descents(n, descent_set(I)) == I);
      REQUIRE(Composition::from_mask(n, I.mask()) == I);
      REQUIRE(Composition::from_mask(n, I.mask()).vector() == I.vector());
    }
  }
}

TEST_CASE("reverse and conjugate") {
  REQUIRE(reverse({3, 1, 1, 4, 2}) == Composition{2, 4, 1, 1, 3});
  REQUIRE(reverse({5}) == Composition{5});
  REQUIRE(conjugate({3, 1, 1, 4, 2}) == Composition{1, 2, 1, 1, 4, 1, 1});
  REQUIRE(conjugate({4}) == Composition{1, 1, 1, 1});
  REQUIRE_THROWS_AS(conjugate(Composition{}), DomainError);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& I : compositions_of(n)) {
      const Composition C = conjugate(I);
      REQUIRE(conjugate(C) == I);
      REQUIRE(C.weight() == n);
      REQUIRE(C.length() + I.length() == static_cast<std::size_t>(n) + 1);
    }
  }
}

TEST_CASE("concatenation and near concatenation") {
  REQUIRE(concat({3}, {1, 2}) == Composition{3, 1, 2});
  REQUIRE(near_concat({3}, {1, 2}) == Composition{4, 2});
  REQUIRE(near_concat({2, 2}, {1, 3}) == Composition{2, 3, 3});
  REQUIRE(concat(Composition{}, {2}) == Composition{2});
  REQUIRE_THROWS_AS(near_concat(Composition{}, {1}), DomainError);
  REQUIRE_THROWS_AS(near_concat({1}, Composition{}), DomainError);
}

TEST_CASE("compositions_of enumerates in canonical order") {
  REQUIRE(compositions_of(1) == std::vector<Composition>{{1}});
  REQUIRE(compositions_of(3) == std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
  REQUIRE(compositions_of(10).size() == 512);
  REQUIRE_THROWS_AS(compositions_of(0), DomainError);
  const auto all = compositions_of(6);
  REQUIRE(std::is_sorted(all.begin(), all.end()));
  REQUIRE(all.front() == Composition{6});
  REQUIRE(all.back() == Composition{1, 1, 1, 1, 1, 1});
  REQUIRE(Composition{5} < Composition{1, 1, 1, 1, 1, 1});
}

TEST_CASE("refinement order") {
  REQUIRE(is_coarsening({3, 3, 2}, {3, 1, 2, 2}));
  REQUIRE_FALSE(is_coarsening({3, 1, 2, 2}, {3, 3, 2}));
  REQUIRE_FALSE(is_coarsening({2, 4}, {3, 3}));
  REQUIRE(coarsenings({2, 1}) == std::vector<Composition>{{3}, {2, 1}});
  REQUIRE(refinements({3}) == std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
  for (int n = 1; n <= 6; ++n) {
    for (const auto& I : compositions_of(n)) {
      REQUIRE(coarsenings(I).size() == (std::size_t{1} << (I.length() - 1)));
      REQUIRE(refinements(I).size() == (std::size_t{1} << (n - static_cast<int>(I.length()))));
      for (const auto& J : compositions_of(n)) {
        const bool coarser = is_coarsening(J, I);
        const auto cs = coarsenings(I);
        const auto rs = refinements(J);
        REQUIRE(coarser == (std::find(cs.begin(), cs.end(), J) != cs.end()));
        REQUIRE(coarser == (std::find(rs.begin(), rs.end(), I) != rs.end()));
      }
    }
  }
}

TEST_CASE("breakpoints and split") {
  REQUIRE(breakpoints({3, 3}, {2, 1, 3}) == std::vector<std::size_t>{2, 3});
  REQUIRE(breakpoints({3, 1, 2}, {3, 1, 2}) == std::vector<std::size_t>{1, 2, 3});
  REQUIRE(breakpoints({6}, {3, 1, 2}) == std::vector<std::size_t>{3});
  REQUIRE_THROWS_AS(breakpoints({2, 4}, {3, 3}), DomainError);
  REQUIRE(split({1, 1, 2, 1}, {2, 3}) == std::vector<Composition>{{1, 1}, {2, 1}});
  REQUIRE(split({2, 1}, {2, 1}) == std::vector<Composition>{{2}, {1}});
  REQUIRE(split({1, 1, 1}, {3}) == std::vector<Composition>{{1, 1, 1}});
  REQUIRE_THROWS_AS(split({3}, {1, 2}), DomainError);
}

TEST_CASE("pi_u and last-part products") {
  REQUIRE(pi_u({1, 3, 2}) == Rational(24));
  REQUIRE(lp({1, 2, 3}) == 3);
  REQUIRE(lp_rel({1, 1, 2, 1}, {2, 3}) == 1);
  REQUIRE(pi_u_rel({1, 1, 2, 1}, {2, 3}) == pi_u({1, 1}) * pi_u({2, 1}));
  REQUIRE_THROWS_AS(lp_rel({3}, {1, 2}), DomainError);
}

TEST_CASE("partitions and rearrangements") {
  REQUIRE(sort_to_partition({1, 3, 2}) == Partition{3, 2, 1});
  const auto perms = multiset_permutations(Partition{2, 1, 1});
  REQUIRE(perms.size() == 3);
  REQUIRE(std::set<Composition>(perms.begin(), perms.end()) ==
          std::set<Composition>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  REQUIRE(std::is_sorted(perms.begin(), perms.end()));
  REQUIRE(augmentation_factor(Partition{2, 2, 1}) == 2);
  REQUIRE(augmentation_factor(Partition{1, 1, 1}) == 6);
  REQUIRE(partitions_of(5).size() == 7);
  REQUIRE(partitions_of(9).size() == 30);
  REQUIRE(partitions_of(4).front() == Partition{4});
  REQUIRE_THROWS_AS(Partition({1, 2}), DomainError);
  REQUIRE(Partition{2, 1}.str() == "(2,1)");
}
