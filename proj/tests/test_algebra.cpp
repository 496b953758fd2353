#include "ncsf/algebra.hpp"
#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ncsf;
using ncsf::test::build;
using ncsf::test::q;

namespace {

bool same(const Element& a, const Element& b) { return to_psi(a) == to_psi(b); }

Element negated(Element a) {
  a *= q(-1);
  return a;
}

} // namespace

TEST_CASE("small products") {
  REQUIRE(product_mm({1}, {1}) == build(Basis::M, {{q(2), {1, 1}}, {q(1), {2}}}));
  REQUIRE(product_ff({1}, {1}) == build(Basis::F, {{q(2), {1, 1}}, {q(-1), {2}}}));
  REQUIRE(same(product_ff({1}, {1}), Element(Basis::Psi, {1, 1})));
  REQUIRE(multiply(Element(Basis::S, {2}), Element(Basis::S, {1})) == to_psi(Element(Basis::S, {2, 1})));
}

TEST_CASE("closed-form products agree with the generic product") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (const auto& I : compositions_of(a)) {
        for (const auto& J : compositions_of(b)) {
          REQUIRE(same(product_mm(I, J), multiply(Element(Basis::M, I), Element(Basis::M, J))));
          REQUIRE(same(product_ff(I, J), multiply(Element(Basis::F, I), Element(Basis::F, J))));
          REQUIRE(same(product_ll(I, J), multiply(Element(Basis::L, I), Element(Basis::L, J))));
        }
      }
    }
  }
}

TEST_CASE("F·F with the signs flipped is wrong") {
  int mismatches = 0;
  for (const auto& I : compositions_of(3)) {
    for (const auto& J : compositions_of(2)) {
      if (!same(negated(product_ff(I, J)), multiply(Element(Basis::F, I), Element(Basis::F, J)))) {
        ++mismatches;
      }
    }
  }
  REQUIRE(mismatches == 8);
}

TEST_CASE("products are associative and unital") {
  const Element a = to_psi(Element(Basis::M, {2, 1})) + q(3) * to_psi(Element(Basis::F, {1}));
  const Element b = to_psi(Element(Basis::R, {1, 2})) - to_psi(Element(Basis::L, {2}));
  const Element c = to_psi(Element(Basis::Lambda, {2})) + to_psi(Element(Basis::S, {1, 1, 1}));
  REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  REQUIRE(multiply(Element::unit(Basis::M), a) == to_psi(a));
  REQUIRE(multiply(a, Element::unit(Basis::R)) == to_psi(a));
}

TEST_CASE("Pieri rules") {
  REQUIRE(pieri_left_psi(2, {3}) == build(Basis::M, {{q(2), {2, 3}}, {q(1), {5}}}));
  REQUIRE(pieri_right_f({3}, 2) == build(Basis::F, {{q(2), {3, 2}}, {q(-1), {5}}}));
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& I : compositions_of(n)) {
        REQUIRE(same(pieri_left_psi(r, I), multiply(Element(Basis::Psi, {r}), Element(Basis::M, I))));
        REQUIRE(same(pieri_right_f(I, r), multiply(Element(Basis::F, I), Element(Basis::Psi, {r}))));
      }
    }
  }
}

TEST_CASE("omega") {
  REQUIRE(omega(Element(Basis::S, {2})) == build(Basis::Psi, {{q(1, 2), {1, 1}}, {q(-1, 2), {2}}}));
  REQUIRE(convert(omega(Element(Basis::M, {2, 1})), Basis::F) == build(Basis::F, {{q(-1), {1, 2}}}));
  REQUIRE(omega(Element(Basis::Psi, {3, 1})) == Element(Basis::Psi, {1, 3}));
  REQUIRE(omega(Element(Basis::Psi, {2, 1})) == build(Basis::Psi, {{q(-1), {1, 2}}}));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : compositions_of(n)) {
      REQUIRE(same(omega(Element(Basis::S, I)), Element(Basis::Lambda, reverse(I))));
      REQUIRE(omega(omega(Element(Basis::R, I))) == to_psi(Element(Basis::R, I)));
    }
  }
  const Element a = to_psi(Element(Basis::M, {1, 2})) + Element(Basis::Psi, {2});
  const Element b = to_psi(Element(Basis::F, {2, 1})) - q(2) * to_psi(Element(Basis::S, {1}));
  REQUIRE(omega(multiply(a, b)) == multiply(omega(b), omega(a)));
}

TEST_CASE("pairings") {
  REQUIRE(pair_psi_psi({2, 1}, {2, 1}) == q(4));
  REQUIRE(pair(Element(Basis::Psi, {2, 1}), Element(Basis::Psi, {2, 1})) == q(4));
  REQUIRE(pair_m_psi({1, 1}, {2}) == q(-1));
  REQUIRE(pair(Element(Basis::M, {3}), Element(Basis::S, {2, 1})) == q(0));
  REQUIRE(pair(Element(Basis::M, {2}), Element(Basis::S, {1, 1, 1})) == q(0));
  REQUIRE(pair(Element(Basis::M, {2, 1}), Element(Basis::S, {2, 1})) == q(1));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : compositions_of(n)) {
      for (const auto& J : compositions_of(n)) {
        const Element psi_i(Basis::Psi, I);
        REQUIRE(pair_psi_psi(I, J) == pair(psi_i, Element(Basis::Psi, J)));
        REQUIRE(pair_m_psi(I, J) == pair(Element(Basis::M, I), Element(Basis::Psi, J)));
        REQUIRE(pair_m_r(I, J) == pair(Element(Basis::M, I), Element(Basis::R, J)));
        REQUIRE(pair_l_s(I, J) == pair(Element(Basis::L, I), Element(Basis::S, J)));
        REQUIRE(pair_l_r(I, J) == pair(Element(Basis::L, I), Element(Basis::R, J)));
        REQUIRE(pair(omega(Element(Basis::M, I)), omega(Element(Basis::S, J))) == q(I == J ? 1 : 0));
      }
    }
  }
}

TEST_CASE("empty indices are rejected by the closed forms") {
  REQUIRE_THROWS_AS(product_mm({}, {1}), DomainError);
  REQUIRE_THROWS_AS(pieri_left_psi(2, {}), DomainError);
}
