#include "ncsf/bases.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ncsf;
using ncsf::test::build;
using ncsf::test::q;

namespace {

Element in(Basis to, Basis from, const Composition& I) { return convert(Element(from, I), to); }

} // namespace

TEST_CASE("monomial and forgotten in power sums") {
  REQUIRE(m_to_psi({3, 1, 2}) ==
          build(Basis::Psi, {{q(1, 3), {6}}, {q(-1, 3), {4, 2}}, {q(-1, 6), {3, 3}}, {q(1, 6), {3, 1, 2}}}));
  REQUIRE(m_to_psi({5}) == Element(Basis::Psi, {5}));
  REQUIRE(m_to_psi({1, 1}) == build(Basis::Psi, {{q(1, 2), {1, 1}}, {q(-1, 2), {2}}}));
  REQUIRE(f_to_psi({2, 1, 3}) ==
          build(Basis::Psi, {{q(1, 3), {6}}, {q(1, 6), {3, 3}}, {q(1, 3), {2, 4}}, {q(1, 6), {2, 1, 3}}}));
  REQUIRE(f_to_psi({4}) == Element(Basis::Psi, {4}));
  REQUIRE(f_to_psi({1, 1}) == build(Basis::Psi, {{q(1, 2), {2}}, {q(1, 2), {1, 1}}}));
}

TEST_CASE("complete and elementary in power sums") {
  REQUIRE(s_to_psi({2}) == build(Basis::Psi, {{q(1, 2), {2}}, {q(1, 2), {1, 1}}}));
  REQUIRE(s_to_psi({1, 1}) == Element(Basis::Psi, {1, 1}));
  REQUIRE(lambda_to_psi({2}) == build(Basis::Psi, {{q(1, 2), {1, 1}}, {q(-1, 2), {2}}}));
  for (int n = 1; n <= 8; ++n) {
    const Composition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    REQUIRE(f_to_psi(ones) == s_to_psi({n}));
    REQUIRE(m_to_psi(ones) == lambda_to_psi({n}));
  }
}

TEST_CASE("power sums in the monomial and complete bases") {
  REQUIRE(psi_to_m_expand({2}) == Element(Basis::M, {2}));
  REQUIRE(psi_to_m_expand({2, 3}) == build(Basis::M, {{q(2), {2, 3}}, {q(1), {5}}}));
  REQUIRE(psi_to_s_expand({2}) == build(Basis::S, {{q(2), {2}}, {q(-1), {1, 1}}}));
}

TEST_CASE("ribbon, fundamental and forgotten triangular expansions") {
  REQUIRE(r_to_s({1, 1}) == build(Basis::S, {{q(1), {1, 1}}, {q(-1), {2}}}));
  REQUIRE(r_to_s({3}) == Element(Basis::S, {3}));
  REQUIRE(s_to_r_expand({2, 1}) == build(Basis::R, {{q(1), {2, 1}}, {q(1), {3}}}));
  REQUIRE(l_to_m({2}) == build(Basis::M, {{q(1), {2}}, {q(1), {1, 1}}}));
  REQUIRE(l_to_m({1, 1}) == Element(Basis::M, {1, 1}));
  REQUIRE(m_to_l_expand({2}) == build(Basis::L, {{q(1), {2}}, {q(-1), {1, 1}}}));
  REQUIRE(f_to_m({2, 2, 1, 3}) == build(Basis::M, {{q(1), {2, 2, 1, 3}},
                                                   {q(1), {2, 2, 4}},
                                                   {q(1), {2, 3, 3}},
                                                   {q(1), {4, 1, 3}},
                                                   {q(1), {2, 6}},
                                                   {q(1), {4, 4}},
                                                   {q(1), {5, 3}},
                                                   {q(1), {8}}}));
  REQUIRE(f_to_m({3}) == Element(Basis::M, {3}));
  REQUIRE(m_to_f_expand({1, 1}) == build(Basis::F, {{q(1), {1, 1}}, {q(-1), {2}}}));
}

TEST_CASE("router agrees with the closed forms") {
  REQUIRE(in(Basis::M, Basis::F, {2, 2, 1, 3}) == f_to_m({2, 2, 1, 3}));
  REQUIRE(in(Basis::M, Basis::S, {2}) == build(Basis::M, {{q(1), {2}}, {q(1), {1, 1}}}));
  REQUIRE(in(Basis::M, Basis::S, {2}) == in(Basis::M, Basis::F, {1, 1}));
  REQUIRE(in(Basis::R, Basis::Psi, {3}) == build(Basis::R, {{q(1), {3}}, {q(-1), {1, 2}}, {q(1), {1, 1, 1}}}));
  REQUIRE(convert(convert(Element(Basis::M, {3, 1, 2}), Basis::Psi), Basis::M) == Element(Basis::M, {3, 1, 2}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& I : compositions_of(n)) {
      REQUIRE(in(Basis::S, Basis::R, I) == r_to_s(I));
      REQUIRE(in(Basis::R, Basis::S, I) == s_to_r_expand(I));
      REQUIRE(in(Basis::M, Basis::L, I) == l_to_m(I));
      REQUIRE(in(Basis::L, Basis::M, I) == m_to_l_expand(I));
      REQUIRE(in(Basis::M, Basis::F, I) == f_to_m(I));
      REQUIRE(in(Basis::F, Basis::M, I) == m_to_f_expand(I));
      REQUIRE(in(Basis::M, Basis::Psi, I) == psi_to_m_expand(I));
      REQUIRE(in(Basis::S, Basis::Psi, I) == psi_to_s_expand(I));
    }
  }
}

TEST_CASE("two-step expansions agree with the router") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& I : compositions_of(n)) {
      const Element m_psi = m_to_psi(I);
      Element m_in_s(Basis::S);
      for (const auto& [J, c] : m_psi.terms()) {
        m_in_s += c * psi_to_s_expand(J);
      }
      REQUIRE(in(Basis::S, Basis::M, I) == m_in_s);

      const Element s_psi = s_to_psi(I);
      Element s_in_m(Basis::M);
      for (const auto& [J, c] : s_psi.terms()) {
        s_in_m += c * psi_to_m_expand(J);
      }
      REQUIRE(in(Basis::M, Basis::S, I) == s_in_m);
    }
  }
}

TEST_CASE("transition matrices") {
  const TransitionMatrix m = transition_matrix(Basis::M, Basis::Psi, 2);
  REQUIRE(m.size() == 2);
  REQUIRE(m.index(0) == Composition{2});
  REQUIRE(m.index(1) == Composition{1, 1});
  REQUIRE(m.at(0, 0) == q(1));
  REQUIRE(m.at(0, 1) == q(0));
  REQUIRE(m.at(1, 0) == q(-1, 2));
  REQUIRE(m.at(1, 1) == q(1, 2));

  for (int n = 1; n <= 6; ++n) {
    const TransitionMatrix fm = transition_matrix(Basis::F, Basis::M, n);
    for (std::size_t r = 0; r < fm.size(); ++r) {
      for (std::size_t c = 0; c < fm.size(); ++c) {
        REQUIRE(fm.at(r, c) == (is_coarsening(fm.index(c), fm.index(r)) ? q(1) : q(0)));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Basis x : kAllBases) {
      for (const Basis y : kAllBases) {
        REQUIRE(multiply(transition_matrix(x, y, n), transition_matrix(y, x, n)).is_identity());
      }
    }
  }
}

TEST_CASE("inverse matrices at degree 8 for every basis pair") {
  for (const Basis x : kAllBases) {
    for (const Basis y : {Basis::Psi, Basis::R}) {
      REQUIRE(multiply(transition_matrix(x, y, 8), transition_matrix(y, x, 8)).is_identity());
    }
  }
}

TEST_CASE("triangularity and denominators") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& [x, y] : {std::pair{Basis::M, Basis::F}, std::pair{Basis::F, Basis::M}, std::pair{Basis::M, Basis::L},
                               std::pair{Basis::L, Basis::M}, std::pair{Basis::S, Basis::R}, std::pair{Basis::R, Basis::S}}) {
      const TransitionMatrix t = transition_matrix(x, y, n);
      for (std::size_t r = 0; r < t.size(); ++r) {
        REQUIRE(t.at(r, r) == q(1));
        for (const auto& [c, v] : t.row_entries(r)) {
          REQUIRE((v == q(1) || v == q(-1)));
          const bool comparable = is_coarsening(t.index(c), t.index(r)) || is_coarsening(t.index(r), t.index(c));
          REQUIRE(comparable);
        }
      }
    }
    const TransitionMatrix mp = transition_matrix(Basis::M, Basis::Psi, n);
    for (std::size_t r = 0; r < mp.size(); ++r) {
      const Rational fact = factorial(static_cast<long>(mp.index(r).length()));
      for (const auto& [c, v] : mp.row_entries(r)) {
        REQUIRE(is_coarsening(mp.index(c), mp.index(r)));
        REQUIRE((fact * v).is_integer());
      }
    }
  }
}

TEST_CASE("sums over all compositions") {
  for (int n = 1; n <= 10; ++n) {
    Element all(Basis::M);
    for (const auto& I : compositions_of(n)) {
      all.add_term(I, q(1));
    }
    REQUIRE(to_psi(all) == s_to_psi({n}));
    REQUIRE(to_psi(Element(Basis::L, {n})) == s_to_psi({n}));
  }
}

TEST_CASE("sparse matrices above the dense threshold") {
  const TransitionMatrix t = transition_matrix(Basis::F, Basis::M, 11);
  REQUIRE_FALSE(t.is_dense());
  REQUIRE(t.size() == 1024);
  REQUIRE(t.at(0, 0) == q(1));
  REQUIRE(t.at(1023, 0) == q(1));
  REQUIRE(t.at(0, 1023) == q(0));
  REQUIRE(t.row_entries(1023).size() == 1024);
  REQUIRE(multiply(t, transition_matrix(Basis::M, Basis::F, 11)).is_identity());
}

TEST_CASE("empty composition is the unit everywhere") {
  for (const Basis x : kAllBases) {
    for (const Basis y : kAllBases) {
      REQUIRE(convert(Element::unit(x), y) == Element::unit(y));
    }
  }
}
