#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"
#include "ncsf/quasidet.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ncsf;
using ncsf::test::q;

namespace {

SymWord word(std::initializer_list<std::pair<int, int>> entries) {
  SymWord w;
  for (const auto& [i, j] : entries) {
    w.push_back(entry_symbol(i, j));
  }
  return w;
}

} // namespace

TEST_CASE("symbol names") {
  REQUIRE(symbol_name(entry_symbol(3, 1)) == "a31");
  REQUIRE(symbol_name(entry_symbol(12, 3)) == "a12,3");
}

TEST_CASE("quasideterminant of small generic matrices") {
  REQUIRE(qdet(QMatrix::generic(1, {})) == SymElement(word({{1, 1}})));

  SymElement two(word({{2, 1}}));
  two.add_term(word({{2, 2}, {1, 1}}), q(-1, 3));
  REQUIRE(qdet(QMatrix::generic(2, {q(3)})) == two);

  // chains {}, {2}, {3}, {3,2}
  SymElement three(word({{3, 1}}));
  three.add_term(word({{3, 2}, {1, 1}}), q(-1, 2));
  three.add_term(word({{3, 3}, {2, 1}}), q(-1, 5));
  three.add_term(word({{3, 3}, {2, 2}, {1, 1}}), q(1, 10));
  REQUIRE(qdet(QMatrix::generic(3, {q(2), q(5)})) == three);

  for (int n = 1; n <= 7; ++n) {
    REQUIRE(qdet(QMatrix::generic(n, std::vector<Rational>(static_cast<std::size_t>(n - 1), q(1)))).size() ==
            (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("matrix validation") {
  REQUIRE_THROWS_AS(QMatrix::generic(0, {}), DomainError);
  REQUIRE_THROWS_AS(QMatrix::generic(3, {q(1)}), DomainError);
  REQUIRE_THROWS_AS(qdet(QMatrix::generic(2, {q(0)})), DomainError);
  REQUIRE_THROWS_AS(t_reduce(QMatrix::generic(3, {q(1), q(2)}), 3), DomainError);
}

TEST_CASE("T reductions") {
  const QMatrix m = QMatrix::generic(4, {q(1), q(2), q(3)});
  const QMatrix t = t_reduce(m, 2);
  REQUIRE(t.size() == 3);
  REQUIRE(t.entry(1, 1) == entry_symbol(1, 1));
  REQUIRE(t.entry(2, 1) == entry_symbol(3, 1));
  REQUIRE(t.entry(2, 2) == entry_symbol(3, 2));
  REQUIRE(t.entry(3, 3) == entry_symbol(4, 4));
  REQUIRE(t.superdiagonal() == std::vector<Rational>{q(1), q(2)});

  const QMatrix both = t_reduce_set(m, {1, 3});
  REQUIRE(both == t_reduce(t_reduce(m, 3), 1));
  REQUIRE(both.size() == 2);
  REQUIRE(t_reduce_set(QMatrix::generic(3, {q(-2), q(-1)}), {}) == QMatrix::generic(3, {q(1), q(2)}));
}

TEST_CASE("kaleidoscope identity") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(kaleidoscope_check(n));
  }
}

TEST_CASE("matrix constructions reproduce the bases") {
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(build_lambda_def(n) == to_psi(Element(Basis::Lambda, {n})));
    REQUIRE(build_s_def(n) == to_psi(Element(Basis::S, {n})));
    for (const auto& I : compositions_of(n)) {
      REQUIRE(build_m_def(I) == m_to_psi(I));
      REQUIRE(build_f_def(I) == f_to_psi(I));
      REQUIRE(build_r_def(I) == to_psi(Element(Basis::R, I)));
    }
  }
  REQUIRE_THROWS_AS(build_m_def({}), DomainError);
}
