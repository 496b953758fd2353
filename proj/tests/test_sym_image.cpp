#include "ncsf/algebra.hpp"
#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"
#include "ncsf/sym_image.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ncsf;
using ncsf::test::q;

namespace {

SymPElement p(std::initializer_list<std::pair<Rational, Partition>> terms) {
  SymPElement out;
  for (const auto& [c, lambda] : terms) {
    out.add_term(lambda, c);
  }
  return out;
}

} // namespace

TEST_CASE("commutative image") {
  REQUIRE(comm_image(Element(Basis::Psi, {1, 3, 1})) == p({{q(1), {3, 1, 1}}}));
  REQUIRE(comm_image(Element(Basis::M, {2, 1})) == p({{q(1, 2), {2, 1}}, {q(-1, 2), {3}}}));
  SymPElement sum = comm_image(Element(Basis::M, {2, 1}));
  sum += comm_image(Element(Basis::M, {1, 2}));
  REQUIRE(sum == p({{q(1), {2, 1}}, {q(-1), {3}}}));
  REQUIRE(comm_image(Element(Basis::M)).is_zero());
}

TEST_CASE("commutative image is a ring map") {
  const Element a = to_psi(Element(Basis::F, {2, 1})) + to_psi(Element(Basis::R, {1, 1}));
  const Element b = to_psi(Element(Basis::M, {1, 2})) - q(2) * to_psi(Element(Basis::L, {3}));
  REQUIRE(comm_image(multiply(a, b)) == sym_p_mul(comm_image(a), comm_image(b)));
  REQUIRE(comm_image(multiply(a, b)) == comm_image(multiply(b, a)));
}

TEST_CASE("polynomial oracle") {
  PolyOracle p2(2);
  p2.add_term(p2.pack({2, 0}), q(1));
  p2.add_term(p2.pack({0, 2}), q(1));
  REQUIRE(oracle_p(Partition{2}, 2) == p2);

  PolyOracle m21(2);
  m21.add_term(m21.pack({2, 1}), q(1));
  m21.add_term(m21.pack({1, 2}), q(1));
  REQUIRE(oracle_monomial(Partition{2, 1}, 2) == m21);

  PolyOracle aug(2);
  aug.add_term(aug.pack({1, 1}), q(2));
  REQUIRE(oracle_augmented(Partition{1, 1}, 2) == aug);

  REQUIRE(p2.unpack(p2.pack({3, 1})) == std::vector<int>{3, 1});
  REQUIRE(oracle_monomial(Partition{1, 1, 1}, 2).terms().empty());

  // m_{21} = p_2 p_1 - p_3 in three variables
  REQUIRE(realize(p({{q(1), {2, 1}}, {q(-1), {3}}}), 3) == oracle_monomial(Partition{2, 1}, 3));
}

TEST_CASE("oracle errors") {
  REQUIRE_THROWS_AS(PolyOracle(0), DomainError);
  REQUIRE_THROWS_AS(PolyOracle(kOracleMaxVariables + 1), DomainError);
  REQUIRE_THROWS_AS(oracle_p(Partition{2}, 0), DomainError);
  REQUIRE_THROWS_AS(poly_mul(PolyOracle(2), PolyOracle(3)), DomainError);
  REQUIRE_THROWS_AS(PolyOracle(2).pack({1}), DomainError);
  REQUIRE_THROWS_AS(check_fixed_part(Partition{2, 1}, 3), DomainError);
  REQUIRE_THROWS_AS(check_classical_pieri(0, Partition{1}), DomainError);
}

TEST_CASE("augmented monomials") {
  REQUIRE(check_augmented_sum(Partition{2, 1}));
  REQUIRE(check_augmented_sum(Partition{1, 1}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      REQUIRE(check_augmented_sum(mu));
      for (int j = 1; j <= static_cast<int>(mu.length()); ++j) {
        REQUIRE(check_fixed_part(mu, j));
      }
    }
  }
}

TEST_CASE("classical Pieri rule") {
  REQUIRE(check_classical_pieri(1, Partition{1}));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& kappa : partitions_of(n)) {
      for (int r = 1; r + n <= 7; ++r) {
        REQUIRE(check_classical_pieri(r, kappa));
      }
    }
  }
}
