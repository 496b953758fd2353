#include "ncsf/identities.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ncsf;

TEST_CASE("registry") {
  const auto& reg = identity_registry();
  REQUIRE(reg.size() == 12);
  REQUIRE(std::is_sorted(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  REQUIRE(reg.front().name == "augmented");
  REQUIRE(reg.back().name == "roundtrip");
  REQUIRE_FALSE(run_identity("no-such-check", 3).has_value());
}

TEST_CASE("every check passes at small bounds") {
  for (const auto& r : run_all(5)) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.pass);
    CHECK(r.bound == 5);
    CHECK(r.counterexample.empty());
    CHECK(r.seconds >= 0.0);
  }
}

TEST_CASE("individual checks") {
  CHECK(verify_newton(7).pass);
  CHECK(verify_pieri(7).pass);
  CHECK(verify_products(6).pass);
  CHECK(verify_cauchy(6).pass);
  CHECK(verify_hook_sum_identity(7).pass);
  CHECK(verify_binomial_lemmas(5).pass);
  CHECK(verify_duality_suite(6).pass);
  CHECK(verify_roundtrip(7).pass);
  CHECK(verify_quasidet(6).pass);
  CHECK(verify_kaleidoscope(6).pass);
  CHECK(verify_kostka(7).pass);
  CHECK(verify_augmented(6).pass);
  const auto r = run_identity("newton", 4);
  REQUIRE(r.has_value());
  CHECK(r->name == "newton");
}

TEST_CASE("degenerate bounds") {
  CHECK_THROWS(verify_newton(0));
  CHECK(verify_roundtrip(1).pass);
}
