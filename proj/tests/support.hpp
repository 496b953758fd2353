#pragma once

#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

#include <initializer_list>
#include <utility>

namespace ncsf::test {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

struct Term {
  Rational c;
  Composition index;
};

/// Builds Σ c·X^I in basis X from literal terms.
inline Element build(Basis b, std::initializer_list<Term> terms) {
  Element out(b);
  for (const auto& t : terms) {
    out.add_term(t.index, t.c);
  }
  return out;
}

} // namespace ncsf::test
