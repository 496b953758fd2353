#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

#include <map>
#include <optional>
#include <string_view>

namespace ncsf {

enum class QsymFamily { Psi, S, Lambda, Ribbon, Fundamental };

/// "psi", "s", "lambda", "ribbon", "fundamental".
std::string_view family_name(QsymFamily f);
std::optional<QsymFamily> parse_family(std::string_view name);

/// Coordinates of a quasi-symmetric function in the monomial basis M_J.
struct QsymTable {
  QsymFamily family;
  Composition index;
  std::map<Composition, Rational> terms;

  int degree() const { return index.weight(); }
};

QsymTable qsym_table(QsymFamily family, const Composition& I);

/// Pairing against NSym with ⟨M_K, S^J⟩ = δ_{KJ}.
Rational qsym_pair(const QsymTable& t, const Element& b);

} // namespace ncsf
