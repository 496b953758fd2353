#include "ncsf/qsym.hpp"

#include "ncsf/bases.hpp"

#include <array>
#include <utility>

namespace ncsf {

namespace {

constexpr std::array<std::pair<QsymFamily, std::string_view>, 5> kNames = {{
    {QsymFamily::Psi, "psi"},
    {QsymFamily::S, "s"},
    {QsymFamily::Lambda, "lambda"},
    {QsymFamily::Ribbon, "ribbon"},
    {QsymFamily::Fundamental, "fundamental"},
}};

std::map<Composition, Rational> coordinates_in_m(Basis b, const Composition& I) {
  return convert(Element(b, I), Basis::M).terms();
}

std::map<Composition, Rational> fundamental(const Composition& I) {
  std::map<Composition, Rational> out;
  for (const auto& J : refinements(I)) {
    out.emplace(J, Rational(1));
  }
  return out;
}

} // namespace

std::string_view family_name(QsymFamily f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) {
      return name;
    }
  }
  return "?";
}

std::optional<QsymFamily> parse_family(std::string_view name) {
  for (const auto& [family, known] : kNames) {
    if (known == name) {
      return family;
    }
  }
  return std::nullopt;
}

QsymTable qsym_table(QsymFamily family, const Composition& I) {
  QsymTable table{family, I, {}};
  switch (family) {
  case QsymFamily::Psi:
    table.terms = coordinates_in_m(Basis::Psi, I);
    break;
  case QsymFamily::S:
    table.terms = coordinates_in_m(Basis::S, I);
    break;
  case QsymFamily::Lambda:
    // Index-for-index copy of the NSym coordinates of Λ^I.
    table.terms = coordinates_in_m(Basis::Lambda, I);
    break;
  case QsymFamily::Fundamental:
    table.terms = fundamental(I);
    break;
  case QsymFamily::Ribbon: {
    const Element gessel_row = convert(Element(Basis::R, I), Basis::L);
    Element acc(Basis::M);
    for (const auto& [J, g] : gessel_row.terms()) {
      for (const auto& [K, one] : fundamental(J)) {
        acc.add_term(K, g * one);
      }
    }
    table.terms = acc.terms();
    break;
  }
  }
  return table;
}

Rational qsym_pair(const QsymTable& t, const Element& b) {
  const Element in_s = convert(b, Basis::S);
  Rational total;
  for (const auto& [K, c] : t.terms) {
    total.add_product(c, in_s.coefficient(K));
  }
  return total;
}

} // namespace ncsf
