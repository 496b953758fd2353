#pragma once

#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncsf {

/// Opaque generator of the free associative algebra. Symbols never commute
/// with one another; rationals are central.
using Symbol = std::uint32_t;
using SymWord = std::vector<Symbol>;

/// Rational linear combination of words in the free algebra.
class SymElement {
public:
  using Terms = std::map<SymWord, Rational>;

  SymElement() = default;
  explicit SymElement(SymWord word, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const SymWord& word, const Rational& c);

  SymElement& operator+=(const SymElement& rhs);
  SymElement& operator*=(const Rational& c);

  /// Renders words with `name` for each symbol, e.g. "a31 - 1/2*a33 a21".
  std::string str(const std::function<std::string(Symbol)>& name) const;

  friend bool operator==(const SymElement&, const SymElement&) = default;

private:
  Terms terms_;
};

/// Concatenation product, extended bilinearly.
SymElement sym_mul(const SymElement& a, const SymElement& b);
SymElement sym_add(const SymElement& a, const SymElement& b);
SymElement sym_scale(const Rational& c, const SymElement& a);

/// Maps every word to the ordered Psi-product of its symbols' images.
/// Every symbol must be bound; every bound value must be in Psi.
Element substitute(const SymElement& a, const std::map<Symbol, Element>& env);

} // namespace ncsf
