#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

namespace ncsf {

enum class Basis { Psi, S, Lambda, M, F, L, R };

inline constexpr std::array<Basis, 7> kAllBases = {Basis::Psi, Basis::S, Basis::Lambda, Basis::M,
                                                   Basis::F,   Basis::L, Basis::R};

/// Tag used in JSON output: Psi, S, Lambda, M, F, L, R.
std::string_view basis_name(Basis b);
/// Atom name in the expression grammar: Psi, S, E, M, F, L, R.
std::string_view basis_atom(Basis b);
/// Accepts both spellings above plus the alias "Lam".
std::optional<Basis> parse_basis(std::string_view name);

/// A noncommutative symmetric function written in one basis: a sparse map
/// from compositions to nonzero rationals. Terms iterate in canonical
/// composition order (degree, then descent mask).
class Element {
public:
  using Terms = std::map<Composition, Rational>;

  explicit Element(Basis basis = Basis::Psi) : basis_(basis) {}
  Element(Basis basis, const Composition& index, const Rational& coefficient = Rational(1));

  /// The empty-composition element, i.e. 1.
  static Element unit(Basis basis = Basis::Psi) { return Element(basis, Composition{}); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Composition& index) const;

  /// Adds c to the coefficient of `index`, erasing it if the sum is zero.
  void add_term(const Composition& index, const Rational& c);

  /// The homogeneous component of the given degree.
  Element degree_part(int degree) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& c);

  friend bool operator==(const Element&, const Element&) = default;

private:
  Basis basis_;
  Terms terms_;
};

/// Coefficient-wise sum; throws DomainError on mismatched bases.
Element add(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
inline bool equals(const Element& a, const Element& b) { return a == b; }

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);
Element operator-(Element a);

/// Ψ^I Ψ^J = Ψ^{I·J}, extended bilinearly. Both inputs must be in Psi.
Element mul_psi(const Element& a, const Element& b);

/// True iff no stored coefficient is zero.
bool has_no_zero_terms(const Element& a);

/// Element of NSym ⊗ NSym as a sparse map over composition pairs.
class TensorElement {
public:
  using Key = std::pair<Composition, Composition>;
  using Terms = std::map<Key, Rational>;

  TensorElement(Basis left = Basis::Psi, Basis right = Basis::Psi) : left_(left), right_(right) {}

  Basis left_basis() const { return left_; }
  Basis right_basis() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& key, const Rational& c);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
  Basis left_;
  Basis right_;
  Terms terms_;
};

TensorElement t_from_pair(const Element& a, const Element& b);
TensorElement t_add(const TensorElement& a, const TensorElement& b);
TensorElement t_scale(const Rational& c, const TensorElement& a);
inline bool t_equals(const TensorElement& a, const TensorElement& b) { return a == b; }
bool has_no_zero_terms(const TensorElement& a);

} // namespace ncsf
