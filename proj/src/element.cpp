#include "ncsf/element.hpp"

#include "ncsf/error.hpp"

#include <string>

namespace ncsf {

std::string_view basis_name(Basis b) {
  switch (b) {
  case Basis::Psi:
    return "Psi";
  case Basis::S:
    return "S";
  case Basis::Lambda:
    return "Lambda";
  case Basis::M:
    return "M";
  case Basis::F:
    return "F";
  case Basis::L:
    return "L";
  case Basis::R:
    return "R";
  }
  return "?";
}

std::string_view basis_atom(Basis b) { return b == Basis::Lambda ? "E" : basis_name(b); }

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "E" || name == "Lam" || name == "Lambda") {
    return Basis::Lambda;
  }
  for (const Basis b : kAllBases) {
    if (basis_name(b) == name) {
      return b;
    }
  }
  return std::nullopt;
}

Element::Element(Basis basis, const Composition& index, const Rational& coefficient) : basis_(basis) {
  add_term(index, coefficient);
}

Rational Element::coefficient(const Composition& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Composition& index, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Element Element::degree_part(int degree) const {
  Element out(basis_);
  for (const auto& [index, c] : terms_) {
    if (index.weight() == degree) {
      out.terms_.emplace_hint(out.terms_.end(), index, c);
    }
  }
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  if (rhs.basis_ != basis_ && !rhs.is_zero() && !is_zero()) {
    throw DomainError("cannot add elements written in different bases (" + std::string(basis_name(basis_)) +
                      ", " + std::string(basis_name(rhs.basis_)) + ")");
  }
  if (is_zero()) {
    basis_ = rhs.basis_;
  }
  for (const auto& [index, c] : rhs.terms_) {
    add_term(index, c);
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += scale(Rational(-1), rhs); }

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

Element add(const Element& a, const Element& b) {
  if (a.basis() != b.basis()) {
    throw DomainError("add: basis mismatch (" + std::string(basis_name(a.basis())) + " vs " +
                      std::string(basis_name(b.basis())) + ")");
  }
  Element out = a;
  out += b;
  return out;
}

Element scale(const Rational& c, const Element& a) {
  Element out = a;
  out *= c;
  return out;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) { return a *= c; }
Element operator-(Element a) { return a *= Rational(-1); }

Element mul_psi(const Element& a, const Element& b) {
  if (a.basis() != Basis::Psi || b.basis() != Basis::Psi) {
    throw DomainError("mul_psi: both factors must be written in the Psi basis");
  }
  Element out(Basis::Psi);
  for (const auto& [I, x] : a.terms()) {
    for (const auto& [J, y] : b.terms()) {
      out.add_term(concat(I, J), x * y);
    }
  }
  return out;
}

bool has_no_zero_terms(const Element& a) {
  for (const auto& [index, c] : a.terms()) {
    if (c.is_zero()) {
      return false;
    }
  }
  return true;
}

void TensorElement::add_term(const Key& key, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

TensorElement t_from_pair(const Element& a, const Element& b) {
  TensorElement out(a.basis(), b.basis());
  for (const auto& [I, x] : a.terms()) {
    for (const auto& [J, y] : b.terms()) {
      out.add_term({I, J}, x * y);
    }
  }
  return out;
}

TensorElement t_add(const TensorElement& a, const TensorElement& b) {
  if (!a.is_zero() && !b.is_zero() &&
      (a.left_basis() != b.left_basis() || a.right_basis() != b.right_basis())) {
    throw DomainError("t_add: basis mismatch");
  }
  TensorElement out = a.is_zero() ? TensorElement(b.left_basis(), b.right_basis()) : a;
  for (const auto& [key, c] : b.terms()) {
    out.add_term(key, c);
  }
  return out;
}

TensorElement t_scale(const Rational& c, const TensorElement& a) {
  TensorElement out(a.left_basis(), a.right_basis());
  for (const auto& [key, x] : a.terms()) {
    out.add_term(key, c * x);
  }
  return out;
}

bool has_no_zero_terms(const TensorElement& a) {
  for (const auto& [key, c] : a.terms()) {
    if (c.is_zero()) {
      return false;
    }
  }
  return true;
}

} // namespace ncsf
