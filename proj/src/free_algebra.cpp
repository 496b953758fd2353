#include "ncsf/free_algebra.hpp"

#include "ncsf/error.hpp"

namespace ncsf {

SymElement::SymElement(SymWord word, const Rational& c) { add_term(word, c); }

void SymElement::add_term(const SymWord& word, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

SymElement& SymElement::operator+=(const SymElement& rhs) {
  for (const auto& [word, c] : rhs.terms_) {
    add_term(word, c);
  }
  return *this;
}

SymElement& SymElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

std::string SymElement::str(const std::function<std::string(Symbol)>& name) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      out += c.sign() < 0 ? "-" : "";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (!magnitude.is_one() || word.empty()) {
      out += magnitude.str();
      if (!word.empty()) {
        out += "*";
      }
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i != 0) {
        out += " ";
      }
      out += name(word[i]);
    }
  }
  return out;
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
  SymElement out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) {
      SymWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, x * y);
    }
  }
  return out;
}

SymElement sym_add(const SymElement& a, const SymElement& b) {
  SymElement out = a;
  out += b;
  return out;
}

SymElement sym_scale(const Rational& c, const SymElement& a) {
  SymElement out = a;
  out *= c;
  return out;
}

Element substitute(const SymElement& a, const std::map<Symbol, Element>& env) {
  for (const auto& [symbol, value] : env) {
    if (value.basis() != Basis::Psi) {
      throw DomainError("substitute: bound values must be written in the Psi basis");
    }
  }
  Element out(Basis::Psi);
  for (const auto& [word, c] : a.terms()) {
    Element product = Element::unit(Basis::Psi);
    for (const Symbol s : word) {
      const auto it = env.find(s);
      if (it == env.end()) {
        throw DomainError("substitute: unbound symbol " + std::to_string(s));
      }
      product = mul_psi(product, it->second);
    }
    product *= c;
    out += product;
  }
  return out;
}

} // namespace ncsf
