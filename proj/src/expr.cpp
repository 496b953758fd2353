#include "ncsf/expr.hpp"

#include "ncsf/algebra.hpp"
#include "ncsf/bases.hpp"

#include <cctype>

namespace ncsf {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

Expr make(Expr::Kind kind, std::vector<Expr> children) {
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    Expr left = term();
    for (;;) {
      if (accept('+')) {
        left = make(Expr::Kind::Add, {std::move(left), term()});
      } else if (accept('-')) {
        left = make(Expr::Kind::Sub, {std::move(left), term()});
      } else {
        return left;
      }
    }
  }

  Expr term() {
    Expr left = factor();
    while (accept('*')) {
      left = make(Expr::Kind::Mul, {std::move(left), factor()});
    }
    return left;
  }

  Expr factor() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    }
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return make(Expr::Kind::Neg, {factor()});
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "omega") {
        expect('(');
        Expr inner = expr();
        expect(')');
        return make(Expr::Kind::Omega, {std::move(inner)});
      }
      const auto basis = parse_basis(name);
      if (!basis) {
        pos_ = start;
        fail("unknown basis '" + std::string(name) + "'");
      }
      return atom(*basis);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr number() {
    const std::size_t start = pos_;
    std::string literal = digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a denominator");
      }
      literal += "/" + digits();
    }
    Expr e;
    e.kind = Expr::Kind::Number;
    try {
      e.value = Rational::parse(literal);
    } catch (const std::exception&) {
      pos_ = start;
      fail("invalid rational '" + literal + "'");
    }
    return e;
  }

  Expr atom(Basis basis) {
    expect('[');
    std::vector<int> parts;
    do {
      skip_space();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const std::string literal = digits();
      if (negative || literal.size() > 9 || std::stoi(literal) == 0) {
        pos_ = start;
        fail("composition parts must be positive");
      }
      parts.push_back(std::stoi(literal));
    } while (accept(','));
    expect(']');
    Expr e;
    e.kind = Expr::Kind::Atom;
    e.basis = basis;
    try {
      e.index = Composition(std::move(parts));
    } catch (const std::exception& ex) {
      fail(ex.what());
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: sums 1, products 2, unary minus 3, primaries 4.
int strength(const Expr& e) {
  switch (e.kind) {
  case Expr::Kind::Add:
  case Expr::Kind::Sub:
    return 1;
  case Expr::Kind::Mul:
    return 2;
  case Expr::Kind::Neg:
    return 3;
  default:
    return 4;
  }
}

std::string wrap(const Expr& e, int needed) {
  const std::string s = print_expr(e);
  return strength(e) < needed ? "(" + s + ")" : s;
}

std::string index_text(const Composition& I) {
  std::string out = "[";
  for (std::size_t k = 0; k < I.length(); ++k) {
    out += (k ? "," : "") + std::to_string(I[k]);
  }
  return out + "]";
}

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
  case Expr::Kind::Number:
    return e.value.sign() < 0 ? "(" + e.value.str() + ")" : e.value.str();
  case Expr::Kind::Atom:
    return std::string(basis_atom(e.basis)) + index_text(e.index);
  case Expr::Kind::Add:
    return wrap(e.children[0], 1) + " + " + wrap(e.children[1], 2);
  case Expr::Kind::Sub:
    return wrap(e.children[0], 1) + " - " + wrap(e.children[1], 2);
  case Expr::Kind::Mul:
    return wrap(e.children[0], 2) + "*" + wrap(e.children[1], 3);
  case Expr::Kind::Neg:
    return "-" + wrap(e.children[0], 3);
  case Expr::Kind::Omega:
    return "omega(" + print_expr(e.children[0]) + ")";
  }
  return {};
}

Element eval(const Expr& e) {
  switch (e.kind) {
  case Expr::Kind::Number:
    return Element(Basis::Psi, Composition{}, e.value);
  case Expr::Kind::Atom:
    return to_psi(Element(e.basis, e.index));
  case Expr::Kind::Add:
    return eval(e.children[0]) + eval(e.children[1]);
  case Expr::Kind::Sub:
    return eval(e.children[0]) - eval(e.children[1]);
  case Expr::Kind::Mul:
    return mul_psi(eval(e.children[0]), eval(e.children[1]));
  case Expr::Kind::Neg:
    return -eval(e.children[0]);
  case Expr::Kind::Omega:
    return omega(eval(e.children[0]));
  }
  return Element(Basis::Psi);
}

std::optional<Basis> dominant_basis(const Expr& e) {
  std::optional<Basis> found;
  bool mixed = false;
  auto visit = [&](const auto& self, const Expr& node) -> void {
    if (node.kind == Expr::Kind::Atom) {
      if (found && *found != node.basis) {
        mixed = true;
      }
      found = node.basis;
    }
    for (const auto& child : node.children) {
      self(self, child);
    }
  };
  visit(visit, e);
  if (mixed) {
    return std::nullopt;
  }
  return found;
}

} // namespace ncsf
