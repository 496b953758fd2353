#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncsf {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  /// 0-based offset into the input.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Syntax tree. `*` keeps operand order.
struct Expr {
  enum class Kind { Number, Atom, Add, Sub, Mul, Neg, Omega };

  Kind kind = Kind::Number;
  Rational value;                 // Number
  Basis basis = Basis::Psi;       // Atom
  Composition index;              // Atom
  std::vector<Expr> children;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := '-' factor | rational | atom | 'omega' '(' expr ')' | '(' expr ')';
/// atom := name '[' int (',' int)* ']'.
Expr parse_expr(std::string_view text);
/// Reparses to an equal tree.
std::string print_expr(const Expr& e);
/// Value in Psi coordinates.
Element eval(const Expr& e);
/// The basis of every atom when they all agree.
std::optional<Basis> dominant_basis(const Expr& e);

} // namespace ncsf
