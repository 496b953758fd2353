#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ncsf {

// Closed-form expansions of a single basis element. Each returns an Element
// written in the basis named after "_to_" (or, for the *_expand functions,
// the target basis of the expansion). Degree-0 inputs give the unit.

/// M^I = Σ_{J⪯I} (-1)^{ℓ(I)-ℓ(J)} / Π_{k=0}^{s-1}(ℓ(I)-p_k) Ψ^J.
Element m_to_psi(const Composition& I);
/// F^I = Σ_{J⪯I} 1 / Π_{k=1}^{s} p_k Ψ^J.
Element f_to_psi(const Composition& I);
/// S^I = Σ_{J⪰I} Ψ^J / π_u(J, I).
Element s_to_psi(const Composition& I);
/// Λ^I = Λ_{i_1} ... Λ_{i_n} with Λ_k = M^{1^k}.
Element lambda_to_psi(const Composition& I);

/// Ψ^I in the M basis: Σ_{J⪯I} Π_k (ℓ(J)-k+1)^{p_k-p_{k-1}} M^J.
Element psi_to_m_expand(const Composition& I);
/// Ψ^I in the S basis: Σ_{J⪰I} (-1)^{ℓ(J)-ℓ(I)} lp(J, I) S^J.
Element psi_to_s_expand(const Composition& I);

Element r_to_s(const Composition& I);
Element s_to_r_expand(const Composition& K);
Element l_to_m(const Composition& I);
Element m_to_l_expand(const Composition& I);
Element f_to_m(const Composition& I);
Element m_to_f_expand(const Composition& I);

/// Rewrites `a` in Psi coordinates.
Element to_psi(const Element& a);
/// Rewrites a Psi-basis element in basis `to`.
Element from_psi(const Element& a, Basis to);
/// Generic router: X -> Psi -> Y.
Element convert(const Element& a, Basis to);

inline Element basis_element(Basis b, const Composition& I) { return Element(b, I); }

/// Matrices up to this degree keep a dense entry array.
inline constexpr int kDenseMatrixMaxDegree = 10;

/// Square matrix indexed by the compositions of `degree` in canonical order;
/// row I holds the coordinates of from^I in the `to` basis.
class TransitionMatrix {
public:
  TransitionMatrix(Basis from, Basis to, int degree);

  Basis from() const { return from_; }
  Basis to() const { return to_; }
  int degree() const { return degree_; }
  std::size_t size() const { return size_; }
  bool is_dense() const { return !dense_.empty(); }
  Composition index(std::size_t i) const;

  Rational at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Rational& value);
  /// Nonzero entries of a row, ascending column.
  std::vector<std::pair<std::size_t, Rational>> row_entries(std::size_t row) const;

  bool is_identity() const;

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b);

private:
  Basis from_;
  Basis to_;
  int degree_;
  std::size_t size_;
  std::vector<Rational> dense_;
  std::vector<std::map<std::size_t, Rational>> sparse_;
};

TransitionMatrix transition_matrix(Basis from, Basis to, int n);

/// Coefficients of Ψ^I in the ribbon basis, psr(J, I) = entry (I, J).
inline TransitionMatrix psr_matrix(int n) { return transition_matrix(Basis::Psi, Basis::R, n); }

/// (a · b), requires a.to() == b.from() and equal degrees.
TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);

} // namespace ncsf
