#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"
#include "ncsf/free_algebra.hpp"
#include "ncsf/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace ncsf {

/// Symbol standing for the generic entry a_{ij} (1-based).
Symbol entry_symbol(int i, int j);
/// "a31" for a_{31}; indices above 9 are comma separated, "a12,3".
std::string symbol_name(Symbol s);

/// Almost-triangular n×n matrix: symbolic entries on and below the diagonal,
/// central rationals b_1..b_{n-1} on the superdiagonal, zeros above it.
class QMatrix {
public:
  /// Entry (i, j) holds entry_symbol(i, j).
  static QMatrix generic(int n, std::vector<Rational> superdiagonal);

  QMatrix(std::vector<std::vector<Symbol>> lower, std::vector<Rational> superdiagonal);

  int size() const { return static_cast<int>(lower_.size()); }
  /// 1-based, requires j ≤ i.
  Symbol entry(int i, int j) const;
  /// 1-based, 1 ≤ j ≤ n-1.
  const Rational& b(int j) const;
  const std::vector<Rational>& superdiagonal() const { return b_; }
  /// Same entries, new superdiagonal.
  QMatrix with_superdiagonal(std::vector<Rational> superdiagonal) const { return QMatrix(lower_, std::move(superdiagonal)); }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::vector<std::vector<Symbol>> lower_;
  std::vector<Rational> b_;
};

/// Quasideterminant at the lower-left corner: a sum over decreasing chains
/// n ≥ j_1 > … > j_k > 1 of (-1)^k a_{n j_1} b_{j_1-1}^{-1} a_{j_1-1, j_2} … a_{j_k-1, 1}.
SymElement qdet(const QMatrix& m);

/// Deletes row j and column j+1, then refills the superdiagonal with 1..n-2.
QMatrix t_reduce(const QMatrix& m, int j);
/// Applies T_j for every j in `js` (largest first); superdiagonal 1..n-|js|-1.
QMatrix t_reduce_set(const QMatrix& m, const std::set<int>& js);

/// (1/n) Q_n(-(n-1), …, -1) = Σ_J (-1)^{n-k-1}/(n-k) qdet(T_J Q_n(1, …, n-1)), k = |J|.
bool kaleidoscope_check(int n);

// Matrix-based constructions, returned in Psi coordinates.
Element build_m_def(const Composition& I);
Element build_f_def(const Composition& I);
Element build_lambda_def(int n);
Element build_s_def(int n);
Element build_r_def(const Composition& I);

} // namespace ncsf
