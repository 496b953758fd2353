#pragma once

#include "ncsf/bases.hpp"
#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"

#include <utility>
#include <vector>

namespace ncsf {

enum class KostkaKind { Kostka, Gessel };

/// Ribbon coefficients in M (Kostka) or L (Kostka-Gessel), with flags
/// computed by scanning the stored nonzero entries.
struct KostkaReport {
  KostkaKind kind;
  int degree;
  TransitionMatrix matrix;
  bool all_integer = true;
  bool all_nonnegative = true;
  Rational min_entry;
  Rational max_entry;
  /// Column indices of the nonzero entries of each row.
  std::vector<std::vector<std::size_t>> support;
  /// (row, column) of every entry that is not a nonnegative integer.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

KostkaReport kostka_matrix(int n);
KostkaReport kostka_gessel_matrix(int n);
KostkaReport positivity_report(int n, KostkaKind which);

/// R^{k 1^r} = binom(k+r-1, r) Σ_{|I|=k} M^{I·1^r}.
Element hook_row(int k, int r);
/// R^{1^r k} = Σ_{|J|=r, |I|=k} binom(ℓ(I)+ℓ(J)-1, r) M^{J·I} + binom(ℓ(I)+ℓ(J)-2, r) M^{J▷I}.
Element lower_hook_row(int r, int k);

} // namespace ncsf
