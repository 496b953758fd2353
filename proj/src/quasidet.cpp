#include "ncsf/quasidet.hpp"

#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"

#include <map>

namespace ncsf {

namespace {

constexpr Symbol kIndexBase = 1024;

std::vector<Rational> first_integers(int count, int sign) {
  std::vector<Rational> out;
  for (int j = 1; j <= count; ++j) {
    out.emplace_back(sign * j);
  }
  return out;
}

// b_j = -(n - j)
std::vector<Rational> descending_negatives(int n) {
  std::vector<Rational> out;
  for (int j = 1; j < n; ++j) {
    out.emplace_back(-(n - j));
  }
  return out;
}

// qdet of a generic matrix, then entry (k, j) -> value(k, j), times `scale`.
template <class Value>
Element evaluate(int n, std::vector<Rational> b, const Rational& scale, Value value) {
  std::map<Symbol, Element> env;
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      env.emplace(entry_symbol(k, j), value(k, j));
    }
  }
  return scale * substitute(qdet(QMatrix::generic(n, std::move(b))), env);
}

Element psi_single(int part) { return Element(Basis::Psi, Composition{part}); }

// Σ_{p=n-k+1}^{n-j+1} i_p, 1-based.
int block_sum(const Composition& I, int k, int j) {
  const int n = static_cast<int>(I.length());
  int total = 0;
  for (int p = n - k + 1; p <= n - j + 1; ++p) {
    total += I[static_cast<std::size_t>(p - 1)];
  }
  return total;
}

void require_nonempty(const Composition& I) {
  if (I.empty()) {
    throw DomainError("matrix construction needs a nonempty index");
  }
}

} // namespace

Symbol entry_symbol(int i, int j) { return static_cast<Symbol>(i) * kIndexBase + static_cast<Symbol>(j); }

std::string symbol_name(Symbol s) {
  const auto i = s / kIndexBase;
  const auto j = s % kIndexBase;
  if (i > 9 || j > 9) {
    return "a" + std::to_string(i) + "," + std::to_string(j);
  }
  return "a" + std::to_string(i) + std::to_string(j);
}

QMatrix QMatrix::generic(int n, std::vector<Rational> superdiagonal) {
  if (n < 1) {
    throw DomainError("quasideterminant size must be positive");
  }
  std::vector<std::vector<Symbol>> lower(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      lower[static_cast<std::size_t>(i - 1)].push_back(entry_symbol(i, j));
    }
  }
  return QMatrix(std::move(lower), std::move(superdiagonal));
}

QMatrix::QMatrix(std::vector<std::vector<Symbol>> lower, std::vector<Rational> superdiagonal)
    : lower_(std::move(lower)), b_(std::move(superdiagonal)) {
  const std::size_t n = lower_.size();
  if (n == 0) {
    throw DomainError("quasideterminant size must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lower_[i].size() != i + 1) {
      throw DomainError("row " + std::to_string(i + 1) + " must hold " + std::to_string(i + 1) + " entries");
    }
  }
  if (b_.size() != n - 1) {
    throw DomainError("superdiagonal must have n-1 entries");
  }
}

Symbol QMatrix::entry(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > i) {
    throw DomainError("entry index out of range");
  }
  return lower_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

const Rational& QMatrix::b(int j) const {
  if (j < 1 || j >= size()) {
    throw DomainError("superdiagonal index out of range");
  }
  return b_[static_cast<std::size_t>(j - 1)];
}

SymElement qdet(const QMatrix& m) {
  const int n = m.size();
  for (const auto& bj : m.superdiagonal()) {
    if (bj.is_zero()) {
      throw DomainError("quasideterminant needs invertible superdiagonal entries");
    }
  }
  SymElement out;
  // Chains are subsets of {2..n}; bit t stands for t + 2.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  SymWord word;
  for (std::uint64_t subset = 0; subset < count; ++subset) {
    word.clear();
    Rational c(1);
    int row = n;
    for (int j = n; j >= 2; --j) {
      if ((subset >> (j - 2) & 1U) == 0) {
        continue;
      }
      word.push_back(m.entry(row, j));
      c /= m.b(j - 1);
      c = -c;
      row = j - 1;
    }
    word.push_back(m.entry(row, 1));
    out.add_term(word, c);
  }
  return out;
}

QMatrix t_reduce(const QMatrix& m, int j) {
  const int n = m.size();
  if (j < 1 || j > n - 1) {
    throw DomainError("T_j needs 1 <= j <= n-1");
  }
  std::vector<std::vector<Symbol>> lower(static_cast<std::size_t>(n - 1));
  for (int r = 1; r <= n - 1; ++r) {
    const int old_row = r < j ? r : r + 1;
    for (int c = 1; c <= r; ++c) {
      const int old_col = c <= j ? c : c + 1;
      lower[static_cast<std::size_t>(r - 1)].push_back(m.entry(old_row, old_col));
    }
  }
  return QMatrix(std::move(lower), first_integers(n - 2, 1));
}

QMatrix t_reduce_set(const QMatrix& m, const std::set<int>& js) {
  QMatrix out = m;
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    out = t_reduce(out, *it);
  }
  if (js.empty()) {
    out = m.with_superdiagonal(first_integers(m.size() - 1, 1));
  }
  return out;
}

bool kaleidoscope_check(int n) {
  if (n < 1) {
    throw DomainError("kaleidoscope_check needs n >= 1");
  }
  SymElement lhs = sym_scale(Rational(1, n), qdet(QMatrix::generic(n, descending_negatives(n))));
  const QMatrix base = QMatrix::generic(n, first_integers(n - 1, 1));
  SymElement rhs;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
    std::set<int> js;
    for (int j = 1; j <= n - 1; ++j) {
      if (subset >> (j - 1) & 1U) {
        js.insert(j);
      }
    }
    const long k = static_cast<long>(js.size());
    const Rational c = sign_power(n - k - 1) / Rational(n - k);
    rhs += sym_scale(c, qdet(t_reduce_set(base, js)));
  }
  return lhs == rhs;
}

Element build_m_def(const Composition& I) {
  require_nonempty(I);
  const int n = static_cast<int>(I.length());
  return evaluate(n, first_integers(n - 1, 1), sign_power(n - 1) / Rational(n),
                  [&](int k, int j) { return psi_single(block_sum(I, k, j)); });
}

Element build_f_def(const Composition& I) {
  require_nonempty(I);
  const int n = static_cast<int>(I.length());
  return evaluate(n, descending_negatives(n), Rational(1, n),
                  [&](int k, int j) { return psi_single(block_sum(I, k, j)); });
}

Element build_lambda_def(int n) {
  if (n < 1) {
    throw DomainError("build_lambda_def needs n >= 1");
  }
  return evaluate(n, first_integers(n - 1, 1), sign_power(n - 1) / Rational(n),
                  [](int k, int j) { return psi_single(k - j + 1); });
}

Element build_s_def(int n) {
  if (n < 1) {
    throw DomainError("build_s_def needs n >= 1");
  }
  return evaluate(n, descending_negatives(n), Rational(1, n), [](int k, int j) { return psi_single(k - j + 1); });
}

Element build_r_def(const Composition& I) {
  require_nonempty(I);
  const int n = static_cast<int>(I.length());
  return evaluate(n, std::vector<Rational>(static_cast<std::size_t>(n - 1), Rational(1)), sign_power(n - 1),
                  [&](int k, int j) { return s_to_psi(Composition{block_sum(I, k, j)}); });
}

} // namespace ncsf
