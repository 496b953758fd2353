#include "ncsf/bases.hpp"

#include "ncsf/error.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ncsf {

namespace {

// A homogeneous expansion: coefficients keyed by descent mask within one degree.
struct Row {
  int degree = 0;
  std::vector<std::pair<std::uint64_t, Rational>> entries;
};
using RowPtr = std::shared_ptr<const Row>;

enum class RowKind : std::uint8_t {
  MToPsi,
  FToPsi,
  SToPsi,
  LambdaToPsi,
  PsiToM,
  PsiToS,
  PsiToLambda,
  RToS,
  SToR,
  LToM,
  MToL,
  FToM,
  MToF,
};

struct RowKey {
  RowKind kind;
  int degree;
  std::uint64_t mask;
  friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const noexcept {
    std::uint64_t h = k.mask * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.degree) << 8 | static_cast<std::uint64_t>(k.kind);
    return std::hash<std::uint64_t>{}(h);
  }
};

constexpr int kDenseSlotMaxDegree = 14;

// Sums scaled rows; dense per degree for small degrees.
class Accumulator {
public:
  void add(int degree, std::uint64_t mask, const Rational& c) {
    Slot& slot = slot_for(degree);
    if (slot.dense) {
      slot.values[mask] += c;
    } else {
      slot.sparse[mask] += c;
    }
  }

  void add_row(const Rational& c, const Row& row) {
    Slot& slot = slot_for(row.degree);
    for (const auto& [mask, value] : row.entries) {
      if (slot.dense) {
        slot.values[mask].add_product(c, value);
      } else {
        slot.sparse[mask].add_product(c, value);
      }
    }
  }

  Row take_row(int degree) {
    Row row;
    row.degree = degree;
    const auto it = slots_.find(degree);
    if (it == slots_.end()) {
      return row;
    }
    Slot& slot = it->second;
    if (slot.dense) {
      for (std::size_t m = 0; m < slot.values.size(); ++m) {
        if (!slot.values[m].is_zero()) {
          row.entries.emplace_back(m, std::move(slot.values[m]));
        }
      }
    } else {
      for (auto& [m, v] : slot.sparse) {
        if (!v.is_zero()) {
          row.entries.emplace_back(m, std::move(v));
        }
      }
    }
    slots_.erase(it);
    return row;
  }

  Element finish(Basis basis) {
    Element out(basis);
    while (!slots_.empty()) {
      const int degree = slots_.begin()->first;
      const Row row = take_row(degree);
      for (const auto& [mask, v] : row.entries) {
        out.add_term(Composition::from_mask(degree, mask), v);
      }
    }
    return out;
  }

private:
  struct Slot {
    bool dense = true;
    std::vector<Rational> values;
    std::map<std::uint64_t, Rational> sparse;
  };

  Slot& slot_for(int degree) {
    auto [it, inserted] = slots_.try_emplace(degree);
    if (inserted) {
      it->second.dense = degree <= kDenseSlotMaxDegree;
      if (it->second.dense) {
        it->second.values.resize(degree == 0 ? 1 : (std::size_t{1} << (degree - 1)));
      }
    }
    return it->second;
  }

  std::map<int, Slot> slots_;
};

Row row_from_element(const Element& e, int degree) {
  Row row;
  row.degree = degree;
  for (const auto& [I, c] : e.terms()) {
    row.entries.emplace_back(I.mask(), c);
  }
  return row;
}

Element element_from_row(Basis basis, const Row& row) {
  Element out(basis);
  for (const auto& [mask, c] : row.entries) {
    out.add_term(Composition::from_mask(row.degree, mask), c);
  }
  return out;
}

// --- closed forms -----------------------------------------------------------

Row compute_m_to_psi(const Composition& I) {
  Row row;
  row.degree = I.weight();
  const long len = static_cast<long>(I.length());
  for (const auto& J : coarsenings(I)) {
    const auto p = breakpoints(J, I);
    Rational denominator(1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const long pk = k == 0 ? 0 : static_cast<long>(p[k - 1]);
      denominator *= Rational(len - pk);
    }
    row.entries.emplace_back(J.mask(), sign_power(len - static_cast<long>(J.length())) / denominator);
  }
  return row;
}

Row compute_f_to_psi(const Composition& I) {
  Row row;
  row.degree = I.weight();
  for (const auto& J : coarsenings(I)) {
    Rational denominator(1);
    for (const auto pk : breakpoints(J, I)) {
      denominator *= Rational(static_cast<long>(pk));
    }
    row.entries.emplace_back(J.mask(), denominator.inverse());
  }
  return row;
}

Row compute_s_to_psi(const Composition& I) {
  Row row;
  row.degree = I.weight();
  for (const auto& J : refinements(I)) {
    row.entries.emplace_back(J.mask(), pi_u_rel(J, I).inverse());
  }
  return row;
}

Row compute_psi_to_m(const Composition& I) {
  Row row;
  row.degree = I.weight();
  for (const auto& J : coarsenings(I)) {
    const auto p = breakpoints(J, I);
    const long s = static_cast<long>(J.length());
    mpz_class product = 1;
    std::size_t previous = 0;
    for (long k = 1; k <= s; ++k) {
      mpz_class factor;
      mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(s - k + 1),
                    static_cast<unsigned long>(p[k - 1] - previous));
      product *= factor;
      previous = p[k - 1];
    }
    row.entries.emplace_back(J.mask(), Rational(mpq_class(product)));
  }
  return row;
}

Row compute_psi_to_s(const Composition& I) {
  Row row;
  row.degree = I.weight();
  for (const auto& J : refinements(I)) {
    const long sign_exp = static_cast<long>(J.length()) - static_cast<long>(I.length());
    row.entries.emplace_back(J.mask(), sign_power(sign_exp) * Rational(lp_rel(J, I)));
  }
  return row;
}

enum class Range { Coarsenings, Refinements };

Row compute_signed_sum(const Composition& I, Range range, bool alternating) {
  Row row;
  row.degree = I.weight();
  const auto family = range == Range::Coarsenings ? coarsenings(I) : refinements(I);
  for (const auto& J : family) {
    const long diff = static_cast<long>(J.length()) - static_cast<long>(I.length());
    row.entries.emplace_back(J.mask(), alternating ? sign_power(diff) : Rational(1));
  }
  return row;
}

// --- cache ------------------------------------------------------------------

class RowCache {
public:
  RowPtr find(const RowKey& key) const {
    std::shared_lock lock(mutex_);
    const auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : it->second;
  }

  RowPtr insert(const RowKey& key, Row row) {
    auto ptr = std::make_shared<const Row>(std::move(row));
    std::unique_lock lock(mutex_);
    return rows_.try_emplace(key, std::move(ptr)).first->second;
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<RowKey, RowPtr, RowKeyHash> rows_;
};

RowCache& cache() {
  static RowCache instance;
  return instance;
}

RowPtr row(RowKind kind, const Composition& I);

Row compute(RowKind kind, const Composition& I) {
  switch (kind) {
  case RowKind::MToPsi:
    return compute_m_to_psi(I);
  case RowKind::FToPsi:
    return compute_f_to_psi(I);
  case RowKind::SToPsi:
    return compute_s_to_psi(I);
  case RowKind::LambdaToPsi: {
    Element product = Element::unit(Basis::Psi);
    for (const int part : I.parts()) {
      const Composition column(std::vector<int>(static_cast<std::size_t>(part), 1));
      product = mul_psi(product, element_from_row(Basis::Psi, *row(RowKind::MToPsi, column)));
    }
    return row_from_element(product, I.weight());
  }
  case RowKind::PsiToM:
    return compute_psi_to_m(I);
  case RowKind::PsiToS:
    return compute_psi_to_s(I);
  case RowKind::PsiToLambda: {
    // Ψ^I = ω(ε Ψ^{Ī}) with ε = (-1)^{|I|-ℓ(I)}; writing Ψ^{Ī} = Σ c_J S^J
    // and using ω(S^J) = Λ^{J̄} gives Ψ^I = ε Σ c_J Λ^{J̄}.
    const Rational eps = sign_power(I.weight() - static_cast<long>(I.length()));
    const RowPtr in_s = row(RowKind::PsiToS, reverse(I));
    Accumulator acc;
    for (const auto& [mask, c] : in_s->entries) {
      acc.add(I.weight(), reverse(Composition::from_mask(I.weight(), mask)).mask(), eps * c);
    }
    return acc.take_row(I.weight());
  }
  case RowKind::RToS:
    return compute_signed_sum(I, Range::Coarsenings, true);
  case RowKind::SToR:
    return compute_signed_sum(I, Range::Coarsenings, false);
  case RowKind::LToM:
    return compute_signed_sum(I, Range::Refinements, false);
  case RowKind::MToL:
    return compute_signed_sum(I, Range::Refinements, true);
  case RowKind::FToM:
    return compute_signed_sum(I, Range::Coarsenings, false);
  case RowKind::MToF:
    return compute_signed_sum(I, Range::Coarsenings, true);
  }
  throw DomainError("unknown expansion kind");
}

RowPtr row(RowKind kind, const Composition& I) {
  const RowKey key{kind, I.weight(), I.mask()};
  if (auto hit = cache().find(key)) {
    return hit;
  }
  return cache().insert(key, compute(kind, I));
}

RowKind to_psi_kind(Basis b) {
  switch (b) {
  case Basis::S:
    return RowKind::SToPsi;
  case Basis::Lambda:
    return RowKind::LambdaToPsi;
  case Basis::M:
    return RowKind::MToPsi;
  case Basis::F:
    return RowKind::FToPsi;
  default:
    break;
  }
  throw DomainError("no single-row expansion for this basis");
}

RowKind from_psi_kind(Basis b) {
  switch (b) {
  case Basis::S:
    return RowKind::PsiToS;
  case Basis::Lambda:
    return RowKind::PsiToLambda;
  case Basis::M:
    return RowKind::PsiToM;
  default:
    break;
  }
  throw DomainError("no single-row expansion for this basis");
}

Element apply(const Element& a, RowKind kind, Basis target) {
  Accumulator acc;
  for (const auto& [I, c] : a.terms()) {
    acc.add_row(c, *row(kind, I));
  }
  return acc.finish(target);
}

Element single(RowKind kind, Basis target, const Composition& I) {
  return element_from_row(target, *row(kind, I));
}

} // namespace

Element m_to_psi(const Composition& I) { return single(RowKind::MToPsi, Basis::Psi, I); }
Element f_to_psi(const Composition& I) { return single(RowKind::FToPsi, Basis::Psi, I); }
Element s_to_psi(const Composition& I) { return single(RowKind::SToPsi, Basis::Psi, I); }
Element lambda_to_psi(const Composition& I) { return single(RowKind::LambdaToPsi, Basis::Psi, I); }
Element psi_to_m_expand(const Composition& I) { return single(RowKind::PsiToM, Basis::M, I); }
Element psi_to_s_expand(const Composition& I) { return single(RowKind::PsiToS, Basis::S, I); }
Element r_to_s(const Composition& I) { return single(RowKind::RToS, Basis::S, I); }
Element s_to_r_expand(const Composition& K) { return single(RowKind::SToR, Basis::R, K); }
Element l_to_m(const Composition& I) { return single(RowKind::LToM, Basis::M, I); }
Element m_to_l_expand(const Composition& I) { return single(RowKind::MToL, Basis::L, I); }
Element f_to_m(const Composition& I) { return single(RowKind::FToM, Basis::M, I); }
Element m_to_f_expand(const Composition& I) { return single(RowKind::MToF, Basis::F, I); }

// L, R, F (outbound) are staged through an intermediate basis: composite rows
// are dense with large entries, the intermediate vectors are not.
Element to_psi(const Element& a) {
  switch (a.basis()) {
  case Basis::Psi:
    return a;
  case Basis::L:
    return apply(apply(a, RowKind::LToM, Basis::M), RowKind::MToPsi, Basis::Psi);
  case Basis::R:
    return apply(apply(a, RowKind::RToS, Basis::S), RowKind::SToPsi, Basis::Psi);
  default:
    return apply(a, to_psi_kind(a.basis()), Basis::Psi);
  }
}

Element from_psi(const Element& a, Basis to) {
  if (a.basis() != Basis::Psi) {
    throw DomainError("from_psi: input must be written in the Psi basis");
  }
  switch (to) {
  case Basis::Psi:
    return a;
  case Basis::F:
    return apply(apply(a, RowKind::PsiToM, Basis::M), RowKind::MToF, Basis::F);
  case Basis::L:
    return apply(apply(a, RowKind::PsiToM, Basis::M), RowKind::MToL, Basis::L);
  case Basis::R:
    return apply(apply(a, RowKind::PsiToS, Basis::S), RowKind::SToR, Basis::R);
  default:
    return apply(a, from_psi_kind(to), to);
  }
}

Element convert(const Element& a, Basis to) {
  if (a.basis() == to) {
    return a;
  }
  if (a.is_zero()) {
    return Element(to);
  }
  return from_psi(to_psi(a), to);
}

// --- TransitionMatrix ---------------------------------------------------------

TransitionMatrix::TransitionMatrix(Basis from, Basis to, int degree) : from_(from), to_(to), degree_(degree) {
  if (degree < 1 || degree > kMaxWeight) {
    throw DomainError("transition matrix degree out of range");
  }
  size_ = std::size_t{1} << (degree - 1);
  if (degree <= kDenseMatrixMaxDegree) {
    dense_.resize(size_ * size_);
  } else {
    sparse_.resize(size_);
  }
}

Composition TransitionMatrix::index(std::size_t i) const { return Composition::from_mask(degree_, i); }

Rational TransitionMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= size_ || col >= size_) {
    throw DomainError("matrix index out of range");
  }
  if (is_dense()) {
    return dense_[row * size_ + col];
  }
  const auto it = sparse_[row].find(col);
  return it == sparse_[row].end() ? Rational(0) : it->second;
}

void TransitionMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= size_ || col >= size_) {
    throw DomainError("matrix index out of range");
  }
  if (is_dense()) {
    dense_[row * size_ + col] = value;
  } else if (value.is_zero()) {
    sparse_[row].erase(col);
  } else {
    sparse_[row][col] = value;
  }
}

std::vector<std::pair<std::size_t, Rational>> TransitionMatrix::row_entries(std::size_t row) const {
  std::vector<std::pair<std::size_t, Rational>> out;
  if (is_dense()) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (!dense_[row * size_ + c].is_zero()) {
        out.emplace_back(c, dense_[row * size_ + c]);
      }
    }
  } else {
    out.assign(sparse_[row].begin(), sparse_[row].end());
  }
  return out;
}

bool TransitionMatrix::is_identity() const {
  for (std::size_t r = 0; r < size_; ++r) {
    const auto entries = row_entries(r);
    if (entries.size() != 1 || entries[0].first != r || !entries[0].second.is_one()) {
      return false;
    }
  }
  return true;
}

bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.from_ != b.from_ || a.to_ != b.to_ || a.degree_ != b.degree_) {
    return false;
  }
  for (std::size_t r = 0; r < a.size_; ++r) {
    if (a.row_entries(r) != b.row_entries(r)) {
      return false;
    }
  }
  return true;
}

TransitionMatrix transition_matrix(Basis from, Basis to, int n) {
  TransitionMatrix out(from, to, n);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const Element image = convert(Element(from, out.index(r)), to);
    for (const auto& [J, c] : image.terms()) {
      out.set(r, J.mask(), c);
    }
  }
  return out;
}

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.to() != b.from() || a.degree() != b.degree()) {
    throw DomainError("matrix product: incompatible factors");
  }
  TransitionMatrix out(a.from(), b.to(), a.degree());
  std::vector<std::vector<std::pair<std::size_t, Rational>>> b_rows(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    b_rows[k] = b.row_entries(k);
  }
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::vector<Rational> acc(a.size());
    for (const auto& [k, x] : a.row_entries(r)) {
      for (const auto& [c, y] : b_rows[k]) {
        acc[c].add_product(x, y);
      }
    }
    for (std::size_t c = 0; c < acc.size(); ++c) {
      if (!acc[c].is_zero()) {
        out.set(r, c, acc[c]);
      }
    }
  }
  return out;
}

} // namespace ncsf
