#include "ncsf/sym_image.hpp"

#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace ncsf {

namespace {

constexpr int kBitsPerVariable = 5;
constexpr int kMaxExponent = (1 << kBitsPerVariable) - 1;

int max_degree(const PolyOracle& p) {
  int best = 0;
  for (const auto& [m, c] : p.terms()) {
    int total = 0;
    for (const int e : p.unpack(m)) {
      total += e;
    }
    best = std::max(best, total);
  }
  return best;
}

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void require_variables(int n) {
  if (n < 1 || n > kOracleMaxVariables) {
    throw DomainError("oracle needs between 1 and " + std::to_string(kOracleMaxVariables) + " variables");
  }
}

// p_λ realizations are reused across checks.
const PolyOracle& cached_p(const Partition& lambda, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, PolyOracle> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find({lambda, n});
  if (it == memo.end()) {
    PolyOracle acc(n);
    acc.add_term(0, Rational(1));
    for (const int part : lambda.parts()) {
      PolyOracle power_sum(n);
      std::vector<int> exponents(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        exponents[static_cast<std::size_t>(i)] = part;
        power_sum.add_term(power_sum.pack(exponents), Rational(1));
        exponents[static_cast<std::size_t>(i)] = 0;
      }
      acc = poly_mul(acc, power_sum);
    }
    it = memo.emplace(std::make_pair(lambda, n), std::move(acc)).first;
  }
  return it->second;
}

// Σ over distinct orderings I of the parts of `rest`, each prefixed by
// `first` when given, of comm_image(M^I).
SymPElement ordered_image_sum(const Partition& rest, const Composition& first) {
  SymPElement out;
  for (const auto& I : rest.parts().empty() ? std::vector<Composition>{Composition{}} : multiset_permutations(rest)) {
    const Composition index = concat(first, I);
    if (!index.empty()) {
      out += comm_image(Element(Basis::M, index));
    }
  }
  return out;
}

} // namespace

void SymPElement::add_term(const Partition& lambda, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

SymPElement& SymPElement::operator+=(const SymPElement& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) {
    add_term(lambda, c);
  }
  return *this;
}

SymPElement& SymPElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) {
    v *= c;
  }
  return *this;
}

std::string SymPElement::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    os << (first ? "" : " + ") << c.str() << "*p" << lambda.str();
    first = false;
  }
  return os.str();
}

SymPElement sym_p_mul(const SymPElement& a, const SymPElement& b) {
  SymPElement out;
  for (const auto& [x, c] : a.terms()) {
    for (const auto& [y, d] : b.terms()) {
      out.add_term(merged(x, y), c * d);
    }
  }
  return out;
}

SymPElement comm_image(const Element& a) {
  SymPElement out;
  const Element psi = to_psi(a);
  for (const auto& [I, c] : psi.terms()) {
    out.add_term(sort_to_partition(I), c);
  }
  return out;
}

PolyOracle::PolyOracle(int variables) : variables_(variables) { require_variables(variables); }

void PolyOracle::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

PolyOracle::Monomial PolyOracle::pack(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != variables_) {
    throw DomainError("exponent vector has the wrong length");
  }
  Monomial m = 0;
  for (int i = 0; i < variables_; ++i) {
    const int e = exponents[static_cast<std::size_t>(i)];
    if (e < 0 || e > kMaxExponent) {
      throw DomainError("exponent out of range for the oracle");
    }
    m |= static_cast<Monomial>(e) << (kBitsPerVariable * i);
  }
  return m;
}

std::vector<int> PolyOracle::unpack(Monomial m) const {
  std::vector<int> out(static_cast<std::size_t>(variables_));
  for (int i = 0; i < variables_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(m >> (kBitsPerVariable * i) & kMaxExponent);
  }
  return out;
}

PolyOracle& PolyOracle::operator+=(const PolyOracle& rhs) {
  if (rhs.variables_ != variables_) {
    throw DomainError("oracle variable counts differ");
  }
  for (const auto& [m, c] : rhs.terms_) {
    add_term(m, c);
  }
  return *this;
}

PolyOracle& PolyOracle::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) {
    v *= c;
  }
  return *this;
}

PolyOracle poly_mul(const PolyOracle& a, const PolyOracle& b) {
  if (a.variables() != b.variables()) {
    throw DomainError("oracle variable counts differ");
  }
  // A bound on the total degree keeps every packed field from carrying.
  if (max_degree(a) + max_degree(b) > kMaxExponent) {
    throw DomainError("oracle product degree exceeds the packed exponent range");
  }
  PolyOracle out(a.variables());
  for (const auto& [x, c] : a.terms()) {
    for (const auto& [y, d] : b.terms()) {
      out.add_term(x + y, c * d);
    }
  }
  return out;
}

PolyOracle oracle_p(const Partition& lambda, int n) {
  require_variables(n);
  return cached_p(lambda, n);
}

PolyOracle oracle_monomial(const Partition& mu, int n) {
  require_variables(n);
  if (static_cast<int>(mu.length()) > n) {
    return PolyOracle(n);
  }
  std::vector<int> exponents = mu.parts();
  exponents.resize(static_cast<std::size_t>(n), 0);
  std::sort(exponents.begin(), exponents.end());
  PolyOracle out(n);
  do {
    out.add_term(out.pack(exponents), Rational(1));
  } while (std::next_permutation(exponents.begin(), exponents.end()));
  return out;
}

PolyOracle oracle_augmented(const Partition& mu, int n) {
  PolyOracle out = oracle_monomial(mu, n);
  out *= Rational(augmentation_factor(mu));
  return out;
}

PolyOracle realize(const SymPElement& e, int n) {
  require_variables(n);
  PolyOracle out(n);
  for (const auto& [lambda, c] : e.terms()) {
    PolyOracle term = cached_p(lambda, n);
    term *= c;
    out += term;
  }
  return out;
}

bool check_augmented_sum(const Partition& mu) {
  const int n = mu.weight();
  if (n < 1) {
    throw DomainError("check_augmented_sum needs a nonempty partition");
  }
  // Each distinct ordering arises from u(μ) permutations of the part positions.
  SymPElement distinct = ordered_image_sum(mu, Composition{});
  const PolyOracle target_plain = oracle_monomial(mu, n);
  if (realize(distinct, n) != target_plain) {
    return false;
  }
  distinct *= Rational(augmentation_factor(mu));
  return realize(distinct, n) == oracle_augmented(mu, n);
}

bool check_fixed_part(const Partition& mu, int j) {
  const int length = static_cast<int>(mu.length());
  if (j < 1 || j > length) {
    throw DomainError("part index out of range");
  }
  const int n = mu.weight();
  const PolyOracle target = oracle_augmented(mu, n);
  SymPElement average;
  bool single_ok = true;
  for (int i = 1; i <= length; ++i) {
    std::vector<int> rest = mu.parts();
    const int fixed = rest[static_cast<std::size_t>(i - 1)];
    rest.erase(rest.begin() + (i - 1));
    const Partition rest_partition = from_parts(rest);
    SymPElement sum = ordered_image_sum(rest_partition, Composition{fixed});
    sum *= Rational(length * augmentation_factor(rest_partition));
    if (i == j) {
      single_ok = realize(sum, n) == target;
    }
    sum *= Rational(1, length);
    average += sum;
  }
  return single_ok && realize(average, n) == target;
}

bool check_classical_pieri(int r, const Partition& kappa) {
  if (r < 1) {
    throw DomainError("check_classical_pieri needs r >= 1");
  }
  const int n = kappa.weight() + r;
  const PolyOracle lhs = poly_mul(oracle_p(Partition{r}, n), oracle_augmented(kappa, n));
  PolyOracle rhs(n);
  for (std::size_t i = 0; i < kappa.length(); ++i) {
    std::vector<int> parts = kappa.parts();
    parts[i] += r;
    rhs += oracle_augmented(from_parts(parts), n);
  }
  std::vector<int> parts = kappa.parts();
  parts.push_back(r);
  rhs += oracle_augmented(from_parts(parts), n);
  return lhs == rhs;
}

} // namespace ncsf
