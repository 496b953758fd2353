#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/element.hpp"
#include "ncsf/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace ncsf {

/// Classical symmetric function in the power-sum basis p_λ.
class SymPElement {
public:
  using Terms = std::map<Partition, Rational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Partition& lambda, const Rational& c);

  SymPElement& operator+=(const SymPElement& rhs);
  SymPElement& operator*=(const Rational& c);
  std::string str() const;

  friend bool operator==(const SymPElement&, const SymPElement&) = default;

private:
  Terms terms_;
};

/// Commutative product p_λ p_μ = p_{λ∪μ}.
SymPElement sym_p_mul(const SymPElement& a, const SymPElement& b);

/// Ψ^I ↦ p_{sort(I)}, applied to the Psi coordinates of `a`.
SymPElement comm_image(const Element& a);

/// Largest number of variables a PolyOracle supports.
inline constexpr int kOracleMaxVariables = 12;

/// Polynomial in N commuting variables, exponents packed 5 bits each.
class PolyOracle {
public:
  using Monomial = std::uint64_t;
  using Terms = std::map<Monomial, Rational>;

  explicit PolyOracle(int variables);

  int variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  void add_term(Monomial m, const Rational& c);
  /// Packs an exponent vector of length `variables()`.
  Monomial pack(const std::vector<int>& exponents) const;
  std::vector<int> unpack(Monomial m) const;

  PolyOracle& operator+=(const PolyOracle& rhs);
  PolyOracle& operator*=(const Rational& c);

  friend bool operator==(const PolyOracle&, const PolyOracle&) = default;

private:
  int variables_;
  Terms terms_;
};

PolyOracle poly_mul(const PolyOracle& a, const PolyOracle& b);

PolyOracle oracle_p(const Partition& lambda, int n);
PolyOracle oracle_monomial(const Partition& mu, int n);
/// u(μ) m_μ.
PolyOracle oracle_augmented(const Partition& mu, int n);
PolyOracle realize(const SymPElement& e, int n);

/// m̃_μ against Σ over all orderings of μ of comm_image(M^I).
bool check_augmented_sum(const Partition& mu);
/// m̃_μ = ℓ(μ) · Σ over orderings of μ with part j placed first of comm_image(M^I),
/// plus the average of that statement over all part indices. j is 1-based.
bool check_fixed_part(const Partition& mu, int j);
/// p_r m̃_κ = Σ_i m̃_{κ + r e_i} + m̃_{κ ∪ (r)}, summing over every part index i.
bool check_classical_pieri(int r, const Partition& kappa);

} // namespace ncsf
