#include "ncsf/algebra.hpp"

#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"

namespace ncsf {

namespace {

void require_nonempty(const Composition& I, const char* what) {
  if (I.empty()) {
    throw DomainError(std::string(what) + ": index must be nonempty");
  }
}

long len(const Composition& I) { return static_cast<long>(I.length()); }

} // namespace

Element multiply(const Element& a, const Element& b) { return mul_psi(to_psi(a), to_psi(b)); }

Element omega(const Element& a) {
  Element out(Basis::Psi);
  const Element psi = to_psi(a);
  for (const auto& [I, c] : psi.terms()) {
    out.add_term(reverse(I), sign_power(I.weight() - len(I)) * c);
  }
  return out;
}

Element pieri_left_psi(int r, const Composition& I) {
  require_nonempty(I, "pieri_left_psi");
  if (r < 1) {
    throw DomainError("pieri_left_psi: r must be positive");
  }
  const Composition head{r};
  Element out(Basis::M);
  out.add_term(concat(head, I), Rational(len(I) + 1));
  out.add_term(near_concat(head, I), Rational(len(I)));
  return out;
}

Element pieri_right_f(const Composition& I, int r) {
  require_nonempty(I, "pieri_right_f");
  if (r < 1) {
    throw DomainError("pieri_right_f: r must be positive");
  }
  const Composition tail{r};
  Element out(Basis::F);
  out.add_term(concat(I, tail), Rational(len(I) + 1));
  out.add_term(near_concat(I, tail), Rational(-len(I)));
  return out;
}

Element product_mm(const Composition& I, const Composition& J) {
  require_nonempty(I, "product_mm");
  require_nonempty(J, "product_mm");
  Element out(Basis::M);
  for (const auto& K : coarsenings(I)) {
    out.add_term(concat(K, J), binomial(len(K) + len(J), len(I)));
    out.add_term(near_concat(K, J), binomial(len(K) + len(J) - 1, len(I)));
  }
  return out;
}

Element product_ff(const Composition& I, const Composition& J) {
  require_nonempty(I, "product_ff");
  require_nonempty(J, "product_ff");
  Element out(Basis::F);
  for (const auto& K : coarsenings(J)) {
    const Rational sign = sign_power(len(K) - len(J));
    out.add_term(concat(I, K), sign * binomial(len(I) + len(K), len(J)));
    out.add_term(near_concat(I, K), -sign * binomial(len(I) + len(K) - 1, len(J)));
  }
  return out;
}

Element product_ll(const Composition& I, const Composition& J) {
  require_nonempty(I, "product_ll");
  require_nonempty(J, "product_ll");
  const long top = I.weight() + len(J) - len(I);
  const auto refined = refinements(J);
  Element out(Basis::L);
  for (const auto& K : coarsenings(I)) {
    for (const auto& M : refined) {
      const long base = len(K) + len(M) - len(I);
      out.add_term(concat(K, M), binomial(top, base));
      out.add_term(near_concat(K, M), binomial(top, base - 1));
    }
  }
  return out;
}

Rational pair(const Element& a, const Element& b) {
  const Element in_m = convert(a, Basis::M);
  const Element in_s = convert(b, Basis::S);
  Rational total;
  for (const auto& [I, c] : in_m.terms()) {
    const auto it = in_s.terms().find(I);
    if (it != in_s.terms().end()) {
      total.add_product(c, it->second);
    }
  }
  return total;
}

Rational pair_psi_psi(const Composition& I, const Composition& J) {
  if (I.weight() != J.weight() || !is_coarsening(J, I)) {
    return Rational(0);
  }
  Rational total;
  for (const auto& M : coarsenings(I)) {
    if (!is_coarsening(J, M)) {
      continue;
    }
    const auto p = breakpoints(M, I);
    const long s = len(M);
    Rational weight(1);
    std::size_t previous = 0;
    for (long k = 1; k <= s; ++k) {
      for (std::size_t e = previous; e < p[k - 1]; ++e) {
        weight *= Rational(s - k + 1);
      }
      previous = p[k - 1];
    }
    total += sign_power(len(M) - len(J)) * Rational(lp_rel(M, J)) * weight;
  }
  return total;
}

Rational pair_m_psi(const Composition& I, const Composition& J) {
  if (I.weight() != J.weight() || !is_coarsening(J, I)) {
    return Rational(0);
  }
  return sign_power(len(I) - len(J)) * Rational(lp_rel(I, J));
}

Rational pair_m_r(const Composition& I, const Composition& K) {
  if (I.weight() != K.weight() || !is_coarsening(I, K)) {
    return Rational(0);
  }
  return sign_power(len(K) - len(I));
}

Rational pair_l_s(const Composition& J, const Composition& K) {
  return J.weight() == K.weight() && is_coarsening(J, K) ? Rational(1) : Rational(0);
}

Rational pair_l_r(const Composition& I, const Composition& J) { return I == J ? Rational(1) : Rational(0); }

} // namespace ncsf
