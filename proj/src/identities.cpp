#include "ncsf/identities.hpp"

#include "ncsf/algebra.hpp"
#include "ncsf/bases.hpp"
#include "ncsf/error.hpp"
#include "ncsf/kostka.hpp"
#include "ncsf/quasidet.hpp"
#include "ncsf/sym_image.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace ncsf {

namespace {

std::string show(const Element& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : e.terms()) {
    os << (first ? "" : " + ") << c.str() << "*" << basis_name(e.basis()) << I.str();
    first = false;
  }
  return os.str();
}

// Collects the first failure; later failures are ignored.
class Check {
public:
  Check(std::string name, int bound) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
    result_.bound = bound;
  }

  bool failed() const { return !result_.pass; }

  bool expect(bool ok, const std::function<std::string()>& describe) {
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  bool expect_equal(const Element& lhs, const Element& rhs, const std::string& where) {
    return expect(lhs == rhs, [&] { return where + ": lhs = " + show(lhs) + "; rhs = " + show(rhs); });
  }

  bool expect_equal(const Rational& lhs, const Rational& rhs, const std::string& where) {
    return expect(lhs == rhs, [&] { return where + ": lhs = " + lhs.str() + "; rhs = " + rhs.str(); });
  }

  VerificationResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

private:
  VerificationResult result_;
  std::chrono::steady_clock::time_point start_;
};

void require_bound(int n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + ": bound must be positive");
  }
}

Element psi(const Composition& I) { return Element(Basis::Psi, I); }
Element psi_part(int r) { return psi(Composition{r}); }
Element in_psi(Basis b, const Composition& I) { return to_psi(Element(b, I)); }

Composition slice(const Composition& I, std::size_t from, std::size_t to) {
  return Composition(std::vector<int>(I.parts().begin() + static_cast<long>(from),
                                      I.parts().begin() + static_cast<long>(to)));
}

int sum_of(const Composition& I, std::size_t from, std::size_t to) {
  int total = 0;
  for (std::size_t k = from; k < to; ++k) {
    total += I[k];
  }
  return total;
}

Composition ones(int r) { return Composition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

// 1^k · (m)
Composition lower_hook(int k, int m) { return concat(ones(k), Composition{m}); }

Rational power(const Rational& x, long e) {
  Rational out(1);
  for (long i = 0; i < e; ++i) {
    out *= x;
  }
  return out;
}

std::string pair_label(const char* what, const Composition& I, const Composition& J) {
  return std::string(what) + " " + I.str() + " " + J.str();
}

// Per-degree Gram data: M- and S-coordinates of every basis element.
struct Coordinates {
  std::vector<Composition> index;
  std::vector<Element> in_m;
  std::vector<Element> in_s;
};

Coordinates coordinates(const std::vector<Element>& elements) {
  Coordinates out;
  for (const auto& e : elements) {
    out.in_m.push_back(convert(e, Basis::M));
    out.in_s.push_back(convert(e, Basis::S));
  }
  return out;
}

Rational dot(const Element& in_m, const Element& in_s) {
  Rational total;
  const auto& small = in_m.size() <= in_s.size() ? in_m : in_s;
  const auto& large = in_m.size() <= in_s.size() ? in_s : in_m;
  for (const auto& [I, c] : small.terms()) {
    const auto it = large.terms().find(I);
    if (it != large.terms().end()) {
      total.add_product(c, it->second);
    }
  }
  return total;
}

} // namespace

VerificationResult verify_newton(int n) {
  require_bound(n, "verify_newton");
  Check check("newton", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    for (const auto& I : compositions_of(m)) {
      const std::size_t len = I.length();
      Element rhs_m(Basis::Psi);
      Element rhs_f(Basis::Psi);
      for (std::size_t s = 1; s <= len; ++s) {
        const Composition rest = slice(I, s, len);
        const Element tail = rest.empty() ? Element::unit() : in_psi(Basis::M, rest);
        rhs_m += sign_power(static_cast<long>(s) - 1) * mul_psi(psi_part(sum_of(I, 0, s)), tail);
      }
      for (std::size_t s = 0; s < len; ++s) {
        const Composition head = slice(I, 0, s);
        const Element front = head.empty() ? Element::unit() : in_psi(Basis::F, head);
        rhs_f += mul_psi(front, psi_part(sum_of(I, s, len)));
      }
      const Rational length(static_cast<long>(len));
      if (!check.expect_equal(length * in_psi(Basis::M, I), rhs_m, "monomial " + I.str()) ||
          !check.expect_equal(length * in_psi(Basis::F, I), rhs_f, "forgotten " + I.str())) {
        break;
      }
    }
  }
  return check.finish();
}

VerificationResult verify_pieri(int n) {
  require_bound(n, "verify_pieri");
  Check check("pieri", n);
  for (int m = 2; m <= n && !check.failed(); ++m) {
    for (int r = 1; r < m && !check.failed(); ++r) {
      for (const auto& I : compositions_of(m - r)) {
        const Element left = multiply(psi_part(r), Element(Basis::M, I));
        const Element right = multiply(Element(Basis::F, I), psi_part(r));
        const std::string where = "r=" + std::to_string(r) + " I=" + I.str();
        if (!check.expect_equal(to_psi(pieri_left_psi(r, I)), left, "left " + where) ||
            !check.expect_equal(to_psi(pieri_right_f(I, r)), right, "right " + where)) {
          break;
        }
      }
    }
  }
  return check.finish();
}

VerificationResult verify_products(int n) {
  require_bound(n, "verify_products");
  Check check("products", n);
  for (int m = 2; m <= n && !check.failed(); ++m) {
    for (int a = 1; a < m && !check.failed(); ++a) {
      for (const auto& I : compositions_of(a)) {
        for (const auto& J : compositions_of(m - a)) {
          const bool ok =
              check.expect_equal(to_psi(product_mm(I, J)), multiply(Element(Basis::M, I), Element(Basis::M, J)),
                                 pair_label("M*M", I, J)) &&
              check.expect_equal(to_psi(product_ff(I, J)), multiply(Element(Basis::F, I), Element(Basis::F, J)),
                                 pair_label("F*F", I, J)) &&
              check.expect_equal(to_psi(product_ll(I, J)), multiply(Element(Basis::L, I), Element(Basis::L, J)),
                                 pair_label("L*L", I, J));
          if (!ok) {
            break;
          }
        }
        if (check.failed()) {
          break;
        }
      }
    }
  }
  return check.finish();
}

VerificationResult verify_cauchy(int n) {
  require_bound(n, "verify_cauchy");
  Check check("cauchy", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    TensorElement ms;
    TensorElement lr;
    TensorElement display;
    for (const auto& I : compositions_of(m)) {
      ms = t_add(ms, t_from_pair(in_psi(Basis::M, I), in_psi(Basis::S, I)));
      lr = t_add(lr, t_from_pair(in_psi(Basis::L, I), in_psi(Basis::R, I)));
      // Σ_{K ⪰ I ⪰ J} (-1)^{ℓ(I)-ℓ(J)} / (Π_{k<ℓ(J)} (ℓ(I)-p_k) π_u(K, I)) Ψ^J ⊗ Ψ^K
      const long len = static_cast<long>(I.length());
      const auto refined = refinements(I);
      for (const auto& J : coarsenings(I)) {
        const auto p = breakpoints(J, I);
        Rational denominator(1);
        for (std::size_t k = 0; k < J.length(); ++k) {
          denominator *= Rational(len - (k == 0 ? 0 : static_cast<long>(p[k - 1])));
        }
        const Rational base = sign_power(len - static_cast<long>(J.length())) / denominator;
        for (const auto& K : refined) {
          display.add_term({J, K}, base / pi_u_rel(K, I));
        }
      }
    }
    const std::string where = "degree " + std::to_string(m);
    check.expect(ms == lr, [&] { return where + ": sum M(x)S differs from sum L(x)R"; });
    check.expect(ms == display, [&] { return where + ": sum M(x)S differs from the double power-sum form"; });
  }
  return check.finish();
}

VerificationResult verify_hook_sum_identity(int n) {
  require_bound(n, "verify_hook_sum_identity");
  Check check("hook-sum", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    const auto all = compositions_of(m);
    std::vector<Element> ribbons;
    for (int k = 0; k < m; ++k) {
      ribbons.push_back(in_psi(Basis::R, lower_hook(k, m - k)));
    }
    std::vector<Element> lhs_values;
    std::vector<Element> rhs_values;
    for (int x = 0; x <= m; ++x) {
      const Rational X(x);
      Element lhs(Basis::Psi);
      for (const auto& I : all) {
        lhs += power(X, static_cast<long>(I.length()) - 1) * in_psi(Basis::M, I);
      }
      Element rhs(Basis::Psi);
      for (int k = 0; k < m; ++k) {
        rhs += power(X - Rational(1), k) * ribbons[static_cast<std::size_t>(k)];
      }
      check.expect_equal(lhs, rhs, "m=" + std::to_string(m) + " X=" + std::to_string(x));
      lhs_values.push_back(std::move(lhs));
      rhs_values.push_back(std::move(rhs));
    }
    // X = 0: Ψ_m = Σ_k (-1)^k R^{1^k, m-k}.
    Element alternating(Basis::Psi);
    Element plain(Basis::Psi);
    for (int k = 0; k < m; ++k) {
      alternating += sign_power(k) * ribbons[static_cast<std::size_t>(k)];
      plain += ribbons[static_cast<std::size_t>(k)];
    }
    check.expect_equal(psi_part(m), alternating, "power-sum specialization m=" + std::to_string(m));
    // X = 2: Σ_{|I|=m} L^I = Σ_k R^{1^k, m-k}.
    Element fundamentals(Basis::Psi);
    for (const auto& I : all) {
      fundamentals += in_psi(Basis::L, I);
    }
    check.expect_equal(fundamentals, plain, "fundamental specialization m=" + std::to_string(m));

    // Coefficients of X^j recovered from the samples by finite differences,
    // against the coefficients read off both sides directly.
    if (m == std::min(n, 5)) {
      std::vector<Element> differences = lhs_values;
      std::vector<Element> newton;  // Δ^i f(0)
      for (int i = 0; i <= m; ++i) {
        newton.push_back(differences[0]);
        for (std::size_t t = 0; t + 1 < differences.size(); ++t) {
          differences[t] = differences[t + 1] - differences[t];
        }
        differences.pop_back();
      }
      // falling[i][j] = [X^j] binom(X, i)
      std::vector<std::vector<Rational>> falling(static_cast<std::size_t>(m + 1));
      falling[0] = {Rational(1)};
      for (int i = 1; i <= m; ++i) {
        const auto& prev = falling[static_cast<std::size_t>(i - 1)];
        std::vector<Rational> next(prev.size() + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
          next[j + 1] += prev[j] / Rational(i);
          next[j] -= prev[j] * Rational(i - 1) / Rational(i);
        }
        falling[static_cast<std::size_t>(i)] = std::move(next);
      }
      for (int j = 0; j < m; ++j) {
        Element sampled(Basis::Psi);
        for (int i = j; i <= m; ++i) {
          sampled += falling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * newton[static_cast<std::size_t>(i)];
        }
        Element direct_lhs(Basis::Psi);
        for (const auto& I : all) {
          if (static_cast<int>(I.length()) == j + 1) {
            direct_lhs += in_psi(Basis::M, I);
          }
        }
        Element direct_rhs(Basis::Psi);
        for (int k = j; k < m; ++k) {
          direct_rhs += binomial(k, j) * sign_power(k - j) * ribbons[static_cast<std::size_t>(k)];
        }
        const std::string where = "coefficient of X^" + std::to_string(j) + " at m=" + std::to_string(m);
        check.expect_equal(sampled, direct_lhs, where + " (left side)");
        check.expect_equal(sampled, direct_rhs, where + " (right side)");
      }
    }
  }
  return check.finish();
}

VerificationResult verify_binomial_lemmas(int max_n) {
  require_bound(max_n, "verify_binomial_lemmas");
  Check check("binomial", max_n);
  const long window = 2L * max_n;
  for (int m = 1; m <= max_n && !check.failed(); ++m) {
    for (const auto& I : compositions_of(m)) {
      const auto refined = refinements(I);
      const long len_i = static_cast<long>(I.length());
      for (long x = 0; x <= window; ++x) {
        for (long y = 0; y <= window; ++y) {
          // Σ_{J ⪰ I} binom(X, Y + ℓ(J)) = binom(X + |I| - ℓ(I), Y + |I|)
          Rational lhs;
          for (const auto& J : refined) {
            lhs += binomial(x, y + static_cast<long>(J.length()));
          }
          const Rational rhs = binomial(x + m - len_i, y + m);
          check.expect_equal(lhs, rhs,
                             "first lemma I=" + I.str() + " X=" + std::to_string(x) + " Y=" + std::to_string(y));
        }
      }
      // Σ_{S ⪰ M ⪰ J} (-1)^{ℓ(S)-ℓ(M)} binom(X + ℓ(M), Y) = binom(X + ℓ(J), Y - ℓ(S) + ℓ(J)), with J = I.
      for (const auto& S : refined) {
        std::vector<Composition> between;
        for (const auto& M : refined) {
          if (is_coarsening(M, S)) {
            between.push_back(M);
          }
        }
        const long len_s = static_cast<long>(S.length());
        for (long x = 0; x <= window; ++x) {
          for (long y = 0; y <= window; ++y) {
            Rational lhs;
            for (const auto& M : between) {
              const long len_m = static_cast<long>(M.length());
              lhs += sign_power(len_s - len_m) * binomial(x + len_m, y);
            }
            const Rational rhs = binomial(x + len_i, y - len_s + len_i);
            check.expect_equal(lhs, rhs,
                               "second lemma S=" + S.str() + " J=" + I.str() + " X=" + std::to_string(x) +
                                   " Y=" + std::to_string(y));
          }
        }
      }
      if (check.failed()) {
        break;
      }
    }
  }
  return check.finish();
}

VerificationResult verify_duality_suite(int n) {
  require_bound(n, "verify_duality_suite");
  Check check("duality", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    const auto all = compositions_of(m);
    auto basis_elements = [&](Basis b, bool apply_omega) {
      std::vector<Element> out;
      for (const auto& I : all) {
        out.push_back(apply_omega ? omega(Element(b, I)) : Element(b, I));
      }
      return coordinates(out);
    };
    const Coordinates m_plain = basis_elements(Basis::M, false);
    const Coordinates s_plain = basis_elements(Basis::S, false);
    const Coordinates m_omega = basis_elements(Basis::M, true);
    const Coordinates s_omega = basis_elements(Basis::S, true);
    const Coordinates l_plain = basis_elements(Basis::L, false);
    const Coordinates r_plain = basis_elements(Basis::R, false);
    const Coordinates l_omega = basis_elements(Basis::L, true);
    const Coordinates r_omega = basis_elements(Basis::R, true);
    const Coordinates psi_plain = basis_elements(Basis::Psi, false);
    const Coordinates psi_omega = basis_elements(Basis::Psi, true);

    for (std::size_t a = 0; a < all.size() && !check.failed(); ++a) {
      const Composition& I = all[a];
      check.expect_equal(omega(Element(Basis::L, I)), in_psi(Basis::L, conjugate(I)), "omega(L) " + I.str());
      Rational lengths_factorial = factorial(static_cast<long>(I.length()));
      Rational parts(1);
      for (const int part : I.parts()) {
        parts *= Rational(part);
      }
      check.expect_equal(dot(psi_plain.in_m[a], psi_plain.in_s[a]), parts * lengths_factorial,
                         "<Psi,Psi> diagonal " + I.str());
      for (std::size_t b = 0; b < all.size(); ++b) {
        const Composition& J = all[b];
        const Rational delta = a == b ? Rational(1) : Rational(0);
        const Rational theta = is_coarsening(I, J) ? Rational(1) : Rational(0);
        const Rational psi_pair = dot(psi_plain.in_m[a], psi_plain.in_s[b]);
        const bool ok =
            check.expect_equal(dot(m_plain.in_m[a], s_plain.in_s[b]), delta, pair_label("<M,S>", I, J)) &&
            check.expect_equal(dot(m_omega.in_m[a], s_omega.in_s[b]), delta, pair_label("<wM,wS>", I, J)) &&
            check.expect_equal(dot(l_plain.in_m[a], r_plain.in_s[b]), delta, pair_label("<L,R>", I, J)) &&
            check.expect_equal(pair_l_r(I, J), delta, pair_label("<L,R> closed form", I, J)) &&
            check.expect_equal(dot(l_omega.in_m[a], r_omega.in_s[b]), delta, pair_label("<wL,wR>", I, J)) &&
            check.expect_equal(dot(l_plain.in_m[a], s_plain.in_s[b]), theta, pair_label("<L,S>", I, J)) &&
            check.expect_equal(pair_l_s(I, J), theta, pair_label("<L,S> closed form", I, J)) &&
            check.expect_equal(dot(m_plain.in_m[a], r_plain.in_s[b]), pair_m_r(I, J), pair_label("<M,R>", I, J)) &&
            check.expect_equal(dot(m_plain.in_m[a], psi_plain.in_s[b]), pair_m_psi(I, J),
                               pair_label("<M,Psi>", I, J)) &&
            check.expect_equal(psi_pair, pair_psi_psi(I, J), pair_label("<Psi,Psi>", I, J)) &&
            check.expect_equal(dot(psi_omega.in_m[a], psi_omega.in_s[b]), psi_pair,
                               pair_label("<wPsi,wPsi>", I, J)) &&
            check.expect_equal(pair_psi_psi(reverse(I), reverse(J)),
                               sign_power(static_cast<long>(I.length()) - static_cast<long>(J.length())) * psi_pair,
                               pair_label("reversal", I, J));
        if (!ok) {
          break;
        }
      }
    }
  }
  return check.finish();
}

VerificationResult verify_roundtrip(int n) {
  require_bound(n, "verify_roundtrip");
  Check check("roundtrip", n);
  // X -> Psi -> X, Psi -> Y -> Psi, and Psi -> Psi.
  for (int m = 1; m <= n && !check.failed(); ++m) {
    for (const auto& I : compositions_of(m)) {
      for (const Basis b : kAllBases) {
        const Element x(b, I);
        const Element p(Basis::Psi, I);
        const std::string name(basis_name(b));
        if (!check.expect_equal(convert(convert(x, Basis::Psi), b), x, name + "->Psi->" + name + " " + I.str()) ||
            !check.expect_equal(convert(convert(p, b), Basis::Psi), p, "Psi->" + name + "->Psi " + I.str())) {
          break;
        }
      }
      if (check.failed()) {
        break;
      }
    }
  }
  // Every ordered pair at small degree.
  for (int m = 1; m <= std::min(n, 5) && !check.failed(); ++m) {
    for (const auto& I : compositions_of(m)) {
      for (const Basis from : kAllBases) {
        for (const Basis to : kAllBases) {
          const Element x(from, I);
          check.expect_equal(convert(convert(x, to), from), x,
                             std::string(basis_name(from)) + "->" + std::string(basis_name(to)) + " " + I.str());
        }
      }
    }
  }
  return check.finish();
}

VerificationResult verify_quasidet(int n) {
  require_bound(n, "verify_quasidet");
  Check check("quasidet", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    check.expect_equal(build_lambda_def(m), in_psi(Basis::Lambda, Composition{m}), "Lambda_" + std::to_string(m));
    check.expect_equal(build_s_def(m), in_psi(Basis::S, Composition{m}), "S_" + std::to_string(m));
    for (const auto& I : compositions_of(m)) {
      if (I.length() <= 6) {
        check.expect_equal(build_m_def(I), in_psi(Basis::M, I), "M" + I.str());
        check.expect_equal(build_f_def(I), in_psi(Basis::F, I), "F" + I.str());
      }
      check.expect_equal(build_r_def(I), in_psi(Basis::R, I), "R" + I.str());
      if (check.failed()) {
        break;
      }
    }
  }
  return check.finish();
}

VerificationResult verify_kaleidoscope(int n) {
  require_bound(n, "verify_kaleidoscope");
  Check check("kaleidoscope", n);
  for (int m = 2; m <= n && !check.failed(); ++m) {
    check.expect(kaleidoscope_check(m), [&] { return "n=" + std::to_string(m); });
  }
  return check.finish();
}

VerificationResult verify_kostka(int n) {
  require_bound(n, "verify_kostka");
  Check check("kostka", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    for (const KostkaKind kind : {KostkaKind::Kostka, KostkaKind::Gessel}) {
      const KostkaReport report = positivity_report(m, kind);
      const char* label = kind == KostkaKind::Kostka ? "Kostka" : "Kostka-Gessel";
      check.expect(report.violations.empty(), [&] {
        const auto [r, c] = report.violations.front();
        return std::string(label) + " entry " + report.matrix.index(r).str() + "," + report.matrix.index(c).str() +
               " = " + report.matrix.at(r, c).str();
      });
    }
  }
  for (int total = 1; total <= n && !check.failed(); ++total) {
    for (int k = 1; k <= total; ++k) {
      const int r = total - k;
      const std::string where = "k=" + std::to_string(k) + " r=" + std::to_string(r);
      check.expect_equal(hook_row(k, r), convert(Element(Basis::R, concat(Composition{k}, ones(r))), Basis::M),
                         "hook " + where);
      check.expect_equal(lower_hook_row(r, k), convert(Element(Basis::R, lower_hook(r, k)), Basis::M),
                         "lower hook " + where);
      if (r >= 1) {
        // S_k Λ_r = R^{k 1^r} + R^{(k+1) 1^{r-1}};  Λ_r S_k = R^{1^r k} + R^{1^{r-1} (k+1)}
        const Element s_k(Basis::S, Composition{k});
        const Element lambda_r(Basis::Lambda, Composition{r});
        check.expect_equal(multiply(s_k, lambda_r),
                           in_psi(Basis::R, concat(Composition{k}, ones(r))) +
                               in_psi(Basis::R, concat(Composition{k + 1}, ones(r - 1))),
                           "S_k Lambda_r " + where);
        check.expect_equal(multiply(lambda_r, s_k),
                           in_psi(Basis::R, lower_hook(r, k)) + in_psi(Basis::R, lower_hook(r - 1, k + 1)),
                           "Lambda_r S_k " + where);
      }
    }
  }
  return check.finish();
}

VerificationResult verify_augmented(int n) {
  require_bound(n, "verify_augmented");
  Check check("augmented", n);
  for (int m = 1; m <= n && !check.failed(); ++m) {
    for (const auto& mu : partitions_of(m)) {
      check.expect(check_augmented_sum(mu), [&] { return "sum over orderings of " + mu.str(); });
      for (int j = 1; j <= static_cast<int>(mu.length()); ++j) {
        check.expect(check_fixed_part(mu, j), [&] { return "fixed part " + std::to_string(j) + " of " + mu.str(); });
      }
    }
  }
  for (int m = 1; m <= n && !check.failed(); ++m) {
    for (int r = 1; r <= m; ++r) {
      const auto kappas = r == m ? std::vector<Partition>{Partition{}} : partitions_of(m - r);
      for (const auto& kappa : kappas) {
        check.expect(check_classical_pieri(r, kappa),
                     [&] { return "classical Pieri r=" + std::to_string(r) + " kappa=" + kappa.str(); });
      }
    }
  }
  return check.finish();
}

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> registry = [] {
    std::vector<IdentityCheck> out = {
        {"augmented", 8, verify_augmented},   {"binomial", 5, verify_binomial_lemmas},
        {"cauchy", 8, verify_cauchy},         {"duality", 8, verify_duality_suite},
        {"hook-sum", 9, verify_hook_sum_identity}, {"kaleidoscope", 6, verify_kaleidoscope},
        {"kostka", 8, verify_kostka},         {"newton", 8, verify_newton},
        {"pieri", 8, verify_pieri},           {"products", 8, verify_products},
        {"quasidet", 7, verify_quasidet},     {"roundtrip", 9, verify_roundtrip},
    };
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return registry;
}

std::optional<VerificationResult> run_identity(const std::string& name, int bound) {
  for (const auto& entry : identity_registry()) {
    if (entry.name == name) {
      return entry.run(bound);
    }
  }
  return std::nullopt;
}

std::vector<VerificationResult> run_all(int bound) {
  std::vector<VerificationResult> out;
  for (const auto& entry : identity_registry()) {
    out.push_back(entry.run(bound));
  }
  return out;
}

} // namespace ncsf
