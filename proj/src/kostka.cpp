#include "ncsf/kostka.hpp"

#include "ncsf/error.hpp"

namespace ncsf {

namespace {

KostkaReport build_report(KostkaKind kind, int n) {
  if (n < 1) {
    throw DomainError("Kostka matrices need n >= 1");
  }
  KostkaReport report{kind, n, transition_matrix(Basis::R, kind == KostkaKind::Kostka ? Basis::M : Basis::L, n), true,
                      true, Rational(), Rational(), {}, {}};
  report.support.resize(report.matrix.size());
  bool first = true;
  for (std::size_t r = 0; r < report.matrix.size(); ++r) {
    for (const auto& [c, v] : report.matrix.row_entries(r)) {
      report.support[r].push_back(c);
      if (first || v < report.min_entry) {
        report.min_entry = v;
      }
      if (first || v > report.max_entry) {
        report.max_entry = v;
      }
      first = false;
      const bool integer = v.is_integer();
      const bool nonnegative = v.sign() >= 0;
      report.all_integer = report.all_integer && integer;
      report.all_nonnegative = report.all_nonnegative && nonnegative;
      if (!integer || !nonnegative) {
        report.violations.emplace_back(r, c);
      }
    }
  }
  return report;
}

std::vector<Composition> compositions_or_empty(int n) {
  return n == 0 ? std::vector<Composition>{Composition{}} : compositions_of(n);
}

} // namespace

KostkaReport kostka_matrix(int n) { return build_report(KostkaKind::Kostka, n); }
KostkaReport kostka_gessel_matrix(int n) { return build_report(KostkaKind::Gessel, n); }
KostkaReport positivity_report(int n, KostkaKind which) { return build_report(which, n); }

Element hook_row(int k, int r) {
  if (k < 1 || r < 0) {
    throw DomainError("hook_row needs k >= 1 and r >= 0");
  }
  const Composition ones(std::vector<int>(static_cast<std::size_t>(r), 1));
  const Rational c = binomial(k + r - 1, r);
  Element out(Basis::M);
  for (const auto& I : compositions_of(k)) {
    out.add_term(concat(I, ones), c);
  }
  return out;
}

Element lower_hook_row(int r, int k) {
  if (k < 1 || r < 0) {
    throw DomainError("lower_hook_row needs k >= 1 and r >= 0");
  }
  Element out(Basis::M);
  for (const auto& J : compositions_or_empty(r)) {
    for (const auto& I : compositions_of(k)) {
      const long length = static_cast<long>(I.length() + J.length());
      out.add_term(concat(J, I), binomial(length - 1, r));
      // With J empty there is no last part to merge into.
      if (!J.empty()) {
        out.add_term(near_concat(J, I), binomial(length - 2, r));
      }
    }
  }
  return out;
}

} // namespace ncsf
