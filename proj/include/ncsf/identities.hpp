#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ncsf {

struct VerificationResult {
  std::string name;
  int bound = 0;
  bool pass = true;
  /// First failing instance, indices and both sides; empty on pass.
  std::string counterexample;
  double seconds = 0.0;
};

VerificationResult verify_newton(int n);
VerificationResult verify_pieri(int n);
VerificationResult verify_products(int n);
VerificationResult verify_cauchy(int n);
VerificationResult verify_hook_sum_identity(int n);
VerificationResult verify_binomial_lemmas(int max_n);
VerificationResult verify_duality_suite(int n);
VerificationResult verify_roundtrip(int n);
VerificationResult verify_quasidet(int n);
VerificationResult verify_kaleidoscope(int n);
VerificationResult verify_kostka(int n);
VerificationResult verify_augmented(int n);

struct IdentityCheck {
  std::string name;
  int default_bound;
  std::function<VerificationResult(int)> run;
};

/// Every check, sorted by name.
const std::vector<IdentityCheck>& identity_registry();
std::optional<VerificationResult> run_identity(const std::string& name, int bound);
std::vector<VerificationResult> run_all(int bound);

} // namespace ncsf
