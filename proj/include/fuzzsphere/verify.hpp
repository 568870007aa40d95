#pragma once

#include <string>
#include <vector>

namespace fuzzsphere {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  bool pass() const { return residual < tolerance; }
};

/// "default", "fock", "appendix-b" or "all".
const std::vector<std::string>& suite_names();

/// Runs one invariant suite. max_two_j bounds the spins swept by the default
/// suite. Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, int max_two_j = 4);

/// name=... residual=... tolerance=... status=pass|fail
std::string format_check(const CheckResult& c);

}  // namespace fuzzsphere
