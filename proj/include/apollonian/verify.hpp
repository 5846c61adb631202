#ifndef APOLLONIAN_VERIFY_HPP
#define APOLLONIAN_VERIFY_HPP

#include <string>
#include <vector>

namespace apollonian {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // range covered, or the first failure
};

/// Default upper step for the cross-method checks.
inline constexpr int kDefaultVerifyBound = 12;

/// Largest accepted verification bound (the census values above this get
/// into hundred-megabit territory).
inline constexpr int kMaxVerifyBound = 16;

/// Runs the whole cross-method invariant suite: structural graph checks,
/// recursion-vs-closed-form equality, algebraic identities, determinant
/// and enumeration oracles, and the entropy convergence checks. Graph and
/// determinant ranges are capped by their size guards regardless of
/// n_max. Deterministic order and output.
std::vector<CheckResult> run_verification(int n_max = kDefaultVerifyBound);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace apollonian

#endif  // APOLLONIAN_VERIFY_HPP
