#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

/// One way of computing C_n, with the range of n it accepts.
struct Method {
  std::string_view name;
  int min_n;
  int max_n;  ///< inclusive capacity cap; 0 means unbounded
  ExactInt (*compute)(int n);

  bool accepts(int n) const { return n >= min_n && (max_n == 0 || n <= max_n); }
  std::string range() const;  ///< "n >= 3" or "2 <= n <= 5"
};

/// zagier-product, zagier-stirling, libgober, dominici, harris, schubert,
/// recursion, bombieri, oracle, in that order.
std::span<const Method> all_methods();
const Method* find_method(std::string_view name);

/// Outcome of one verification suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suites up to max_n (>= 2): cross-method agreement,
/// parity, the log upper bound, the weighted length identity, the W-sum
/// identity, and the Z(x) series check. Each suite caps n at the capacity of
/// the methods it uses.
std::vector<SuiteResult> run_verification(int max_n);

/// log C_n <= (n-1) log(2n-2) + (n-2) log(2n-3) + slack.
inline constexpr double kLogBoundSlack = 1e-9;
bool satisfies_log_bound(int n, const ExactInt& cn);

}  // namespace fano
