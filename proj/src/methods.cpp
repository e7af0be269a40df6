#include "fano/methods.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>

#include "fano/bllp.hpp"
#include "fano/classical.hpp"
#include "fano/errors.hpp"
#include "fano/parallel.hpp"
#include "fano/schubert.hpp"
#include "fano/zblock.hpp"

namespace fano {

namespace {

ExactInt bombieri_default(int n) { return bombieri_cn(n); }

constexpr std::array kMethods{
    Method{"zagier-product", 2, 0, &zagier_product_cn},
    Method{"zagier-stirling", 2, 0, &zagier_stirling_cn},
    Method{"libgober", 3, 0, &libgober_cn},
    Method{"dominici", 3, 0, &dominici_cn},
    Method{"harris", 3, 0, &harris_cn},
    Method{"schubert", 2, 0, &schubert_cn},
    Method{"recursion", 2, 0, &cn_via_recursion},
    Method{"bombieri", 2, kDefaultCompositionGuard, &bombieri_default},
    Method{"oracle", 2, kMaxOracleN, &bllp_cn},
};

constexpr int kLengthIdentityCap = 12;

}  // namespace

std::string Method::range() const {
  if (max_n == 0) return "n >= " + std::to_string(min_n);
  return std::to_string(min_n) + " <= n <= " + std::to_string(max_n);
}

std::span<const Method> all_methods() { return kMethods; }

const Method* find_method(std::string_view name) {
  auto it = std::find_if(kMethods.begin(), kMethods.end(), [&](const Method& m) { return m.name == name; });
  return it == kMethods.end() ? nullptr : &*it;
}

bool satisfies_log_bound(int n, const ExactInt& cn) {
  double bound = (n - 1) * std::log(2.0 * n - 2) + (n - 2) * std::log(2.0 * n - 3);
  return cn.log() <= bound + kLogBoundSlack;
}

namespace {

/// Runs check(n) for each n in [lo, hi] in parallel; returns the first
/// failure message in n order, or nothing.
template <class Check>
std::optional<std::string> first_failure(int lo, int hi, Check check) {
  if (hi < lo) return std::nullopt;
  std::vector<std::optional<std::string>> failures(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(failures.size(), [&](std::size_t i) {
    const int n = lo + static_cast<int>(i);
    try {
      failures[i] = check(n);
    } catch (const std::exception& e) {
      failures[i] = "n=" + std::to_string(n) + ": " + e.what();
    }
  });
  for (auto& f : failures) {
    if (f) return f;
  }
  return std::nullopt;
}

SuiteResult make_result(std::string name, std::optional<std::string> failure, std::string scope) {
  if (failure) return {std::move(name), false, std::move(*failure)};
  return {std::move(name), true, std::move(scope)};
}

std::string span_text(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

std::vector<SuiteResult> run_verification(int max_n) {
  if (max_n < 2) throw DomainError("verify requires max >= 2");
  std::vector<SuiteResult> results;

  results.push_back(make_result(
      "cross-method agreement",
      first_failure(2, max_n,
                    [](int n) -> std::optional<std::string> {
                      const ExactInt reference = schubert_cn(n);
                      for (const auto& m : all_methods()) {
                        if (!m.accepts(n)) continue;
                        ExactInt v = m.compute(n);
                        if (v != reference) {
                          return "n=" + std::to_string(n) + ": " + std::string(m.name) + " gives " + v.str() +
                                 ", schubert gives " + reference.str();
                        }
                      }
                      return std::nullopt;
                    }),
      span_text(2, max_n)));

  results.push_back(make_result("parity",
                                first_failure(2, max_n,
                                              [](int n) -> std::optional<std::string> {
                                                if (schubert_cn(n).is_odd()) return std::nullopt;
                                                return "C_" + std::to_string(n) + " is even";
                                              }),
                                span_text(2, max_n)));

  results.push_back(make_result("log upper bound",
                                first_failure(2, max_n,
                                              [](int n) -> std::optional<std::string> {
                                                if (satisfies_log_bound(n, schubert_cn(n))) return std::nullopt;
                                                return "log C_" + std::to_string(n) + " exceeds the bound";
                                              }),
                                span_text(2, max_n)));

  const int length_hi = std::min(max_n, kLengthIdentityCap);
  results.push_back(make_result(
      "weighted length identity",
      first_failure(2, length_hi,
                    [](int n) -> std::optional<std::string> {
                      for (int h = 1; h <= n - 1; ++h) {
                        if (weighted_length_sum_enumerated(n, h) != weighted_length_sum(n, h)) {
                          return "n=" + std::to_string(n) + ", h=" + std::to_string(h);
                        }
                      }
                      return std::nullopt;
                    }),
      span_text(2, length_hi)));

  const int w_hi = std::min(max_n, kDefaultCompositionGuard);
  results.push_back(make_result("W-sum identity",
                                first_failure(3, w_hi,
                                              [](int n) -> std::optional<std::string> {
                                                auto [lhs, rhs] = w_sum_identity(n);
                                                if (lhs == rhs) return std::nullopt;
                                                return "n=" + std::to_string(n) + ": " + lhs.str() + " vs " + rhs.str();
                                              }),
                                w_hi >= 3 ? span_text(3, w_hi) : std::string("no n in range")));

  const auto terms = static_cast<std::size_t>(max_n - 1);
  std::optional<std::string> z_failure;
  try {
    z_series_check(terms);
  } catch (const std::exception& e) {
    z_failure = e.what();
  }
  results.push_back(make_result("z series", std::move(z_failure), std::to_string(terms) + " terms"));
  return results;
}

}  // namespace fano
