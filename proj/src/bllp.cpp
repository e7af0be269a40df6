#include "fano/bllp.hpp"

#include <optional>
#include <string>

#include "fano/errors.hpp"
#include "fano/kernel.hpp"

namespace fano {

void MonomialMap::add(const Exponents& monomial, const ExactInt& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ExactInt MonomialMap::eta_squared_weight(const Exponents& monomial) const {
  const int cols = 2 * n_ - 3;
  ExactInt weight(1);
  for (std::size_t v = 0; v < monomial.size(); ++v) {
    if (monomial[v] == 0) continue;
    const int j = static_cast<int>(v % static_cast<std::size_t>(cols)) + 1;
    weight *= binomial(static_cast<unsigned>(2 * n_ - 4), j - 1).pow(monomial[v]);
  }
  return weight;
}

namespace {

void require_oracle_n(int n) {
  if (n < 2) throw DomainError("determinant oracle requires n >= 2, got " + std::to_string(n));
  if (n > kMaxOracleN) {
    throw CapacityError("determinant oracle is limited to n <= " + std::to_string(kMaxOracleN) +
                        " (Leibniz expansion over (2n-2)! permutations)");
  }
}

struct Variable {
  int a;
  int j;
};

/// Entry (i, k) of A_n(x), 1-based, as the variable it carries (eta aside).
/// Odd column k = 2a-1 holds x_{a,i} in rows i < 2n-2; even column k = 2a
/// holds x_{a,i-1} in rows i > 1.
std::optional<Variable> entry(int n, int i, int k) {
  const int last = 2 * n - 2;
  if (k % 2 == 1) {
    if (i == last) return std::nullopt;
    return Variable{(k + 1) / 2, i};
  }
  if (i == 1) return std::nullopt;
  return Variable{k / 2, i - 1};
}

}  // namespace

void for_each_determinant_term(int n, const std::function<void(const DeterminantTerm&)>& visit) {
  require_oracle_n(n);
  const int size = 2 * n - 2;
  DeterminantTerm term;
  term.columns.assign(static_cast<std::size_t>(size), -1);
  std::vector<bool> used(static_cast<std::size_t>(size), false);

  std::function<void(int, int)> search = [&](int row, int inversions) {
    if (row == size) {
      term.sign = inversions % 2 == 0 ? 1 : -1;
      visit(term);
      return;
    }
    for (int col = 0; col < size; ++col) {
      if (used[static_cast<std::size_t>(col)] || !entry(n, row + 1, col + 1)) continue;
      int later_used = 0;  // earlier rows sent to larger columns
      for (int c = col + 1; c < size; ++c) later_used += used[static_cast<std::size_t>(c)] ? 1 : 0;
      used[static_cast<std::size_t>(col)] = true;
      term.columns[static_cast<std::size_t>(row)] = col;
      search(row + 1, inversions + later_used);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  search(0, 0);
}

MonomialMap expand_det(int n) {
  require_oracle_n(n);
  MonomialMap p(n);
  std::map<MonomialMap::Exponents, long> acc;
  MonomialMap::Exponents exps(static_cast<std::size_t>(p.variable_count()));
  for_each_determinant_term(n, [&](const DeterminantTerm& t) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t r = 0; r < t.columns.size(); ++r) {
      auto var = entry(n, static_cast<int>(r) + 1, t.columns[r] + 1);
      ++exps[static_cast<std::size_t>(p.variable_index(var->a, var->j))];
    }
    acc[exps] += t.sign;
  });
  for (const auto& [mono, coeff] : acc) p.add(mono, ExactInt(coeff));
  return p;
}

ExactRat bombieri_norm_sq(const MonomialMap& p) {
  const int degree = 2 * p.n() - 2;
  ExactInt total(0);
  for (const auto& [mono, coeff] : p.entries()) {
    ExactInt term = coeff * coeff * p.eta_squared_weight(mono);
    for (auto e : mono) term *= factorial(e);
    total += term;
  }
  return ExactRat(total) / ExactRat(factorial(static_cast<unsigned>(degree)));
}

ExactInt bllp_cn(int n) {
  require_oracle_n(n);
  const int d = 2 * n - 3;
  ExactInt binomial_product(1);
  for (int k = 0; k <= d; ++k) binomial_product *= binomial(static_cast<unsigned>(d), k);
  ExactRat prefactor = ExactRat(ExactInt(d).pow(static_cast<unsigned long>(2 * n - 2))) /
                       ExactRat(factorial(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n)) *
                                binomial_product);
  ExactRat expectation = ExactRat(factorial(static_cast<unsigned>(2 * n - 2))) * bombieri_norm_sq(expand_det(n));
  ExactRat value = prefactor * expectation;
  if (!value.is_integer()) throw InternalError("BLLP pipeline produced non-integral " + value.str());
  return value.num();
}

}  // namespace fano
