#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

// Exact small-n evaluation of the random-matrix route to C_n: expand the
// polynomial determinant P_n = det A_n(x) symbolically, take its squared
// Bombieri norm, and scale. Independent of every combinatorial shortcut.

inline constexpr int kMaxOracleN = 5;

/// Polynomial in the variables x_{a,j}, 1 <= a <= n-1, 1 <= j <= 2n-3, with
/// integer coefficients. The eta factors sqrt(C(2n-4, j-1)) carried by each
/// x_{a,j} are left out: a monomial's eta product depends only on its second
/// indices, so it is reapplied when the norm is taken.
class MonomialMap {
 public:
  using Exponents = std::vector<std::uint8_t>;

  explicit MonomialMap(int n) : n_(n) {}

  int n() const { return n_; }
  int variable_count() const { return (n_ - 1) * (2 * n_ - 3); }
  /// Position of x_{a,j} in an exponent vector.
  int variable_index(int a, int j) const { return (a - 1) * (2 * n_ - 3) + (j - 1); }

  /// Adds to a coefficient, erasing it when it cancels to zero.
  void add(const Exponents& monomial, const ExactInt& coefficient);

  std::size_t size() const { return entries_.size(); }
  const std::map<Exponents, ExactInt>& entries() const { return entries_; }

  /// Product over variables of C(2n-4, j-1)^{exponent}: the squared eta
  /// weight of a monomial.
  ExactInt eta_squared_weight(const Exponents& monomial) const;

 private:
  int n_;
  std::map<Exponents, ExactInt> entries_;
};

/// A nonvanishing term of the Leibniz expansion: row r (0-based) uses
/// column columns[r].
struct DeterminantTerm {
  std::vector<int> columns;
  int sign = 1;
};

/// Visits every permutation whose product of entries of A_n(x) is nonzero.
/// Zero entries are pruned during the search. 2 <= n <= kMaxOracleN.
void for_each_determinant_term(int n, const std::function<void(const DeterminantTerm&)>& visit);

/// P_n with eta factors stripped. Throws CapacityError for n > kMaxOracleN.
MonomialMap expand_det(int n);

/// sum over monomials of |P_alpha|^2 alpha! / D!, D = 2n-2, with the eta
/// weights restored.
ExactRat bombieri_norm_sq(const MonomialMap& p);

/// (2n-3)^{2n-2} / ((n-1)! n!) * prod_k C(2n-3,k)^{-1} * (2n-2)! * ||P_n||_B^2.
ExactInt bllp_cn(int n);

}  // namespace fano
