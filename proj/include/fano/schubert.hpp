#pragma once

#include <cstddef>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

/// Exact lower-triangular matrix. Row r stores exactly r + 1 entries; entries
/// above the diagonal are implicitly zero.
class TriMatrix {
 public:
  TriMatrix() = default;
  /// Throws DomainError if a row has the wrong length.
  explicit TriMatrix(std::vector<std::vector<ExactRat>> rows);
  static TriMatrix identity(std::size_t size);

  std::size_t size() const { return rows_.size(); }
  const std::vector<ExactRat>& row(std::size_t r) const { return rows_[r]; }
  /// Zero above the diagonal.
  ExactRat at(std::size_t r, std::size_t c) const;

  /// Inverse by forward substitution, one column of the identity at a time.
  /// Throws DomainError on a zero diagonal entry.
  TriMatrix inverse() const;

  /// Leading size x size block.
  TriMatrix block(std::size_t size) const;

  friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
  friend bool operator==(const TriMatrix& a, const TriMatrix& b) = default;

 private:
  std::vector<std::vector<ExactRat>> rows_;
};

/// Gamma_{n-2} = {(2n-3-j) j / (2n-3)^2 : 1 <= j <= n-2}; empty for n = 2.
std::vector<ExactRat> gamma_set(int n);

/// C_n = (2n-3)^{2n-2} sum_m e_m(Gamma_{n-2}) (-1)^m (2m+1) K_m. n >= 2.
ExactInt schubert_cn(int n);

/// u_t = (-1)^t (2t+1) K_t, the x^t coefficient of (1 - (1+4x)^{-1/2}) / (2x).
ExactInt u_coefficient(unsigned t);

/// sum_m C(t,m) (-4)^{t-m} K_m, the binomial-transform route to u_t.
ExactInt catalan_binomial_transform(unsigned t);

/// alpha_{n,k} = (2n-3)^{2n-2} e_k(Gamma_{n-2}) for 2 <= n, 0 <= k <= n-2.
ExactRat alpha_entry(int n, int k);

/// Leading size x size block of A = [alpha_{i+2, j}].
TriMatrix alpha_block(std::size_t size);

/// Coefficients of C_n = sum_{k=2}^{n-1} B_{n,k} C_k + F_n.
struct RecursionRow {
  int n = 0;
  std::vector<ExactRat> b;  ///< b[k - 2] holds B_{n,k}
  ExactRat f;

  const ExactRat& coeff(int k) const { return b.at(static_cast<std::size_t>(k - 2)); }
};

/// Rows are memoized and built in increasing n. n >= 3.
RecursionRow recursion_coeffs(int n);

/// Evaluates the recursion upward from C_2 = 1. Throws InternalError if the
/// reduced result is not an integer.
ExactInt cn_via_recursion(int n);

/// Leading size x size block of A^{-1} = [theta_{n,k}]. size >= 1.
TriMatrix theta_matrix(std::size_t size);

/// [sum_k theta_{t,k} C_{k+2}] for t < terms. Throws InternalError if any
/// entry differs from u_coefficient(t).
std::vector<ExactInt> z_series_check(std::size_t terms);

/// Paths from sigma_{n-1-m, n-1-m} to sigma_{n-1, n-1} in the Pieri lattice
/// of the Grassmannian of lines in CP^n, where each sigma_1 step raises a or
/// b by one keeping n-1 >= a >= b. Requires 2 <= n, 0 <= m <= n-1.
ExactInt catalan_path_count(int n, int m);

}  // namespace fano
