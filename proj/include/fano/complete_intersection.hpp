#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

/// Degrees of a complete intersection in CP^N, sorted ascending, with the
/// quantities the line count needs.
struct DegreeTuple {
  std::vector<int> degrees;
  int even_count = 0;     ///< number of even degrees; always even
  int ambient_dim = 0;    ///< N = 1 + sum(d_i + 1) / 2

  /// floor((d - 1) / 2) for each degree.
  std::vector<int> half_degrees() const;
  /// True when four or more degrees are even, where the Catalan index uses
  /// the evenCount / 2 reading with no published value to compare against.
  bool needs_provenance_note() const { return even_count >= 4; }
  std::string str() const;  ///< "2,4"
};

/// Validates degrees (all >= 1, nonempty, sum(d_i + 1) even) and sorts them.
/// Throws DomainError naming the violation.
DegreeTuple ci_dimension_check(std::vector<int> degrees);

/// Number of lines on a generic complete intersection of the given degrees:
/// prod_i d_i^{2D_i+2} {d_i/2} times the nested sum over 0 <= m_i <= t_i <= D_i
/// of prod_i d_i^{-2t_i} e_{t_i}(Xi(d_i)) C(t_i, m_i) (-4)^{t_i-m_i} and the
/// Catalan number K_{sum m_i + evenCount/2}. Xi(d) = {(d-j) j : 1 <= j <= D}.
ExactInt ci_lines(const DegreeTuple& t);

/// The same sum with the factors taken in the given order (no sorting).
/// Degrees must already satisfy the dimension constraint.
ExactInt ci_lines_in_order(std::span<const int> degrees);

/// Every sorted, valid tuple of `codim` degrees in [1, max_degree], in
/// lexicographic order, with its line count.
std::vector<std::pair<DegreeTuple, ExactInt>> ci_table(int codim, int max_degree);

}  // namespace fano
