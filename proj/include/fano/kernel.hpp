#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

// Shared combinatorial primitives. All functions are pure and safe to call
// from concurrent threads; the Stirling table is a guarded, grow-on-demand
// memo.

ExactInt factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
ExactInt binomial(unsigned n, int k);

/// Unsigned Stirling number of the first kind: permutations of n elements
/// with exactly m cycles. Built row by row from
/// [n+1, m] = n [n, m] + [n, m-1].
ExactInt stirling1_unsigned(unsigned n, unsigned m);

/// Catalan number C(2m, m) / (m + 1).
ExactInt catalan(unsigned m);

/// Elementary symmetric polynomials [e_0, ..., e_len] of the inputs.
/// e_0 = 1 for every input, including the empty one.
std::vector<ExactRat> elem_sym_all(std::span<const ExactRat> values);

/// A linear factor a + b x.
struct LinearFactor {
  ExactRat constant;
  ExactRat slope;
};

/// Coefficient of x^power in the product of the given linear factors.
/// Requires power <= factors.size().
ExactRat coeff_of_product(std::span<const LinearFactor> factors, unsigned power);

/// Full coefficient list of the product, lowest degree first.
std::vector<ExactRat> expand_product(std::span<const LinearFactor> factors);

}  // namespace fano
