#pragma once

#include "fano/exact.hpp"

namespace fano {

// Published closed forms for C_n, the number of lines on a generic
// hypersurface of degree 2n-3 in CP^n. Each is an independent code path that
// shares only the exact kernel, so they can cross-check one another.
// Every function throws DomainError below its lower bound.

/// Coefficient of x^(n-1) in (1 - x) * prod_{k=0}^{2n-3} (2n-3-k + k x). n >= 2.
ExactInt zagier_product_cn(int n);

/// Alternating sum over unsigned Stirling numbers [2n-3, m]. n >= 2.
ExactInt zagier_stirling_cn(int n);

/// (2n-3)(2n-3)! [e_{n-2}(L) - e_{n-3}(L)], L = {(2n-3-j)/j : 1 <= j <= 2n-4}. n >= 3.
ExactInt libgober_cn(int n);

/// (2n-3)^2 (2n-4)! [e_{n-2}(Y) - e_{n-1}(Y)], Y = {j/(2n-3-j) : 1 <= j <= 2n-4}. n >= 3.
ExactInt dominici_cn(int n);

/// (2n-3)(2n-3)! sum_k K_k e_{n-2-k}(H) with H = {(2n-3-2i)^2 / (i(2n-3-i))}.
/// The subset sums over I of size n-2-k are the elementary symmetric
/// polynomials of H; k runs over 0..n-2. n >= 3.
ExactInt harris_cn(int n);

}  // namespace fano
