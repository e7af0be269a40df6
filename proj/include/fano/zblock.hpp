#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fano/exact.hpp"

namespace fano {

/// Default ceiling on n for enumerations over h-special compositions; their
/// number grows like C(2n-4, n-2) (about 2.7 million at n = 14).
inline constexpr int kDefaultCompositionGuard = 14;

/// A balanced 2-composition (I, J) of {1, ..., 2n-2} with 1 in I and 2n-2 in
/// J. Element e is stored at bit e-1 of i_mask; J is the complement.
struct Composition {
  int n = 0;
  std::uint64_t i_mask = 0;
  int h = 0;  ///< |I intersect (J - 1)|

  std::uint64_t j_mask() const;
  std::vector<int> i_elements() const;
  std::vector<int> j_elements() const;
};

/// Calls visit for every composition of {1..2n-2} with |I| = |J| = n-1,
/// 1 in I and 2n-2 in J, in increasing i_mask order.
void for_each_balanced_composition(int n, const std::function<void(const Composition&)>& visit);

/// The h-special compositions, in increasing i_mask order.
/// Throws DomainError unless 2 <= n and 1 <= h <= n-1.
std::vector<Composition> enumerate_h_special(int n, int h);

/// W_{n,h} = (1 / (n! (n-1)!)) sum over h-special (I, J) of
/// prod_{i in I} (2n-2-i) prod_{j in J} (j-1).
ExactRat w_factor(int n, int h);

/// [W_{n,1}, ..., W_{n,n-1}] from a single (parallel) pass over compositions.
std::vector<ExactRat> w_factors(int n);

/// Two-row diagram of `width` boxes per row sharing `bulk` aligned columns.
struct ZBlock {
  int width = 0;
  int bulk = 0;
};

/// counts[k-1] is the number of k-cycles.
struct CycleProfile {
  std::vector<int> counts;

  int cycles() const;         ///< |lambda|
  int columns_used() const;   ///< sum of k * lambda_k
  bool is_zero() const { return columns_used() == 0; }
  std::string str() const;    ///< "(1,1,0)"

  friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

/// Number of labelings (pairs of row permutations) of the block whose bulk
/// cycles are exactly the profile. A k-cycle takes k bulk columns and k
/// values; it can be filled in k! (k-1)! ways (top row order times cyclic
/// arrangement). Zero-profile lengths come from the complement of all
/// nonzero profiles. Throws DomainError for an infeasible profile.
ExactInt zblock_length(const ZBlock& block, const CycleProfile& profile);

/// Every profile with sum k * lambda_k <= bulk, as tuples of length bulk, in
/// colexicographic order.
std::vector<CycleProfile> candidate_profiles(const ZBlock& block);

/// The candidate profiles that admit at least one labeling.
std::vector<CycleProfile> feasible_profiles(const ZBlock& block);

/// sum over profiles of 2^|lambda| L_lambda[B(n-1, h)] via the closed form
/// n! (n-1)! / (n-h).
ExactInt weighted_length_sum(int n, int h);

/// The same sum by explicit profile enumeration.
ExactInt weighted_length_sum_enumerated(int n, int h);

/// C_n = sum_h W_{n,h} * weighted_length_sum(n, h). Throws CapacityError for
/// n > max_n_guard.
ExactInt bombieri_cn(int n, int max_n_guard = kDefaultCompositionGuard);

/// One h-term of the Bombieri expansion, with its profile lengths.
struct BombieriTerm {
  int h = 0;
  ExactRat w;
  std::vector<std::pair<CycleProfile, ExactInt>> lengths;
  ExactInt weighted_sum;
};

/// Itemised expansion, profile lengths by enumeration.
std::vector<BombieriTerm> bombieri_breakdown(int n, int max_n_guard = kDefaultCompositionGuard);

struct RationalPair {
  ExactRat lhs;
  ExactRat rhs;
};

/// lhs = sum_h W_{n,h}; rhs = ((2n-3)^2 (2n-4)! / (n! (n-1)!)) (-1)^{n-2}
/// e_{n-2}(G) with G = {1 - (2n-3)/k : 1 <= k <= 2n-4}. n >= 3.
RationalPair w_sum_identity(int n, int max_n_guard = kDefaultCompositionGuard);

}  // namespace fano
