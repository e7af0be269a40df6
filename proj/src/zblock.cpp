#include "fano/zblock.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "fano/errors.hpp"
#include "fano/kernel.hpp"
#include "fano/parallel.hpp"

namespace fano {

namespace {

constexpr int kMaxMaskN = 32;  // 2n-2 elements must fit in 64 bits with room

void require_composition_n(int n) {
  if (n < 2) throw DomainError("compositions require n >= 2, got " + std::to_string(n));
  if (n > kMaxMaskN) throw CapacityError("compositions limited to n <= " + std::to_string(kMaxMaskN));
}

void require_h(int n, int h) {
  if (h < 1 || h > n - 1) {
    throw DomainError("h must lie in [1, " + std::to_string(n - 1) + "], got " + std::to_string(h));
  }
}

std::uint64_t full_mask(int n) { return (std::uint64_t{1} << (2 * n - 2)) - 1; }

Composition make_composition(int n, std::uint64_t inner) {
  Composition c{n, std::uint64_t{1} | (inner << 1), 0};
  c.h = std::popcount(c.i_mask & (c.j_mask() >> 1));
  return c;
}

/// Visits every r-subset of `bits` positions, as masks in increasing order.
template <class Visit>
void for_each_subset(int bits, int r, Visit&& visit) {
  if (r == 0) {
    visit(std::uint64_t{0});
    return;
  }
  if (r > bits) return;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t c = (std::uint64_t{1} << r) - 1;
  while (c < limit) {
    visit(c);
    std::uint64_t u = c & (~c + 1);
    std::uint64_t v = c + u;
    c = v + (((v ^ c) / u) >> 2);
  }
}

/// prod_{i in I} (2n-2-i) prod_{j in J} (j-1).
void composition_weight(const Composition& c, mpz_class& out) {
  out = 1;
  const int top = 2 * c.n - 2;
  for (int e = 1; e <= top; ++e) {
    if (c.i_mask >> (e - 1) & 1U) {
      mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(top - e));
    } else {
      mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(e - 1));
    }
  }
}

/// Per-h sums of composition weights, index h-1. The inner subsets are
/// partitioned by their lowest chosen position so workers share nothing.
std::vector<mpz_class> weight_sums(int n) {
  require_composition_n(n);
  const int bits = 2 * n - 4;
  const int r = n - 2;
  const std::size_t slots = static_cast<std::size_t>(n - 1);
  if (r == 0) {
    std::vector<mpz_class> sums(slots);
    mpz_class w;
    auto c = make_composition(n, 0);
    composition_weight(c, w);
    sums[static_cast<std::size_t>(c.h - 1)] += w;
    return sums;
  }
  const std::size_t items = static_cast<std::size_t>(bits - r + 1);
  std::vector<std::vector<mpz_class>> partial(items, std::vector<mpz_class>(slots));
  parallel_for(items, [&](std::size_t p) {
    auto& local = partial[p];
    mpz_class w;
    const int rest_bits = bits - static_cast<int>(p) - 1;
    for_each_subset(rest_bits, r - 1, [&](std::uint64_t sub) {
      std::uint64_t inner = (std::uint64_t{1} << p) | (sub << (p + 1));
      auto c = make_composition(n, inner);
      composition_weight(c, w);
      local[static_cast<std::size_t>(c.h - 1)] += w;
    });
  });
  std::vector<mpz_class> sums(slots);
  for (const auto& local : partial) {
    for (std::size_t h = 0; h < slots; ++h) sums[h] += local[h];
  }
  return sums;
}

ExactInt factorial_product(int n) {
  return factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 1));
}

}  // namespace

std::uint64_t Composition::j_mask() const { return full_mask(n) & ~i_mask; }

std::vector<int> Composition::i_elements() const {
  std::vector<int> out;
  for (int e = 1; e <= 2 * n - 2; ++e) {
    if (i_mask >> (e - 1) & 1U) out.push_back(e);
  }
  return out;
}

std::vector<int> Composition::j_elements() const {
  std::vector<int> out;
  for (int e = 1; e <= 2 * n - 2; ++e) {
    if (!(i_mask >> (e - 1) & 1U)) out.push_back(e);
  }
  return out;
}

void for_each_balanced_composition(int n, const std::function<void(const Composition&)>& visit) {
  require_composition_n(n);
  for_each_subset(2 * n - 4, n - 2, [&](std::uint64_t inner) { visit(make_composition(n, inner)); });
}

std::vector<Composition> enumerate_h_special(int n, int h) {
  require_composition_n(n);
  require_h(n, h);
  std::vector<Composition> out;
  for_each_balanced_composition(n, [&](const Composition& c) {
    if (c.h == h) out.push_back(c);
  });
  return out;
}

std::vector<ExactRat> w_factors(int n) {
  auto sums = weight_sums(n);
  ExactRat scale = ExactRat(factorial_product(n)).reciprocal();
  std::vector<ExactRat> out;
  out.reserve(sums.size());
  for (auto& s : sums) out.push_back(ExactRat(ExactInt(std::move(s))) * scale);
  return out;
}

ExactRat w_factor(int n, int h) {
  require_composition_n(n);
  require_h(n, h);
  mpz_class sum, w;
  for_each_subset(2 * n - 4, n - 2, [&](std::uint64_t inner) {
    auto c = make_composition(n, inner);
    if (c.h != h) return;
    composition_weight(c, w);
    sum += w;
  });
  return ExactRat(ExactInt(std::move(sum))) / ExactRat(factorial_product(n));
}

int CycleProfile::cycles() const {
  int total = 0;
  for (int c : counts) total += c;
  return total;
}

int CycleProfile::columns_used() const {
  int total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) total += static_cast<int>(k + 1) * counts[k];
  return total;
}

std::string CycleProfile::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(counts[k]);
  }
  return s + ")";
}

namespace {

void require_block(const ZBlock& b) {
  if (b.width < 0 || b.bulk < 0 || b.bulk > b.width) {
    throw DomainError("z-block needs 0 <= bulk <= width, got width " + std::to_string(b.width) + " bulk " +
                      std::to_string(b.bulk));
  }
}

void profiles_rec(int k, int remaining, std::vector<int>& counts, std::vector<CycleProfile>& out) {
  if (k == 0) {
    out.push_back(CycleProfile{counts});
    return;
  }
  // Outermost loop runs over the largest cycle size: colexicographic order.
  for (int c = 0; c * k <= remaining; ++c) {
    counts[static_cast<std::size_t>(k - 1)] = c;
    profiles_rec(k - 1, remaining - c * k, counts, out);
  }
  counts[static_cast<std::size_t>(k - 1)] = 0;
}

/// Ways to place the profile's cycles on chosen bulk columns and values.
ExactInt cycle_placements(const ZBlock& block, const CycleProfile& profile) {
  ExactInt ways(1);
  int cols = block.bulk;
  int vals = block.width;
  for (std::size_t idx = 0; idx < profile.counts.size(); ++idx) {
    const int k = static_cast<int>(idx + 1);
    const int count = profile.counts[idx];
    for (int c = 0; c < count; ++c) {
      ways *= binomial(static_cast<unsigned>(cols), k) * binomial(static_cast<unsigned>(vals), k) *
              factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k - 1));
      cols -= k;
      vals -= k;
    }
    // Cycles of equal size are unordered.
    ways = ways.divexact(factorial(static_cast<unsigned>(count)));
  }
  return ways;
}

class ZeroLengthMemo {
 public:
  ExactInt get(int width, int bulk) {
    const std::pair key{width, bulk};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    ExactInt value = compute(width, bulk);
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  static ExactInt compute(int width, int bulk) {
    ExactInt value = factorial(static_cast<unsigned>(width)).pow(2);
    for (const auto& p : candidate_profiles(ZBlock{width, bulk})) {
      if (!p.is_zero()) value -= zblock_length(ZBlock{width, bulk}, p);
    }
    return value;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, ExactInt> table_;
};

ExactInt zero_length(int width, int bulk) {
  static ZeroLengthMemo memo;
  return memo.get(width, bulk);
}

}  // namespace

ExactInt zblock_length(const ZBlock& block, const CycleProfile& profile) {
  require_block(block);
  for (int c : profile.counts) {
    if (c < 0) throw DomainError("negative cycle count in profile " + profile.str());
  }
  const int used = profile.columns_used();
  if (used > block.bulk) {
    throw DomainError("profile " + profile.str() + " needs " + std::to_string(used) + " bulk columns, block has " +
                      std::to_string(block.bulk));
  }
  if (used == 0) return zero_length(block.width, block.bulk);
  return cycle_placements(block, profile) * zero_length(block.width - used, block.bulk - used);
}

std::vector<CycleProfile> candidate_profiles(const ZBlock& block) {
  require_block(block);
  std::vector<CycleProfile> out;
  std::vector<int> counts(static_cast<std::size_t>(block.bulk), 0);
  profiles_rec(block.bulk, block.bulk, counts, out);
  return out;
}

std::vector<CycleProfile> feasible_profiles(const ZBlock& block) {
  std::vector<CycleProfile> out;
  for (auto& p : candidate_profiles(block)) {
    if (zblock_length(block, p).sign() > 0) out.push_back(std::move(p));
  }
  return out;
}

ExactInt weighted_length_sum(int n, int h) {
  if (n < 2) throw DomainError("weighted length sum requires n >= 2");
  require_h(n, h);
  return factorial_product(n).divexact(ExactInt(n - h));
}

ExactInt weighted_length_sum_enumerated(int n, int h) {
  if (n < 2) throw DomainError("weighted length sum requires n >= 2");
  require_h(n, h);
  const ZBlock block{n - 1, h};
  ExactInt sum(0);
  for (const auto& p : feasible_profiles(block)) {
    sum += ExactInt(2).pow(static_cast<unsigned long>(p.cycles())) * zblock_length(block, p);
  }
  return sum;
}

namespace {

void require_guard(int n, int guard) {
  if (n > guard) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the composition guard " + std::to_string(guard) +
                        "; the number of compositions grows like C(2n-4, n-2) = " +
                        binomial(static_cast<unsigned>(2 * n - 4), n - 2).str());
  }
}

}  // namespace

ExactInt bombieri_cn(int n, int max_n_guard) {
  if (n < 2) throw DomainError("bombieri requires n >= 2, got " + std::to_string(n));
  require_guard(n, max_n_guard);
  auto w = w_factors(n);
  ExactRat total(0);
  for (int h = 1; h <= n - 1; ++h) total += w[static_cast<std::size_t>(h - 1)] * ExactRat(weighted_length_sum(n, h));
  if (!total.is_integer()) throw InternalError("bombieri expansion produced non-integral " + total.str());
  return total.num();
}

std::vector<BombieriTerm> bombieri_breakdown(int n, int max_n_guard) {
  if (n < 2) throw DomainError("bombieri requires n >= 2, got " + std::to_string(n));
  require_guard(n, max_n_guard);
  auto w = w_factors(n);
  std::vector<BombieriTerm> terms;
  for (int h = 1; h <= n - 1; ++h) {
    BombieriTerm term;
    term.h = h;
    term.w = w[static_cast<std::size_t>(h - 1)];
    const ZBlock block{n - 1, h};
    for (auto& p : feasible_profiles(block)) {
      ExactInt len = zblock_length(block, p);
      term.weighted_sum += ExactInt(2).pow(static_cast<unsigned long>(p.cycles())) * len;
      term.lengths.emplace_back(std::move(p), std::move(len));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

RationalPair w_sum_identity(int n, int max_n_guard) {
  if (n < 3) throw DomainError("W-sum identity requires n >= 3, got " + std::to_string(n));
  require_guard(n, max_n_guard);
  ExactRat lhs(0);
  for (const auto& w : w_factors(n)) lhs += w;

  const int d = 2 * n - 3;
  std::vector<ExactRat> g;
  for (int k = 1; k <= 2 * n - 4; ++k) g.push_back(ExactRat(1) - ExactRat(ExactInt(d), ExactInt(k)));
  ExactRat e = elem_sym_all(g)[static_cast<std::size_t>(n - 2)];
  if (n % 2 == 1) e = -e;
  ExactRat rhs = ExactRat(ExactInt(d * d) * factorial(static_cast<unsigned>(2 * n - 4))) /
                 ExactRat(factorial_product(n)) * e;
  return {lhs, rhs};
}

}  // namespace fano
