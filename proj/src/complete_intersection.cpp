#include "fano/complete_intersection.hpp"

#include <algorithm>

#include "fano/errors.hpp"
#include "fano/kernel.hpp"

namespace fano {

std::vector<int> DegreeTuple::half_degrees() const {
  std::vector<int> out;
  out.reserve(degrees.size());
  for (int d : degrees) out.push_back((d - 1) / 2);
  return out;
}

std::string DegreeTuple::str() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s;
}

namespace {

void validate(std::span<const int> degrees) {
  if (degrees.empty()) throw DomainError("at least one degree is required");
  int total = 0;
  for (int d : degrees) {
    if (d < 1) throw DomainError("degrees must be >= 1, got " + std::to_string(d));
    total += d + 1;
  }
  if (total % 2 != 0) {
    throw DomainError("dimension mismatch: sum of (d_i + 1) is " + std::to_string(total) +
                      ", which is odd, so no finite line count exists");
  }
}

/// (weight, m) pairs of one factor: d^{-2t} e_t(Xi(d)) C(t, m) (-4)^{t-m}.
std::vector<std::pair<ExactRat, int>> factor_terms(int d) {
  const int half = (d - 1) / 2;
  std::vector<ExactRat> xi;
  for (int j = 1; j <= half; ++j) xi.emplace_back((d - j) * j);
  auto e = elem_sym_all(xi);
  std::vector<std::pair<ExactRat, int>> terms;
  for (int t = 0; t <= half; ++t) {
    ExactRat base = e[static_cast<std::size_t>(t)] / ExactRat(ExactInt(d).pow(static_cast<unsigned long>(2 * t)));
    for (int m = 0; m <= t; ++m) {
      ExactRat w = base * ExactRat(binomial(static_cast<unsigned>(t), m) *
                                   ExactInt(-4).pow(static_cast<unsigned long>(t - m)));
      if (!w.is_zero()) terms.emplace_back(std::move(w), m);
    }
  }
  return terms;
}

}  // namespace

DegreeTuple ci_dimension_check(std::vector<int> degrees) {
  validate(degrees);
  std::sort(degrees.begin(), degrees.end());
  DegreeTuple t;
  int total = 0;
  for (int d : degrees) {
    total += d + 1;
    if (d % 2 == 0) ++t.even_count;
  }
  t.degrees = std::move(degrees);
  t.ambient_dim = 1 + total / 2;
  return t;
}

ExactInt ci_lines_in_order(std::span<const int> degrees) {
  validate(degrees);
  int even_count = 0;
  ExactRat prefactor(1);
  std::vector<std::vector<std::pair<ExactRat, int>>> factors;
  for (int d : degrees) {
    const int half = (d - 1) / 2;
    prefactor *= ExactRat(ExactInt(d).pow(static_cast<unsigned long>(2 * half + 2)));
    if (d % 2 == 0) {
      ++even_count;
      prefactor *= ExactRat(ExactInt(d), ExactInt(2));
    }
    factors.push_back(factor_terms(d));
  }

  // Odometer over one (t_i, m_i) choice per factor.
  ExactRat sum(0);
  std::vector<std::size_t> digit(factors.size(), 0);
  while (true) {
    ExactRat weight(1);
    int m_total = even_count / 2;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& [w, m] = factors[i][digit[i]];
      weight *= w;
      m_total += m;
    }
    sum += weight * ExactRat(catalan(static_cast<unsigned>(m_total)));

    std::size_t i = 0;
    while (i < factors.size() && ++digit[i] == factors[i].size()) digit[i++] = 0;
    if (i == factors.size()) break;
  }

  ExactRat value = prefactor * sum;
  if (!value.is_integer() || value.sign() <= 0) {
    throw InternalError("complete intersection count is not a positive integer: " + value.str());
  }
  return value.num();
}

ExactInt ci_lines(const DegreeTuple& t) { return ci_lines_in_order(t.degrees); }

std::vector<std::pair<DegreeTuple, ExactInt>> ci_table(int codim, int max_degree) {
  if (codim < 1 || max_degree < 1) throw DomainError("ci table needs codim >= 1 and max degree >= 1");
  std::vector<std::pair<DegreeTuple, ExactInt>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int lowest) -> void {
    if (static_cast<int>(current.size()) == codim) {
      int total = 0;
      for (int d : current) total += d + 1;
      if (total % 2 != 0) return;
      DegreeTuple t = ci_dimension_check(current);
      ExactInt lines = ci_lines(t);
      out.emplace_back(std::move(t), std::move(lines));
      return;
    }
    for (int d = lowest; d <= max_degree; ++d) {
      current.push_back(d);
      self(self, d);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace fano
