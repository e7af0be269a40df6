#include "fano/kernel.hpp"

#include <mutex>
#include <shared_mutex>

#include "fano/errors.hpp"

namespace fano {

ExactInt factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

ExactInt binomial(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return ExactInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return ExactInt(std::move(r));
}

namespace {

class StirlingTable {
 public:
  ExactInt get(unsigned n, unsigned m) {
    if (m > n) return ExactInt(0);
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][m];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({ExactInt(1)});
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const unsigned k = static_cast<unsigned>(rows_.size() - 1);
      std::vector<ExactInt> row(prev.size() + 1);
      for (std::size_t j = 1; j < row.size(); ++j) {
        row[j] = prev[j - 1];
        if (j < prev.size()) row[j] += ExactInt(k) * prev[j];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][m];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

ExactInt stirling1_unsigned(unsigned n, unsigned m) { return stirling_table().get(n, m); }

ExactInt catalan(unsigned m) { return binomial(2 * m, static_cast<int>(m)).divexact(ExactInt(m + 1)); }

std::vector<ExactRat> elem_sym_all(std::span<const ExactRat> values) {
  std::vector<ExactRat> e(values.size() + 1, ExactRat(0));
  e[0] = ExactRat(1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t t = i + 1; t >= 1; --t) e[t] += values[i] * e[t - 1];
  }
  return e;
}

std::vector<ExactRat> expand_product(std::span<const LinearFactor> factors) {
  std::vector<ExactRat> coeffs{ExactRat(1)};
  for (const auto& f : factors) {
    std::vector<ExactRat> next(coeffs.size() + 1, ExactRat(0));
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      next[p] += coeffs[p] * f.constant;
      next[p + 1] += coeffs[p] * f.slope;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

ExactRat coeff_of_product(std::span<const LinearFactor> factors, unsigned power) {
  if (power > factors.size()) {
    throw DomainError("coefficient power " + std::to_string(power) + " exceeds factor count " +
                      std::to_string(factors.size()));
  }
  // Only coefficients up to `power` are ever needed.
  std::vector<ExactRat> coeffs(power + 1, ExactRat(0));
  coeffs[0] = ExactRat(1);
  std::size_t degree = 0;
  for (const auto& f : factors) {
    std::size_t top = std::min<std::size_t>(degree + 1, power);
    for (std::size_t p = top; p >= 1; --p) coeffs[p] = coeffs[p] * f.constant + coeffs[p - 1] * f.slope;
    coeffs[0] *= f.constant;
    ++degree;
  }
  return coeffs[power];
}

}  // namespace fano
