#include "fano/classical.hpp"

#include <string>
#include <vector>

#include "fano/errors.hpp"
#include "fano/kernel.hpp"

namespace fano {

namespace {

void require_min(int n, int lower, const char* method) {
  if (n < lower) {
    throw DomainError(std::string(method) + " requires n >= " + std::to_string(lower) + ", got " +
                      std::to_string(n));
  }
}

ExactInt integral(const ExactRat& value, const char* method) {
  if (!value.is_integer()) {
    throw InternalError(std::string(method) + " produced a non-integral value " + value.str());
  }
  return value.num();
}

}  // namespace

ExactInt zagier_product_cn(int n) {
  require_min(n, 2, "zagier-product");
  const int d = 2 * n - 3;
  std::vector<LinearFactor> factors;
  factors.reserve(d + 2);
  factors.push_back({ExactRat(1), ExactRat(-1)});
  for (int k = 0; k <= d; ++k) factors.push_back({ExactRat(d - k), ExactRat(k)});
  return integral(coeff_of_product(factors, static_cast<unsigned>(n - 1)), "zagier-product");
}

ExactInt zagier_stirling_cn(int n) {
  require_min(n, 2, "zagier-stirling");
  const int d = 2 * n - 3;
  ExactInt sum(0);
  for (int m = 0; m <= n - 1; ++m) {
    ExactInt term = binomial(static_cast<unsigned>(2 * n - 2 - m), n - 1) *
                    ExactInt(d).pow(static_cast<unsigned long>(m + 1)) *
                    stirling1_unsigned(static_cast<unsigned>(d), static_cast<unsigned>(m));
    if ((n - 1 - m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInt libgober_cn(int n) {
  require_min(n, 3, "libgober");
  const int d = 2 * n - 3;
  std::vector<ExactRat> set;
  for (int j = 1; j <= 2 * n - 4; ++j) set.emplace_back(ExactInt(d - j), ExactInt(j));
  auto e = elem_sym_all(set);
  ExactRat bracket = e[n - 2] - e[n - 3];
  return integral(ExactRat(ExactInt(d) * factorial(static_cast<unsigned>(d))) * bracket, "libgober");
}

ExactInt dominici_cn(int n) {
  require_min(n, 3, "dominici");
  const int d = 2 * n - 3;
  std::vector<ExactRat> set;
  for (int j = 1; j <= 2 * n - 4; ++j) set.emplace_back(ExactInt(j), ExactInt(d - j));
  auto e = elem_sym_all(set);
  ExactRat bracket = e[n - 2] - e[n - 1];
  ExactRat prefactor(ExactInt(d * d) * factorial(static_cast<unsigned>(2 * n - 4)));
  return integral(prefactor * bracket, "dominici");
}

ExactInt harris_cn(int n) {
  require_min(n, 3, "harris");
  const int d = 2 * n - 3;
  std::vector<ExactRat> set;
  for (int i = 1; i <= n - 2; ++i) {
    set.emplace_back(ExactInt((d - 2 * i) * (d - 2 * i)), ExactInt(i * (d - i)));
  }
  auto e = elem_sym_all(set);
  ExactRat sum(0);
  for (int k = 0; k <= n - 2; ++k) sum += ExactRat(catalan(static_cast<unsigned>(k))) * e[n - 2 - k];
  return integral(ExactRat(ExactInt(d) * factorial(static_cast<unsigned>(d))) * sum, "harris");
}

}  // namespace fano
