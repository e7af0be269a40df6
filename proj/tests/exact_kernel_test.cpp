#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "fano/errors.hpp"
#include "fano/exact.hpp"
#include "fano/kernel.hpp"
#include "oracles.hpp"

using fano::ExactInt;
using fano::ExactRat;

TEST(ExactInt, ParseAndPrintRoundTrip) {
  const char* big = "4798492409653834563672780605191070760393640761817269985515";
  EXPECT_EQ(ExactInt::parse(big).str(), big);
  EXPECT_EQ(ExactInt::parse("-17").str(), "-17");
  EXPECT_THROW(ExactInt::parse("12x"), std::invalid_argument);
}

TEST(ExactInt, Divexact) {
  EXPECT_EQ(ExactInt(5040).divexact(ExactInt(24)), ExactInt(210));
  EXPECT_THROW(ExactInt(7).divexact(ExactInt(2)), std::domain_error);
}

TEST(ExactRat, AlwaysReduced) {
  ExactRat q(ExactInt(6), ExactInt(-4));
  EXPECT_EQ(q.num(), ExactInt(-3));
  EXPECT_EQ(q.den(), ExactInt(2));
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(ExactRat(ExactInt(10), ExactInt(5)).str(), "2");
  EXPECT_THROW(ExactRat(ExactInt(1), ExactInt(0)), std::domain_error);
  EXPECT_EQ(ExactRat::parse("-140610978/125"), ExactRat(ExactInt(-140610978), ExactInt(125)));
}

TEST(ExactRat, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 45);
  auto draw = [&] { return ExactRat(ExactInt(num(rng)), ExactInt(den(rng))); };
  for (int i = 0; i < 500; ++i) {
    ExactRat a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, ExactRat(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_GT(a.den(), ExactInt(0));
  }
}

TEST(Binomial, MatchesPascalTriangle) {
  auto rows = oracle::pascal(30);
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(fano::binomial(n, k), rows[n][k]) << n << " " << k;
  }
  EXPECT_EQ(fano::binomial(4, 2), ExactInt(6));
  EXPECT_EQ(fano::binomial(16, 8), ExactInt(12870));
  EXPECT_EQ(fano::binomial(5, -1), ExactInt(0));
  EXPECT_EQ(fano::binomial(5, 6), ExactInt(0));
}

TEST(Binomial, TwoBinomialsIdentity) {
  for (int t = 0; t <= 12; ++t) {
    for (int m = 0; m <= t; ++m) {
      ExactInt lhs(0);
      for (int k = m; k <= t; ++k) lhs += fano::binomial(k, m) * fano::binomial(t, k);
      EXPECT_EQ(lhs, ExactInt(2).pow(t - m) * fano::binomial(t, m));
    }
  }
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(fano::factorial(0), ExactInt(1));
  EXPECT_EQ(fano::factorial(10), ExactInt(3628800));
}

TEST(Stirling, MatchesPermutationEnumeration) {
  for (int n = 0; n <= 7; ++n) {
    auto row = oracle::stirling_row_by_enumeration(n);
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(fano::stirling1_unsigned(n, m), ExactInt(row[static_cast<std::size_t>(m)])) << n << " " << m;
    }
  }
  EXPECT_EQ(fano::stirling1_unsigned(0, 0), ExactInt(1));
  EXPECT_EQ(fano::stirling1_unsigned(3, 1), ExactInt(2));
  EXPECT_EQ(fano::stirling1_unsigned(4, 2), ExactInt(11));
  EXPECT_EQ(fano::stirling1_unsigned(4, 5), ExactInt(0));
}

TEST(Stirling, RowSums) {
  for (unsigned k = 0; k <= 10; ++k) {
    ExactInt plain(0), weighted(0);
    for (unsigned l = 0; l <= k; ++l) {
      plain += fano::stirling1_unsigned(k, l);
      weighted += ExactInt(2).pow(l) * fano::stirling1_unsigned(k, l);
    }
    EXPECT_EQ(plain, fano::factorial(k));
    EXPECT_EQ(weighted, fano::factorial(k + 1));
  }
}

TEST(Stirling, ConcurrentReadersSeeOneTable) {
  std::vector<ExactInt> results(8);
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < results.size(); ++i) {
      pool.emplace_back([&, i] { results[i] = fano::stirling1_unsigned(60 + 5 * i, 20); });
    }
  }
  for (unsigned i = 0; i < results.size(); ++i) {
    ExactInt serial = fano::stirling1_unsigned(60 + 5 * i, 20);
    EXPECT_EQ(results[i], serial);
  }
}

TEST(Catalan, MatchesDyckPaths) {
  for (int m = 0; m <= 8; ++m) EXPECT_EQ(fano::catalan(m), ExactInt(oracle::dyck_paths(m))) << m;
  EXPECT_EQ(fano::catalan(0), ExactInt(1));
  EXPECT_EQ(fano::catalan(3), ExactInt(5));
  EXPECT_EQ(fano::catalan(7), ExactInt(429));
}

TEST(ElemSym, SmallCases) {
  EXPECT_EQ(fano::elem_sym_all({}), std::vector<ExactRat>{ExactRat(1)});
  std::vector<ExactRat> two{ExactRat(2), ExactRat(3)};
  EXPECT_EQ(fano::elem_sym_all(two), (std::vector<ExactRat>{ExactRat(1), ExactRat(5), ExactRat(6)}));
  std::vector<ExactRat> gamma{ExactRat(ExactInt(2), ExactInt(9))};
  EXPECT_EQ(fano::elem_sym_all(gamma), (std::vector<ExactRat>{ExactRat(1), ExactRat(ExactInt(2), ExactInt(9))}));
}

TEST(ElemSym, MatchesSubsetProducts) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (std::size_t len = 0; len <= 8; ++len) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ExactRat> values;
      for (std::size_t i = 0; i < len; ++i) values.emplace_back(ExactInt(num(rng)), ExactInt(den(rng)));
      EXPECT_EQ(fano::elem_sym_all(values), oracle::elem_sym_by_subsets(values));
    }
  }
}

TEST(CoeffOfProduct, Examples) {
  using fano::LinearFactor;
  std::vector<LinearFactor> square{{ExactRat(1), ExactRat(1)}, {ExactRat(1), ExactRat(1)}};
  EXPECT_EQ(fano::coeff_of_product(square, 1), ExactRat(2));
  std::vector<LinearFactor> mixed{{ExactRat(1), ExactRat(-1)}, {ExactRat(1), ExactRat(0)}};
  EXPECT_EQ(fano::coeff_of_product(mixed, 1), ExactRat(-1));
  EXPECT_THROW(fano::coeff_of_product(mixed, 3), fano::DomainError);

  std::vector<LinearFactor> zagier{{ExactRat(1), ExactRat(-1)}};
  for (int k = 0; k <= 3; ++k) zagier.push_back({ExactRat(3 - k), ExactRat(k)});
  EXPECT_EQ(fano::coeff_of_product(zagier, 2), ExactRat(27));
}

TEST(CoeffOfProduct, AgreesWithFullExpansion) {
  using fano::LinearFactor;
  std::vector<LinearFactor> factors;
  for (int k = 0; k < 9; ++k) factors.push_back({ExactRat(k - 4), ExactRat(ExactInt(k + 1), ExactInt(3))});
  auto full = fano::expand_product(factors);
  ASSERT_EQ(full.size(), factors.size() + 1);
  for (unsigned p = 0; p <= factors.size(); ++p) EXPECT_EQ(fano::coeff_of_product(factors, p), full[p]);
}
