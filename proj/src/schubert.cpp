#include "fano/schubert.hpp"

#include <map>
#include <mutex>
#include <string>

#include "fano/errors.hpp"
#include "fano/kernel.hpp"

namespace fano {

TriMatrix::TriMatrix(std::vector<std::vector<ExactRat>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != r + 1) {
      throw DomainError("row " + std::to_string(r) + " of a lower-triangular matrix must have " +
                        std::to_string(r + 1) + " entries");
    }
  }
}

TriMatrix TriMatrix::identity(std::size_t size) {
  std::vector<std::vector<ExactRat>> rows(size);
  for (std::size_t r = 0; r < size; ++r) {
    rows[r].assign(r + 1, ExactRat(0));
    rows[r][r] = ExactRat(1);
  }
  return TriMatrix(std::move(rows));
}

ExactRat TriMatrix::at(std::size_t r, std::size_t c) const {
  return c <= r ? rows_.at(r)[c] : ExactRat(0);
}

TriMatrix TriMatrix::inverse() const {
  const std::size_t n = size();
  for (std::size_t r = 0; r < n; ++r) {
    if (rows_[r][r].is_zero()) throw DomainError("singular lower-triangular matrix");
  }
  std::vector<std::vector<ExactRat>> inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(r + 1, ExactRat(0));
  // Solve L x = e_c for each column c; x vanishes above row c.
  for (std::size_t c = 0; c < n; ++c) {
    inv[c][c] = rows_[c][c].reciprocal();
    for (std::size_t r = c + 1; r < n; ++r) {
      ExactRat acc(0);
      for (std::size_t k = c; k < r; ++k) acc += rows_[r][k] * inv[k][c];
      inv[r][c] = -acc / rows_[r][r];
    }
  }
  return TriMatrix(std::move(inv));
}

TriMatrix TriMatrix::block(std::size_t size) const {
  if (size > rows_.size()) throw DomainError("block larger than matrix");
  return TriMatrix(std::vector<std::vector<ExactRat>>(rows_.begin(), rows_.begin() + static_cast<long>(size)));
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size()) throw DomainError("matrix size mismatch");
  const std::size_t n = a.size();
  std::vector<std::vector<ExactRat>> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[r].assign(r + 1, ExactRat(0));
    for (std::size_t c = 0; c <= r; ++c) {
      for (std::size_t k = c; k <= r; ++k) out[r][c] += a.rows_[r][k] * b.rows_[k][c];
    }
  }
  return TriMatrix(std::move(out));
}

namespace {

void require_n(int n, int lower, const char* what) {
  if (n < lower) {
    throw DomainError(std::string(what) + " requires n >= " + std::to_string(lower) + ", got " +
                      std::to_string(n));
  }
}

ExactInt leading_power(int n) {
  return ExactInt(2 * n - 3).pow(static_cast<unsigned long>(2 * n - 2));
}

/// [alpha_{n,0}, ..., alpha_{n,n-2}].
std::vector<ExactRat> alpha_row(int n) {
  auto e = elem_sym_all(gamma_set(n));
  ExactRat scale(leading_power(n));
  for (auto& v : e) v *= scale;
  return e;
}

}  // namespace

std::vector<ExactRat> gamma_set(int n) {
  require_n(n, 2, "gamma set");
  const int d = 2 * n - 3;
  std::vector<ExactRat> out;
  for (int j = 1; j <= n - 2; ++j) out.emplace_back(ExactInt((d - j) * j), ExactInt(d * d));
  return out;
}

ExactInt u_coefficient(unsigned t) {
  ExactInt v = ExactInt(2 * t + 1) * catalan(t);
  return t % 2 == 0 ? v : -v;
}

ExactInt catalan_binomial_transform(unsigned t) {
  ExactInt sum(0);
  for (unsigned m = 0; m <= t; ++m) {
    sum += binomial(t, static_cast<int>(m)) * ExactInt(-4).pow(t - m) * catalan(m);
  }
  return sum;
}

ExactInt schubert_cn(int n) {
  require_n(n, 2, "schubert");
  auto e = elem_sym_all(gamma_set(n));
  ExactRat sum(0);
  for (int m = 0; m <= n - 2; ++m) sum += e[m] * ExactRat(u_coefficient(static_cast<unsigned>(m)));
  ExactRat value = ExactRat(leading_power(n)) * sum;
  if (!value.is_integer()) throw InternalError("schubert produced non-integral " + value.str());
  return value.num();
}

ExactRat alpha_entry(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2) {
    throw DomainError("alpha entry (" + std::to_string(n) + ", " + std::to_string(k) +
                      ") outside 2 <= n, 0 <= k <= n-2");
  }
  return alpha_row(n)[static_cast<std::size_t>(k)];
}

TriMatrix alpha_block(std::size_t size) {
  std::vector<std::vector<ExactRat>> rows;
  rows.reserve(size);
  for (std::size_t i = 0; i < size; ++i) rows.push_back(alpha_row(static_cast<int>(i) + 2));
  return TriMatrix(std::move(rows));
}

namespace {

class RecursionMemo {
 public:
  RecursionRow get(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) + 3 <= n) extend();
    return rows_[static_cast<std::size_t>(n - 3)];
  }

 private:
  // alpha_{m, j} for all m seen so far, indexed alphas_[m - 2][j].
  const ExactRat& alpha(int m, int j) {
    while (static_cast<int>(alphas_.size()) + 2 <= m) alphas_.push_back(alpha_row(static_cast<int>(alphas_.size()) + 2));
    return alphas_[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(j)];
  }

  const ExactRat& b(int n, int k) { return rows_[static_cast<std::size_t>(n - 3)].coeff(k); }

  void extend() {
    const int n = static_cast<int>(rows_.size()) + 3;
    RecursionRow row;
    row.n = n;
    row.b.resize(static_cast<std::size_t>(n - 2));
    // B_{n,k} depends on B_{k+q,k} for rows k+q < n, all already stored.
    for (int k = 2; k <= n - 1; ++k) {
      ExactRat v = alpha(n, k - 2) / alpha(k, k - 2);
      for (int q = 1; q <= n - k - 1; ++q) v -= alpha(n, k - 2 + q) / alpha(k + q, k - 2 + q) * b(k + q, k);
      row.b[static_cast<std::size_t>(k - 2)] = std::move(v);
    }
    row.f = alpha(n, n - 2) * ExactRat(ExactInt(2 * n - 3) * catalan(static_cast<unsigned>(n - 2)));
    if (n % 2 == 1) row.f = -row.f;
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<ExactRat>> alphas_;
  std::vector<RecursionRow> rows_;
};

RecursionMemo& recursion_memo() {
  static RecursionMemo memo;
  return memo;
}

}  // namespace

RecursionRow recursion_coeffs(int n) {
  require_n(n, 3, "recursion coefficients");
  return recursion_memo().get(n);
}

ExactInt cn_via_recursion(int n) {
  require_n(n, 2, "recursion");
  std::vector<ExactInt> c{ExactInt(1)};  // c[k - 2] = C_k
  for (int m = 3; m <= n; ++m) {
    RecursionRow row = recursion_coeffs(m);
    ExactRat value = row.f;
    for (int k = 2; k <= m - 1; ++k) value += row.coeff(k) * ExactRat(c[static_cast<std::size_t>(k - 2)]);
    if (!value.is_integer()) {
      throw InternalError("recursion produced non-integral C_" + std::to_string(m) + " = " + value.str());
    }
    c.push_back(value.num());
  }
  return c.back();
}

TriMatrix theta_matrix(std::size_t size) {
  if (size < 1) throw DomainError("theta matrix size must be >= 1");
  return alpha_block(size).inverse();
}

std::vector<ExactInt> z_series_check(std::size_t terms) {
  if (terms < 1) throw DomainError("z series needs at least one term");
  TriMatrix theta = theta_matrix(terms);
  std::vector<ExactRat> c;
  for (std::size_t k = 0; k < terms; ++k) c.emplace_back(schubert_cn(static_cast<int>(k) + 2));
  std::vector<ExactInt> out;
  for (std::size_t t = 0; t < terms; ++t) {
    ExactRat v(0);
    for (std::size_t k = 0; k <= t; ++k) v += theta.at(t, k) * c[k];
    ExactInt expected = u_coefficient(static_cast<unsigned>(t));
    if (v != ExactRat(expected)) {
      throw InternalError("z series coefficient " + std::to_string(t) + " is " + v.str() + ", expected " +
                          expected.str());
    }
    out.push_back(std::move(expected));
  }
  return out;
}

namespace {

class PieriMemo {
 public:
  ExactInt get(int n, int a, int b) {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(n);
    if (it == tables_.end()) it = tables_.emplace(n, build(n)).first;
    return it->second[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  // paths[a][b]: number of sigma_1 chains from sigma_{a,b} up to sigma_{n-1,n-1}.
  static std::vector<std::vector<ExactInt>> build(int n) {
    const int top = n - 1;
    std::vector<std::vector<ExactInt>> paths(static_cast<std::size_t>(top + 1),
                                             std::vector<ExactInt>(static_cast<std::size_t>(top + 1)));
    for (int a = top; a >= 0; --a) {
      for (int b = a; b >= 0; --b) {
        auto& cell = paths[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (a == top && b == top) {
          cell = ExactInt(1);
          continue;
        }
        if (a + 1 <= top) cell += paths[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b)];
        if (b + 1 <= a) cell += paths[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)];
      }
    }
    return paths;
  }

  std::mutex mutex_;
  std::map<int, std::vector<std::vector<ExactInt>>> tables_;
};

}  // namespace

ExactInt catalan_path_count(int n, int m) {
  if (n < 2 || m < 0 || m > n - 1) {
    throw DomainError("catalan path count (" + std::to_string(n) + ", " + std::to_string(m) +
                      ") outside 2 <= n, 0 <= m <= n-1");
  }
  static PieriMemo memo;
  const int start = n - 1 - m;
  return memo.get(n, start, start);
}

}  // namespace fano
