#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fano {

/// Arbitrary-precision signed integer. Thin value wrapper over a GMP integer;
/// zero has a single representation and no operation ever rounds.
class ExactInt {
 public:
  ExactInt() = default;
  template <std::signed_integral T>
  ExactInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of numeric literals
  template <std::unsigned_integral T>
  ExactInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string; throws std::invalid_argument.
  static ExactInt parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;

  ExactInt pow(unsigned long exponent) const;
  ExactInt abs() const;
  /// Division that must be exact; throws std::domain_error otherwise.
  ExactInt divexact(const ExactInt& divisor) const;

  /// Natural logarithm of a strictly positive value, accurate to double
  /// precision regardless of magnitude.
  double log() const;

  std::string str() const { return v_.get_str(); }

  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }
  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Exact rational, always in lowest terms with a positive denominator, so
/// structural equality coincides with numeric equality.
class ExactRat {
 public:
  ExactRat() = default;
  template <std::integral T>
  ExactRat(T v) : ExactRat(ExactInt(v)) {}  // NOLINT
  ExactRat(const ExactInt& v) : q_(v.mpz()) {}  // NOLINT
  /// Throws std::domain_error on a zero denominator.
  ExactRat(const ExactInt& num, const ExactInt& den);

  /// Accepts "p" or "p/q".
  static ExactRat parse(std::string_view text);

  ExactInt num() const { return ExactInt(mpz_class(q_.get_num())); }
  ExactInt den() const { return ExactInt(mpz_class(q_.get_den())); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Throws std::domain_error unless the value is integral.
  ExactInt to_int() const;

  ExactRat reciprocal() const;
  ExactRat pow(long exponent) const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  ExactRat operator-() const;
  ExactRat& operator+=(const ExactRat& o) { q_ += o.q_; return *this; }
  ExactRat& operator-=(const ExactRat& o) { q_ -= o.q_; return *this; }
  ExactRat& operator*=(const ExactRat& o) { q_ *= o.q_; return *this; }
  ExactRat& operator/=(const ExactRat& o);

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  explicit ExactRat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRat& v);

}  // namespace fano
