#include "fano/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fano {

ExactInt ExactInt::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(mpz_class(s, 10));
}

long ExactInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + str());
  return v_.get_si();
}

ExactInt ExactInt::pow(unsigned long exponent) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::abs() const {
  mpz_class r;
  mpz_abs(r.get_mpz_t(), v_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt ExactInt::divexact(const ExactInt& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(v_.get_mpz_t(), divisor.v_.get_mpz_t())) {
    throw std::domain_error(str() + " is not divisible by " + divisor.str());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
  return ExactInt(std::move(r));
}

double ExactInt::log() const {
  if (sign() <= 0) throw std::domain_error("log of non-positive integer " + str());
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  q_ = mpq_class(num.mpz(), den.mpz());
  q_.canonicalize();
}

ExactRat ExactRat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(ExactInt::parse(text));
  return ExactRat(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(text.substr(slash + 1)));
}

ExactInt ExactRat::to_int() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  return num();
}

ExactRat ExactRat::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return ExactRat(den(), num());
}

ExactRat ExactRat::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return ExactRat(mpq_class(n, d));
}

std::string ExactRat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRat ExactRat::operator-() const { return ExactRat(mpq_class(-q_)); }

ExactRat& ExactRat::operator/=(const ExactRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRat& v) { return os << v.str(); }

}  // namespace fano
