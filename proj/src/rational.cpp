#include "keller/rational.hpp"

#include <ostream>

namespace keller {

namespace {

bool valid_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigInt::BigInt(const std::string& decimal) {
  if (!valid_integer_literal(decimal)) {
    throw error("invalid integer literal: \"" + decimal + "\"");
  }
  v_ = mpz_class(decimal, 10);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw division_by_zero();
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw division_by_zero();
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(r));
}

long BigInt::to_long() const {
  if (!fits_long()) throw error("BigInt does not fit in long: " + str());
  return v_.get_si();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(l));
}

BigInt abs(const BigInt& a) {
  return a.sign() < 0 ? -a : a;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.str();
}

Rational::Rational(long num, long den) {
  if (den == 0) throw division_by_zero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw division_by_zero();
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational::Rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    v_ = mpq_class(BigInt(text).raw());
  } else {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den.is_zero()) throw division_by_zero();
    v_ = mpq_class(num.raw(), den.raw());
  }
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw division_by_zero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw division_by_zero();
  return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
  return v_.get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) return pow(base.inverse(), -exponent);
  BigInt num = pow(base.numerator(), static_cast<unsigned long>(exponent));
  BigInt den = pow(base.denominator(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.str();
}

}  // namespace keller
