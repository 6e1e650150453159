#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace keller {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero : public error {
 public:
  division_by_zero() : error("division by zero") {}
};

class ring_mismatch : public error {
 public:
  explicit ring_mismatch(const std::string& what) : error(what) {}
};

// Arbitrary-precision integer, a value wrapper around GMP's mpz. Always in
// canonical form (no drifting signs or spare limbs; GMP maintains that).
class BigInt {
 public:
  BigInt() : v_(0) {}
  BigInt(long v) : v_(v) {}  // NOLINT: implicit small-literal construction is intended
  explicit BigInt(const std::string& decimal);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

  // Truncated division toward zero; both throw on zero divisor.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.v_ >= b.v_; }

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;

  std::string str() const { return v_.get_str(); }

  const mpz_class& raw() const { return v_; }
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

 private:
  mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);
BigInt pow(const BigInt& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact rational number. Canonical reduced form (positive denominator,
// coprime numerator/denominator) is enforced on every construction.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const std::string& text);  // "-3/4", "7"

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // "p/q" when q != 1, plain "p" otherwise; parse(str()) round-trips exactly.
  std::string str() const;

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace keller
