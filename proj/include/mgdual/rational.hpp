#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mgdual {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}
  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}
  Rational(const BigInt& v) : value_(v) {}
  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p/q" or "p" with an optional leading '-'. The result is
  /// reduced; throws std::invalid_argument on malformed text or q == 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Human form: "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Machine form: always "p/q", integers as "p/1".
  std::string canonical() const;

  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

}  // namespace mgdual
