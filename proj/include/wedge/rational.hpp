#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "wedge/error.hpp"

namespace wedge {

/// Arbitrary-precision rational kept in canonical lowest terms: the
/// denominator is positive, gcd(|num|, den) = 1, and zero is 0/1.
///
/// Text form is "num/den", or just "num" when the denominator is 1
/// ("225", "5/6", "-7/3"). parse() accepts exactly that grammar.
class BigRational {
public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long n) : num_(n), den_(1) {}        // NOLINT: implicit by design
  BigRational(int n) : num_(n), den_(1) {}         // NOLINT
  BigRational(const mpz_class& n) : num_(n), den_(1) {}  // NOLINT

  BigRational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw arithmetic_error("rational with zero denominator");
    normalize();
  }

  /// Parses "-"? digits ("/" digits)?; throws parse_error on anything else,
  /// including a zero denominator.
  static BigRational parse(const std::string& text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  std::string str() const;

  friend BigRational operator-(const BigRational& x) {
    BigRational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend BigRational operator+(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator-(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator*(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend BigRational operator/(const BigRational& x, const BigRational& y) {
    if (y.num_ == 0) throw arithmetic_error("rational division by zero");
    return BigRational(x.num_ * y.den_, x.den_ * y.num_);
  }

  BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
  BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
  BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
  BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

  friend bool operator==(const BigRational& x, const BigRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
    int c = cmp(x.num_ * y.den_, y.num_ * x.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x);

private:
  void normalize();

  mpz_class num_, den_;
};

/// Total-order comparison: -1, 0 or +1.
int compare(const BigRational& x, const BigRational& y);

BigRational abs(const BigRational& x);

/// Floor of the square root; the result r satisfies r^2 <= n < (r+1)^2.
/// Negative input throws domain_error.
mpz_class isqrt(const mpz_class& n);

bool is_perfect_square(const mpz_class& n);

/// Nearest integer, ties rounded away from zero.
mpz_class round_half_away(const BigRational& x);

mpz_class pow_int(unsigned long base, unsigned long exp);

/// Decimal rendering with exactly k >= 1 fractional digits, rounded
/// half away from zero. Pure integer arithmetic throughout.
std::string approx_decimal(const BigRational& x, int k);

}  // namespace wedge
