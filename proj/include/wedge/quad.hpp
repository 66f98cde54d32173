#pragma once

#include <string>

#include "wedge/rational.hpp"

namespace wedge {

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// The radicand d is a positive non-square integer and is carried per value;
/// combining values with different radicands is a domain_error rather than a
/// field-tower extension. A perfect-square d is rejected at construction so
/// the (a, b) representation is unique and equality is componentwise.
class QuadValue {
public:
  QuadValue(BigRational a, BigRational b, long d);

  static QuadValue sqrt_of(long d) { return QuadValue(0, 1, d); }
  static QuadValue from_rational(BigRational a, long d) {
    return QuadValue(std::move(a), 0, d);
  }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadValue conjugate() const { return QuadValue(a_, -b_, d_); }

  /// a^2 - d b^2; zero only for the zero value.
  BigRational norm() const { return a_ * a_ - BigRational(d_) * b_ * b_; }

  friend QuadValue operator-(const QuadValue& x) {
    return QuadValue(-x.a_, -x.b_, x.d_);
  }
  friend QuadValue operator+(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator-(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator*(const QuadValue& x, const QuadValue& y);
  friend QuadValue operator/(const QuadValue& x, const QuadValue& y);

  /// Componentwise for a shared radicand; values with different radicands
  /// compare equal only when both are rational.
  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    if (x.d_ == y.d_) return x.a_ == y.a_ && x.b_ == y.b_;
    return x.is_rational() && y.is_rational() && x.a_ == y.a_;
  }

  std::string str() const;

private:
  BigRational a_, b_;
  long d_;
};

/// Exact sign (-1, 0, +1) using only rational comparisons: when a and b
/// oppose, a^2 is weighed against d b^2.
int sign(const QuadValue& x);

/// Largest integer <= x, computed with isqrt on cleared denominators.
mpz_class floor_int(const QuadValue& x);

/// Decimal rendering with exactly k >= 1 fractional digits, rounded half
/// away from zero; never touches hardware floating point.
std::string approx_decimal(const QuadValue& x, int k);

}  // namespace wedge
