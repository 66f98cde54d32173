#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedge/rational.hpp"

namespace wedge {

/// Signed base-60 positional numeral in the modern tablet notation: whole
/// digits separated by "," and fractional digits after ";", each digit
/// 0..59 ("1;24,51,10", "-42;25,35", "0;0,0,1").
///
/// Values are kept canonical: no redundant leading whole digits, no trailing
/// zero fractional digits, and zero is "+0".
class SexValue {
public:
  SexValue() : sign_(+1), whole_{0} {}

  static SexValue make(int sign, std::vector<int> whole, std::vector<int> frac);

  int sgn() const { return sign_; }
  const std::vector<int>& whole() const { return whole_; }
  const std::vector<int>& frac() const { return frac_; }

  bool is_zero() const { return whole_.size() == 1 && whole_[0] == 0 && frac_.empty(); }

  friend bool operator==(const SexValue&, const SexValue&) = default;

private:
  int sign_;
  std::vector<int> whole_;
  std::vector<int> frac_;
};

/// Grammar: "-"? digit ("," digit)* (";" digit ("," digit)*)? where each
/// digit is 1-2 decimal characters valued 0..59. Throws parse_error with the
/// character offset of the offending input.
SexValue parse_sex(const std::string& text);

std::string format_sex(const SexValue& v);

/// Exact positional sum.
BigRational sex_to_rational(const SexValue& v);

/// The unreduced positional sum over denominator 60^|frac|.
std::pair<mpz_class, mpz_class> sex_raw_fraction(const SexValue& v);

/// Nearest multiple of 60^-k, ties away from zero; exact when r 60^k is an
/// integer. k >= 0.
SexValue rational_to_sex(const BigRational& r, int k);

/// The multiple m/60^k closest to sqrt(n), decided entirely in integers:
/// m0 = isqrt(n 60^2k), then (2 m0 + 1)^2 against 4 n 60^2k. Perfect-square
/// n is a domain_error (the root is exactly representable; no search needed).
SexValue best_sex_approx(unsigned long long n, int k);

/// Same contract on the target 1/sqrt(n) = sqrt(n)/n.
SexValue best_sex_approx_recip(unsigned long long n, int k);

/// Exact product c * v, then rounded to k fractional digits.
SexValue sex_scale(const SexValue& v, unsigned long long c, int k);

struct HeronResult {
  std::vector<SexValue> iterates;  // starts with x0
  bool converged = false;          // reached a fixed point of the rounded map
};

/// x_{j+1} = round_k((x_j + n/x_j) / 2) with exact rational arithmetic
/// inside each step and rounding only at its end; stops at a fixed point or
/// after max_iter steps.
HeronResult heron_sqrt_sex(unsigned long long n, const SexValue& x0, int k,
                           int max_iter = 25);

}  // namespace wedge
