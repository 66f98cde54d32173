#include "wedge/sexagesimal.hpp"

#include <algorithm>
#include <cctype>

namespace wedge {

SexValue SexValue::make(int sign, std::vector<int> whole, std::vector<int> frac) {
  if (sign != 1 && sign != -1)
    throw domain_error("sexagesimal sign must be +1 or -1");
  for (int d : whole)
    if (d < 0 || d > 59)
      throw domain_error("sexagesimal digit out of range: " + std::to_string(d));
  for (int d : frac)
    if (d < 0 || d > 59)
      throw domain_error("sexagesimal digit out of range: " + std::to_string(d));

  auto lead = whole.begin();
  while (lead + 1 != whole.end() && *lead == 0) ++lead;
  whole.erase(whole.begin(), lead);
  if (whole.empty()) whole.push_back(0);
  while (!frac.empty() && frac.back() == 0) frac.pop_back();

  SexValue v;
  v.whole_ = std::move(whole);
  v.frac_ = std::move(frac);
  v.sign_ = v.is_zero() ? +1 : sign;
  return v;
}

SexValue parse_sex(const std::string& text) {
  auto fail = [&](const std::string& msg, std::size_t at) -> void {
    throw parse_error("bad sexagesimal '" + text + "': " + msg, at);
  };
  std::size_t i = 0;
  int sign = +1;
  if (i < text.size() && text[i] == '-') {
    sign = -1;
    ++i;
  }
  auto read_digit = [&]() -> int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t len = i - start;
    if (len == 0) fail("expected digit", start);
    if (len > 2) fail("digit longer than two characters", start);
    int v = std::stoi(text.substr(start, len));
    if (v > 59) fail("digit " + std::to_string(v) + " out of range", start);
    return v;
  };
  std::vector<int> whole, frac;
  whole.push_back(read_digit());
  while (i < text.size() && text[i] == ',') {
    ++i;
    whole.push_back(read_digit());
  }
  if (i < text.size() && text[i] == ';') {
    ++i;
    frac.push_back(read_digit());
    while (i < text.size() && text[i] == ',') {
      ++i;
      frac.push_back(read_digit());
    }
  }
  if (i != text.size()) fail("unexpected character", i);
  return SexValue::make(sign, std::move(whole), std::move(frac));
}

std::string format_sex(const SexValue& v) {
  std::string out = v.sgn() < 0 ? "-" : "";
  for (std::size_t i = 0; i < v.whole().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.whole()[i]);
  }
  if (!v.frac().empty()) {
    out += ';';
    for (std::size_t i = 0; i < v.frac().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v.frac()[i]);
    }
  }
  return out;
}

std::pair<mpz_class, mpz_class> sex_raw_fraction(const SexValue& v) {
  mpz_class acc = 0;
  for (int d : v.whole()) acc = acc * 60 + d;
  for (int d : v.frac()) acc = acc * 60 + d;
  mpz_class den = pow_int(60, v.frac().size());
  if (v.sgn() < 0) acc = -acc;
  return {acc, den};
}

BigRational sex_to_rational(const SexValue& v) {
  auto [num, den] = sex_raw_fraction(v);
  return BigRational(num, den);
}

namespace {

std::vector<int> base60_digits(mpz_class n) {
  std::vector<int> digits;
  if (n == 0) return {0};
  while (n > 0) {
    digits.push_back(static_cast<int>(mpz_class(n % 60).get_si()));
    n /= 60;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

SexValue from_scaled_integer(const mpz_class& m, int k) {
  mpz_class a = abs(m);
  mpz_class scale = pow_int(60, static_cast<unsigned long>(k));
  std::vector<int> whole = base60_digits(a / scale);
  mpz_class rem = a % scale;
  std::vector<int> frac(static_cast<std::size_t>(k), 0);
  for (int j = k - 1; j >= 0; --j) {
    frac[static_cast<std::size_t>(j)] = static_cast<int>(mpz_class(rem % 60).get_si());
    rem /= 60;
  }
  return SexValue::make(m < 0 ? -1 : +1, std::move(whole), std::move(frac));
}

}  // namespace

SexValue rational_to_sex(const BigRational& r, int k) {
  if (k < 0) throw domain_error("rational_to_sex needs k >= 0");
  mpz_class m = round_half_away(r * BigRational(pow_int(60, static_cast<unsigned long>(k))));
  return from_scaled_integer(m, k);
}

namespace {

void check_searchable(unsigned long long n, int k) {
  if (n == 0) throw domain_error("square root of zero is not searchable");
  if (k < 1) throw domain_error("best approximation needs k >= 1");
  if (is_perfect_square(mpz_class(static_cast<unsigned long>(n))))
    throw domain_error("n = " + std::to_string(n) +
                       " is a perfect square; its root is exact");
}

}  // namespace

SexValue best_sex_approx(unsigned long long n, int k) {
  check_searchable(n, k);
  mpz_class scale_sq = pow_int(60, 2 * static_cast<unsigned long>(k));
  mpz_class target = mpz_class(static_cast<unsigned long>(n)) * scale_sq;
  mpz_class m = isqrt(target);
  // m vs m+1: the midpoint test 4 target > (2m+1)^2 never ties (4 target is
  // even, the square odd)
  mpz_class mid = 2 * m + 1;
  if (4 * target > mid * mid) ++m;
  return from_scaled_integer(m, k);
}

SexValue best_sex_approx_recip(unsigned long long n, int k) {
  check_searchable(n, k);
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_class scale_sq = pow_int(60, 2 * static_cast<unsigned long>(k));
  mpz_class m = isqrt(mpz_class(scale_sq / nz));
  // target is 60^k / sqrt(n); m+1 wins iff (2m+1)^2 n < 4 60^2k, tie
  // impossible for non-square n
  mpz_class mid = 2 * m + 1;
  if (mid * mid * nz < 4 * scale_sq) ++m;
  return from_scaled_integer(m, k);
}

SexValue sex_scale(const SexValue& v, unsigned long long c, int k) {
  if (k < 0) throw domain_error("sex_scale needs k >= 0");
  BigRational product = sex_to_rational(v) * BigRational(mpz_class(static_cast<unsigned long>(c)));
  return rational_to_sex(product, k);
}

HeronResult heron_sqrt_sex(unsigned long long n, const SexValue& x0, int k,
                           int max_iter) {
  if (n == 0) throw domain_error("heron_sqrt_sex needs n >= 1");
  if (k < 1) throw domain_error("heron_sqrt_sex needs k >= 1");
  if (x0.sgn() < 0 || x0.is_zero())
    throw domain_error("heron_sqrt_sex needs x0 > 0");

  HeronResult result;
  result.iterates.push_back(x0);
  BigRational nr(mpz_class(static_cast<unsigned long>(n)));
  SexValue cur = x0;
  for (int it = 0; it < max_iter; ++it) {
    BigRational x = sex_to_rational(cur);
    BigRational next_exact = (x + nr / x) / BigRational(2);
    SexValue next = rational_to_sex(next_exact, k);
    if (next == cur) {
      result.converged = true;
      break;
    }
    result.iterates.push_back(next);
    cur = next;
  }
  return result;
}

}  // namespace wedge
