#include "wedge/rational.hpp"

#include <cctype>
#include <ostream>

namespace wedge {

void BigRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g = gcd(num_, den_);  // gcd(0, d) = d, so 0/d becomes 0/1
  num_ /= g;
  den_ /= g;
}

BigRational BigRational::parse(const std::string& text) {
  auto fail = [&](const std::string& msg, std::size_t at) -> void {
    throw parse_error("bad rational '" + text + "': " + msg, at);
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail("expected digits", i);
  mpz_class num(text.substr(num_begin, i - num_begin), 10);
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) fail("expected digits after '/'", i);
    den = mpz_class(text.substr(den_begin, i - den_begin), 10);
    if (den == 0) fail("zero denominator", den_begin);
  }
  if (i != text.size()) fail("unexpected character", i);
  if (neg) num = -num;
  return BigRational(std::move(num), std::move(den));
}

std::string BigRational::str() const {
  std::string s = num_.get_str();
  if (den_ != 1) {
    s += '/';
    s += den_.get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) {
  return os << x.str();
}

int compare(const BigRational& x, const BigRational& y) {
  return cmp(x.num() * y.den(), y.num() * x.den());
}

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw domain_error("isqrt of negative value " + n.get_str());
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class round_half_away(const BigRational& x) {
  // floor((2|num| + den) / (2 den)), then the sign back on
  mpz_class q = (2 * abs(x.num()) + x.den()) / (2 * x.den());
  return x.sign() < 0 ? mpz_class(-q) : q;
}

mpz_class pow_int(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::string approx_decimal(const BigRational& x, int k) {
  if (k < 1) throw domain_error("approx_decimal needs k >= 1");
  mpz_class scale = pow_int(10, static_cast<unsigned long>(k));
  mpz_class m = round_half_away(x * BigRational(scale));
  bool neg = m < 0;
  mpz_class a = abs(m);
  mpz_class whole = a / scale;
  std::string frac = mpz_class(a % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(k) - frac.size(), '0');
  std::string out = neg ? "-" : "";
  out += whole.get_str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace wedge
