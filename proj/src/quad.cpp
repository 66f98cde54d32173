#include "wedge/quad.hpp"

namespace wedge {

QuadValue::QuadValue(BigRational a, BigRational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 1) throw domain_error("radicand must be positive, got " + std::to_string(d));
  if (is_perfect_square(mpz_class(d)))
    throw domain_error("radicand " + std::to_string(d) + " is a perfect square");
}

namespace {

void require_same_radicand(const QuadValue& x, const QuadValue& y) {
  if (x.d() != y.d())
    throw domain_error("mixed radicands: sqrt(" + std::to_string(x.d()) +
                       ") vs sqrt(" + std::to_string(y.d()) + ")");
}

}  // namespace

QuadValue operator+(const QuadValue& x, const QuadValue& y) {
  require_same_radicand(x, y);
  return QuadValue(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadValue operator-(const QuadValue& x, const QuadValue& y) {
  require_same_radicand(x, y);
  return QuadValue(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
  require_same_radicand(x, y);
  BigRational d(x.d_);
  return QuadValue(x.a_ * y.a_ + d * x.b_ * y.b_,
                   x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

QuadValue operator/(const QuadValue& x, const QuadValue& y) {
  require_same_radicand(x, y);
  if (y.is_zero()) throw arithmetic_error("quadratic division by zero");
  BigRational n = y.norm();  // nonzero: d is not a perfect square
  QuadValue t = x * y.conjugate();
  return QuadValue(t.a_ / n, t.b_ / n, x.d_);
}

std::string QuadValue::str() const {
  return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

int sign(const QuadValue& x) {
  int sa = x.a().sign();
  int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: |a| vs |b| sqrt(d), i.e. a^2 vs d b^2
  int c = compare(x.a() * x.a(), BigRational(x.d()) * x.b() * x.b());
  if (c == 0)
    throw domain_error("sqrt(" + std::to_string(x.d()) + ") compared rational");
  return c > 0 ? sa : sb;
}

mpz_class floor_int(const QuadValue& x) {
  // write x as (P + R sqrt(d)) / Q with integers P, R and Q > 0
  const mpz_class& qa = x.a().den();
  const mpz_class& qb = x.b().den();
  mpz_class
      Q = qa * qb,
      P = x.a().num() * qb,
      R = x.b().num() * qa;
  mpz_class rd = R * R * x.d();
  mpz_class s = isqrt(rd);
  mpz_class t;  // floor(R sqrt(d))
  if (R >= 0)
    t = s;
  else
    t = (s * s == rd) ? mpz_class(-s) : mpz_class(-s - 1);
  mpz_class n;
  mpz_class pt = P + t;
  mpz_fdiv_q(n.get_mpz_t(), pt.get_mpz_t(), Q.get_mpz_t());
  // x lies in [(P+t)/Q, (P+t+1)/Q), an interval of width 1/Q <= 1, so n is
  // floor(x) or one below it
  while (sign(x - QuadValue::from_rational(BigRational(n + 1), x.d())) >= 0) ++n;
  return n;
}

std::string approx_decimal(const QuadValue& x, int k) {
  if (k < 1) throw domain_error("approx_decimal needs k >= 1");
  if (x.is_rational()) return approx_decimal(x.a(), k);
  int sg = sign(x);
  QuadValue ax = sg < 0 ? -x : x;
  mpz_class scale = pow_int(10, static_cast<unsigned long>(k));
  // round half away from zero: floor(|x| 10^k + 1/2)
  QuadValue scaled(ax.a() * BigRational(scale) + BigRational(mpz_class(1), mpz_class(2)),
                   ax.b() * BigRational(scale), x.d());
  mpz_class m = floor_int(scaled);
  std::string frac = mpz_class(m % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(k) - frac.size(), '0');
  std::string out = (sg < 0 && m != 0) ? "-" : "";
  out += mpz_class(m / scale).get_str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace wedge
