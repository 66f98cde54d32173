#include "wedge/proofs.hpp"

#include "wedge/quad.hpp"

namespace wedge {

namespace {

// with H, S, n below this cap, |H^2 - n S^2| at the scan's minimum and every
// descent-pair defect stay within long long
constexpr unsigned long long kScanCap = 2'000'000'000ULL;

__int128 defect_of(unsigned long long h, unsigned long long s,
                   unsigned long long n) {
  return static_cast<__int128>(h) * h - static_cast<__int128>(n) * s * s;
}

long long to_ll(__int128 v) { return static_cast<long long>(v); }

ScanReport min_defect_scan(unsigned long long n, unsigned long long limit) {
  if (limit < 2) throw domain_error("scan limit must be at least 2");
  if (limit > kScanCap || n > kScanCap)
    throw domain_error("scan limit out of supported range");

  ScanReport report;
  __int128 best = -1;
  for (unsigned long long h = 2; h <= limit; ++h) {
    for (unsigned long long s = 1; s < h; ++s) {
      __int128 d = defect_of(h, s, n);
      if (d < 0) d = -d;
      if (d == 0)
        throw verification_error(
            "no integer solution of H^2 = " + std::to_string(n) + " S^2",
            "defect at (H=" + std::to_string(h) + ", S=" + std::to_string(s) + ")",
            "0");
      if (best < 0 || d <= best) {
        best = d;
        report.witness = DescentPair(h, s);
      }
      ++report.pairs_scanned;
    }
  }
  report.min_abs_defect = to_ll(best);
  return report;
}

}  // namespace

DescentPair::DescentPair(unsigned long long h, unsigned long long s) : H(h), S(s) {
  if (h < 1 || s < 1) throw domain_error("descent pair needs H, S >= 1");
  if (h > kScanCap || s > kScanCap)
    throw domain_error("descent pair out of supported range");
}

long long DescentPair::defect() const { return to_ll(defect_of(H, S, 2)); }

std::pair<bool, bool> parity_lemma(unsigned long long h) {
  if (h < 1) throw domain_error("parity_lemma needs h >= 1");
  bool h_even = h % 2 == 0;
  mpz_class sq = mpz_class(static_cast<unsigned long>(h));
  sq *= sq;
  bool sq_even = mpz_even_p(sq.get_mpz_t()) != 0;
  return {h_even, sq_even};
}

DescentPair descent_step(const DescentPair& pair) {
  if (pair.H % 2 != 0) throw descent_inapplicable(pair.H);
  return DescentPair(pair.S, pair.H / 2);
}

ScanReport no_solution_search(unsigned long long limit) {
  return min_defect_scan(2, limit);
}

IrrationalityCertificate decide_sqrt_rational(unsigned long long n,
                                              unsigned long long bound) {
  if (n < 1) throw domain_error("decide_sqrt_rational needs n >= 1");
  IrrationalityCertificate cert;
  cert.n = n;
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_class r = isqrt(nz);
  if (r * r == nz) {
    cert.is_rational = true;
    cert.root = r.get_ui();
    return cert;
  }

  cert.is_rational = false;
  cert.exhaustive_bound = bound;
  ScanReport scan = min_defect_scan(n, bound);
  cert.min_defect = scan.min_abs_defect;
  cert.witness = scan.witness;
  if (n == 2) {
    cert.narration = {"H^2 = 2 S^2 assumed", "H even by parity lemma",
                      "descend to (S, H/2)", "contradicts lowest terms"};
  } else {
    std::string ns = std::to_string(n);
    cert.narration = {
        "p^2 = " + ns + " q^2 assumed with p/q in lowest terms",
        "q divides p^2 and gcd(p, q) = 1, so q = 1",
        ns + " = p^2 contradicts " + r.get_str() + "^2 < " + ns + " < " +
            mpz_class(r + 1).get_str() + "^2"};
  }
  return cert;
}

BigRational irrationality_gap(unsigned long long p, unsigned long long q) {
  if (p < 1 || q < 1) throw domain_error("irrationality_gap needs p, q >= 1");
  mpz_class pz(static_cast<unsigned long>(p)), qz(static_cast<unsigned long>(q));
  BigRational g(mpz_class(1), qz * (pz + 2 * qz));

  QuadValue root2 = QuadValue::sqrt_of(2);
  QuadValue diff = root2 - QuadValue::from_rational(BigRational(pz, qz), 2);
  QuadValue gap = (sign(diff) < 0 ? -diff : diff) -
                  QuadValue::from_rational(g, 2);
  if (sign(gap) < 0)
    throw verification_error("|sqrt(2) - p/q| >= 1/(q(p+2q))",
                             "p = " + std::to_string(p), "q = " + std::to_string(q));
  return g;
}

}  // namespace wedge
