#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedge/rational.hpp"

namespace wedge {

/// A candidate (hypotenuse, side) integer pair for the impossible identity
/// H^2 = 2 S^2. The defect H^2 - 2 S^2 measures how far the pair misses it.
struct DescentPair {
  unsigned long long H = 1;
  unsigned long long S = 1;

  DescentPair() = default;
  DescentPair(unsigned long long h, unsigned long long s);

  long long defect() const;  // H^2 - 2 S^2

  friend bool operator==(const DescentPair&, const DescentPair&) = default;
};

/// (h even?, h^2 even?) -- the two are always equal, which is what the
/// exhaustive test asserts.
std::pair<bool, bool> parity_lemma(unsigned long long h);

/// (H, S) -> (S, H/2); requires even H, otherwise throws
/// descent_inapplicable carrying the odd witness. The defect transforms
/// exactly as k' = -k/2, so a defect-0 pair would descend forever.
DescentPair descent_step(const DescentPair& pair);

struct ScanReport {
  long long min_abs_defect = 0;
  DescentPair witness;  // largest pair attaining the minimum, in scan order
  unsigned long long pairs_scanned = 0;
};

/// Scans all 1 <= S < H <= limit for H^2 - 2 S^2 = 0; none exists, and the
/// report carries the minimum |defect| (1, a Pell pair, for limit >= 3)
/// with its witness. A defect-0 pair would be a falsification and throws
/// verification_error.
ScanReport no_solution_search(unsigned long long limit);

struct IrrationalityCertificate {
  unsigned long long n = 0;
  bool is_rational = false;
  unsigned long long root = 0;  // rational verdicts only: root^2 = n
  // irrational verdicts only:
  unsigned long long exhaustive_bound = 0;
  long long min_defect = 0;
  DescentPair witness;
  std::vector<std::string> narration;
};

/// Decides whether sqrt(n) is rational: the perfect-square root when there
/// is one, otherwise an irrationality certificate packaging the descent
/// narration (n = 2) or the lowest-terms argument (general n) together with
/// an exhaustive no-solution scan of H^2 - n S^2 up to the bound.
IrrationalityCertificate decide_sqrt_rational(unsigned long long n,
                                              unsigned long long bound = 10000);

/// Exact lower bound 1/(q (p + 2 q)) on |sqrt(2) - p/q|, valid for all
/// positive integers because |p^2 - 2 q^2| >= 1; the guarantee is
/// re-checked exactly before returning.
BigRational irrationality_gap(unsigned long long p, unsigned long long q);

}  // namespace wedge
