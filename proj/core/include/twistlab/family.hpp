#pragma once
// Twist-family enumeration over [X, 2X), exact character sums over the
// family with a Moebius/divisor rearrangement, the empirical character-sum
// dashboard, the two admissibility regime checkers, and the genus-character
// orthogonality verification.

#include <optional>
#include <vector>

#include "twistlab/arith.hpp"
#include "twistlab/quadforms.hpp"

namespace twistlab {

struct FamilySpec {
  Discriminant D;             // stores -D (negative fundamental)
  i64 X = 0;
  std::vector<i64> members;   // signed fundamental f, gcd(f, D) = 1, X <= |f| < 2X
  i64 xstar = 0;              // member count
  double asymptotic = 0.0;    // (6/pi^2) prod_{q|D} (1 - 1/(q+1)) X
  double ratio = 0.0;         // xstar / asymptotic
};

// Exact enumeration via a squarefree sieve plus the fundamental-discriminant
// residue patterns (odd f = +-k, f = +-4m, f = +-8m').
FamilySpec enumerate_family(i64 D, i64 X, const PrimeTable& pt);

// Exact sum_{f in family} chi_f(p).
i64 char_sum(i64 p, const FamilySpec& fam);

// The same sum recomputed through the Moebius/divisor rearrangement over the
// three residue branches; must equal char_sum exactly.
i64 char_sum_moebius(i64 p, const FamilySpec& fam);

// Empirical inequality dashboard: |char_sum| against
// tau(D) (X^{1-eps^2} + X^{1/2} p^{1/8+eps/2}) with implied constant 1.
struct BurgessRecord {
  i64 p = 0;
  i64 sum = 0;
  double bound = 0.0;
  double ratio = 0.0;  // |sum| / bound
  bool within = true;
};
std::vector<BurgessRecord> burgess_dashboard(const FamilySpec& fam, i64 pmax,
                                             double eps, const PrimeTable& pt);

struct RegimeReport {
  double sigma = 0.0;
  i64 D = 0;
  i64 X = 0;
  // Algebraic regime: X below D^{1/(sigma e) - 1/2}/4 with sigma < 2/e.
  bool algebra_ok = false;
  double x_max_algebra = 0.0;
  bool no_split_certificate = false;  // (sqrt(D) X)^sigma <= (D/4)^{1/e}
  // Analytic regime: sigma < 4/3, log_D X inside the admissible window,
  // and a positive epsilon <= 1/4 with D^{sigma/2} < X^{4 - sigma - 16 eps}.
  bool analysis_ok = false;
  double logD_X = 0.0;
  double window_lo = 0.0, window_hi = 0.0;
  std::optional<double> epsilon;
};

RegimeReport algebra_regime(i64 D, i64 e, double sigma, i64 X);
RegimeReport analysis_regime(i64 D, i64 X, double sigma);
// Both fragments merged (e from the class group of discriminant -D).
RegimeReport regime_report(i64 D, i64 X, double sigma, i64 e);

// For every non-inert p <= pmax: the character sum over genus characters at
// the representing class is 2^(omega-1) on the principal genus and 0 off it,
// in exact integer arithmetic.
struct OrthogonalityRecord {
  i64 D = 0;
  i64 primes_checked = 0;
  bool pass = true;
  std::vector<i64> failures;
};
OrthogonalityRecord orthogonality_sum(i64 D, i64 pmax, const PrimeTable& pt);

}  // namespace twistlab
