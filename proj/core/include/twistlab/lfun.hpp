#pragma once
// High-accuracy special functions: Hurwitz zeta and its s-derivative,
// digamma, log-gamma, Dirichlet L-functions of real primitive characters,
// critical-line zero location with an argument-principle cross-check, a
// real-zero scan on (1/2, 1), and the two resonance log-derivatives.

#include <complex>
#include <optional>
#include <vector>

#include "twistlab/arith.hpp"

namespace twistlab {

using cplx = std::complex<double>;

// Euler-Maclaurin evaluation, absolute error <= 1e-12 for Re s >= -1,
// |Im s| <= 100 (internally verified by the first omitted correction,
// with automatic refinement). Requires a in (0, 1] and s != 1.
cplx hurwitz_zeta(cplx s, double a);
cplx hurwitz_zeta_ds(cplx s, double a);  // partial derivative in s

// Gamma'/Gamma via recurrence into Re >= 10 plus the asymptotic series.
// Throws at nonpositive integers.
cplx digamma(cplx s);

// log Gamma via the same shift; continuous on paths staying in Re z > 0,
// and exp(log_gamma(z)) = Gamma(z) everywhere off the poles.
cplx log_gamma(cplx z);

// zeta'/zeta(s) assembled from hurwitz_zeta(s, 1) and its derivative.
cplx zeta_logderiv(cplx s);

// chi_d(m) for m in [0, |d|); d = 1 gives the constant 1.
std::vector<int> character_table(i64 d);

// L(s, chi_d) for fundamental d (d = 1 is the Riemann zeta), via the batched
// Dirichlet sum with per-residue Euler-Maclaurin tails. |d| <= 1e4.
cplx dirichlet_L(cplx s, i64 d);
cplx dirichlet_L_ds(cplx s, i64 d);
cplx L_logderiv(cplx s, i64 d);  // throws if |L| < 1e-13 (near a zero)

// Value and s-derivative in one pass, reusing a precomputed character table.
struct LPair {
  cplx L, Lds;
};
LPair dirichlet_L_pair(cplx s, i64 d, const std::vector<int>& chi, bool with_ds);

// Completed function: (|d|/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi_d) with
// a = 0, 1 by parity; for d = 1 the entire s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s).
cplx completed_L(cplx s, i64 d);

struct ZeroRecord {
  i64 d = 1;
  int index = 0;        // 1-based ordinal
  double gamma = 0.0;   // positive ordinate
  double width = 0.0;   // bracket half-width after bisection (<= 1e-9)
};

struct ZeroScan {
  std::vector<ZeroRecord> zeros;  // all 0 < gamma <= T
  long argument_count = 0;        // zeros in the rectangle, counted by winding
  bool count_consistent = false;  // argument_count == 2 * zeros.size()
  double t_prime = 0.0;           // contour height, nudged between ordinates
};

// All ordinates 0 < gamma <= T of the completed L-function, by sign changes
// of the phase-rotated real function on the critical line (grid step 0.01,
// bisection to width 1e-9), cross-checked by the argument principle over
// [-1/2, 3/2] x [-T', T']. On a count mismatch the grid is refined x10 once;
// a persistent mismatch is surfaced via count_consistent = false.
ZeroScan find_zeros(i64 d, double T);

struct LSRecord {
  i64 D = 0;
  std::optional<double> delta;  // 1 - beta for the largest real zero in (1/2, 1)
};

// Scans L(x, chi_{-D}) on (1/2, 1) at step 1e-4 and refines any sign change.
LSRecord real_zero_scan(i64 D);

// 2 zeta'/zeta(s) + sum_{q|D} log q q^{-s}/(1-q^{-s}) - 2 zeta'/zeta(s+1).
cplx zeta_D_logderiv(cplx s, const Discriminant& D);

// zeta'/zeta(s) + 2[zeta'/zeta(2s) + sum_{q|D} log q q^{-2s}/(1-q^{-2s})]
//   - 2 zeta'/zeta(s+1) - L'/L(s, chi_{-D}).
cplx zeta_LS_logderiv(cplx s, const Discriminant& D);

}  // namespace twistlab
