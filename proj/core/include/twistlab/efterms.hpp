#pragma once
// Assembly of the two-sided zero-count identity at scale L = log(sqrt(D) X):
// conductor, Gamma-factor, even-prime and odd-prime terms, the zero side with
// certified truncation tails, the family density report with its closed-form
// constant block, and the single-field (zeta times imaginary quadratic L)
// variant with pole/Siegel terms. Every analytic term ships two independent
// evaluators so each can serve as the other's oracle.

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "twistlab/family.hpp"
#include "twistlab/lfun.hpp"
#include "twistlab/testfn.hpp"

namespace twistlab {

// The natural zero scale for conductor ~ D X^2 factoring into two pieces of
// conductor ~ sqrt(D) X.
double scale_L(i64 D, double X);

struct TermPair {
  double primary = 0.0;    // reference evaluator (exact sum where available)
  double secondary = 0.0;  // independent evaluator (quadrature form)
  double gap = 0.0;        // primary - secondary
};

// First right-side term: family average of log(D f^2 / pi^2)/L * ghat(0),
// with the closed-form approximation (2 + log(16/(pi^2 e^2))/L) * ghat(0).
struct ConductorTerm {
  double exact = 0.0;
  double closed_form = 0.0;
  double gap = 0.0;        // exact - closed_form
  double gap_scale = 0.0;  // ghat0 / (sqrt(X) L), the expected gap size
};
ConductorTerm conductor_term(const FamilySpec& fam, const TestFunctionPair& tf);
// log(D f^2 / pi^2)/L * ghat(0) for one twist.
double conductor_term_single(i64 D, i64 f, const TestFunctionPair& tf, double L);

// Gamma-factor term (1/L) Int g(tau) Re[psi(1/4 + i pi tau/L) +
// psi(3/4 + i pi tau/L)] dtau. primary: direct tau-integral with the
// logarithmic part resummed through ghat; secondary: the rewrite
// (-2C - log 64) ghat(0)/L + (1/L) Int_0^inf (ghat(0) - ghat(y/L))/sinh(y/2).
TermPair gamma_term(double L, const TestFunctionPair& tf);

// Even prime powers, part 1: -(2/L) sum_n Lambda_D(n)/n ghat(2 log n / L)
// where Lambda_D(p^k) = 2 log p off D and log q on q | D. The sum is finite
// (n < exp(sigma L / 2)). Secondary evaluator: -g(0) + (2/L) Int g(tau)
// Re[2 zeta'/zeta + sum_q log q q^{-s}/(1-q^{-s})](1 + 4 pi i tau/L) dtau.
double s_even1_exact(const Discriminant& D, double L, const TestFunctionPair& tf,
                     const PrimeTable& pt);
double s_even1_integral(const Discriminant& D, double L,
                        const TestFunctionPair& tf, double tau_max,
                        double* tail_cert = nullptr);
TermPair s_even1(const Discriminant& D, double L, const TestFunctionPair& tf,
                 const PrimeTable& pt, double tau_max = 800.0);

// Even prime powers, part 2: exact family double sum
// (4/(X* L)) sum_f sum_{p|f} sum_l log p / p^l ghat(2 l log p / L) against the
// smooth form (4/L) Int g(tau) Re A'(2 pi i tau / L) dtau.
double s_even2_exact(const FamilySpec& fam, const TestFunctionPair& tf,
                     const PrimeTable& pt);
// exclude_primes (the ramified q | D, which divide no member) are removed
// from A' when given; the closed-form constant comparisons use the full A'.
double s_even2_smooth(double L, const TestFunctionPair& tf, const PrimeTable& pt,
                      double tau_max, double* tail_cert = nullptr,
                      const std::vector<i64>* exclude_primes = nullptr);
TermPair s_even2(const FamilySpec& fam, const TestFunctionPair& tf,
                 const PrimeTable& pt, double tau_max = 200.0);

// A'(r) = sum_p log p / ((p+1)(p^{1+2r} - 1)) on Re r >= 0, evaluated as a
// direct sum over p <= 1e4 plus an exact prime-log-zeta restoration of the
// tail (absolute error ~1e-12). A'(0) = -zeta'/zeta(2) = 0.569961...
cplx a_prime(cplx r, const PrimeTable& pt);

// Rem(r) = A'(r) + zeta'/zeta(2 + 2r), in closed form as
// sum_p p log p (1 - p^{2r}) / ((p+1)(1 - p^{2r+1})(1 - p^{2r+2})), summed
// over p <= 1e5 (tail below 1e-9). Requires pt.limit() >= 1e5.
cplx rem_closed(cplx r, const PrimeTable& pt);
// The same quantity assembled from a_prime and zeta_logderiv (the oracle).
cplx rem_assembled(cplx r, const PrimeTable& pt);
// Real part of the single-prime closed-form term at r = it; vanishes whenever
// t log p / (2 pi) is an integer.
double rem_prime_term(i64 p, double t);

// Odd prime powers for a genus character psi = (d1, d2):
// -(2/(X* L)) sum_{p,l} lambda(p) psi(p) log p p^{-(2l+1)/2}
//   ghat((2l+1) log p / L) sum_f chi_f(p), a finite exact sum.
double s_odd_psi(const GenusCharacter& psi, const FamilySpec& fam,
                 const TestFunctionPair& tf, const PrimeTable& pt);

// Integer-arithmetic witness that sum_psi s_odd_psi vanishes identically:
// for every prime in the support window, lambda(p) * sum_psi psi(p) *
// char_sum(p) must be exactly 0.
struct OddCancellation {
  bool exact_zero = true;
  i64 primes_in_window = 0;
  std::vector<i64> failures;
};
OddCancellation s_odd_character_cancellation(const FamilySpec& fam,
                                             const TestFunctionPair& tf,
                                             const PrimeTable& pt);

// Memoized zero ordinates per discriminant; recomputed (never extrapolated)
// when a larger height is requested.
class ZeroCache {
 public:
  // Ordinates 0 < gamma <= T_stored with T_stored >= T; computes via
  // find_zeros on a miss and throws if the argument-principle count fails.
  const std::vector<double>& ordinates(i64 d, double T);
  void put(i64 d, double T, std::vector<double> ordinates);
  std::optional<double> stored_height(i64 d) const;
  // Full contents (d, stored height, ordinates), for on-disk persistence.
  std::map<i64, std::pair<double, std::vector<double>>> snapshot() const;

 private:
  struct Entry {
    double T = 0.0;
    std::vector<double> g;
  };
  std::map<i64, Entry> map_;
};

// Certified bound on 2 sum_{gamma > T} g(gamma L / 2 pi) for one L-function
// of conductor |d|, from |g(y)| <= c/y^2 and a conservative zero count.
double zero_tail_bound(const TestFunctionPair& tf, double L, double T, i64 d_abs);

struct ZeroSideResult {
  double value = 0.0;  // 2 sum_{0 < gamma <= T} g(gamma L / 2 pi)
  double tail = 0.0;   // certified truncation bound
  i64 count = 0;       // ordinates used
};
ZeroSideResult zero_side_single(i64 d, const TestFunctionPair& tf, double L,
                                double T, ZeroCache* cache = nullptr);

struct EFReport {
  double L = 0.0, sigma = 0.0, T = 0.0;
  // Right-side terms, each carrying its own sign (odd is the signed
  // right-side odd-prime contribution in every variant).
  double conductor = 0.0, gamma = 0.0, even1 = 0.0, even2 = 0.0, odd = 0.0;
  double pole_siegel = 0.0;
  double zero_side = 0.0;
  i64 zero_count = 0;
  double residual = 0.0;  // zero_side - (conductor+gamma+even1+even2+odd+pole_siegel)
  double tail_zero = 0.0, tail_quadrature = 0.0, tail_total = 0.0;
  bool balanced = false;  // |residual| <= tail_total
  std::optional<double> delta;  // real-zero gap used in pole_siegel, if any
  std::vector<i64> per_member_zero_counts;  // family variant, aligned with members
};

// Two-sided balance of the family identity with exact prime-side terms.
// with_zeros = false fills only the right-side terms (cheap psi comparisons).
EFReport ef_balance(const FamilySpec& fam, const GenusCharacter& psi,
                    const TestFunctionPair& tf, double T, const PrimeTable& pt,
                    ZeroCache* cache = nullptr, bool with_zeros = true);

struct DensityReport {
  EFReport ef;
  i64 xstar = 0;
  // Closed-form constant block 2 sum_q log q/(q -+ 1) -+ 4 zeta'/zeta(2)
  // - log(4 pi^2 e^2) + 2C in all four sign/offset conventions.
  double block_qminus_apos = 0.0;  // q-1 offset, -4 zeta'/zeta(2) (derivation)
  double block_qminus_aneg = 0.0;  // q-1 offset, +4 zeta'/zeta(2) (as printed)
  double block_qplus_apos = 0.0;
  double block_qplus_aneg = 0.0;
  // Adjudication of the A'-term sign by the exact even2 double sum.
  double even2_gap_apos = 0.0;  // |even2_exact - (-4 zeta'/zeta(2)) ghat0/L|
  double even2_gap_aneg = 0.0;
  bool even2_matches_positive = false;  // true: exact sum sits on -4 zeta'/zeta(2)
  double density_prediction = 0.0;  // (2 + block/L) ghat0 - g(0) + odd
  double sin_kernel = 0.0;          // functional evaluating 2 ghat0 - g(0)
};

DensityReport ef_family_density(const FamilySpec& fam, const GenusCharacter& psi,
                                const TestFunctionPair& tf, double T,
                                const PrimeTable& pt, ZeroCache* cache = nullptr,
                                bool with_zeros = true);

// Two-sided balance for zeta(s) L(s, chi_{-D}) at scale L = log(sqrt(D) X):
// zero side plus the lambda-weighted odd-prime sum against conductor, Gamma,
// the zeta-side integral, and the pole/Siegel term. delta comes from
// real_zero_scan unless synthetic_delta is supplied (scaling experiments);
// with no real zero the Siegel part is dropped and the pole part remains.
EFReport dedekind_ef(i64 D, const TestFunctionPair& tf, double X_scale, double T,
                     const PrimeTable& pt,
                     std::optional<double> synthetic_delta = std::nullopt,
                     ZeroCache* cache = nullptr, double tau_max = 1500.0);

// Resonance curves on the edge of the critical strip: red and blue are the
// real parts of the two log-derivative ratios at 1 + 2it, green the points
// t = gamma/2 for ordinates of the imaginary quadratic L-function. The grid
// starts at t = step (both curves blow up at t = 0).
struct ResonancePoint {
  double t = 0.0, red = 0.0, blue = 0.0;
};
struct ResonanceData {
  std::vector<ResonancePoint> points;
  std::vector<double> green;
};
ResonanceData resonance_curve(i64 D, double tmax, double step,
                              const PrimeTable& pt);

// Comparison grid for the remainder term: Re zeta'/zeta(1+2it) (red),
// -Re zeta'/zeta(2+2it) (blue), Re Rem(it) (green); red starts at t = step.
struct RemFigRow {
  double t = 0.0, red = 0.0, blue = 0.0, green = 0.0;
};
std::vector<RemFigRow> rem_figure(double tmax, double step, const PrimeTable& pt);

}  // namespace twistlab
