#include "twistlab/efterms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twistlab/quadrature.hpp"

namespace twistlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEuler = 0.577215664901532860606512090082402431;

// Largest prime-power exponent window: p^k contributes iff k log p < sigma L.
void require_prime_cover(const PrimeTable& pt, double sigmaL) {
  if (sigmaL >= std::log(static_cast<double>(pt.limit()) + 1.0))
    throw std::invalid_argument(
        "prime table does not cover the ghat support window");
}

// c with g(y) <= c / y^2 for all y > 0.
double quadratic_decay_constant(const TestFunctionPair& tf) {
  if (tf.family == "fejer") return 1.0 / (kPi * kPi * tf.sigma);
  return tf.tail_constant;
}

// sum_{q | D} log q * q^{-s} / (1 - q^{-s}).
cplx ramified_logderiv_sum(const Discriminant& D, cplx s) {
  cplx acc = 0.0;
  for (i64 q : D.prime_divisors) {
    cplx qs = std::exp(-s * std::log(static_cast<double>(q)));
    acc += std::log(static_cast<double>(q)) * qs / (1.0 - qs);
  }
  return acc;
}

// Prime log-zeta sum_p log p p^{-s} for Re s > 1, via Moebius inversion of
// -zeta'/zeta(ms); terms below 2^{-60} are dropped.
cplx prime_log_zeta(cplx s, const PrimeTable& pt) {
  cplx acc = 0.0;
  for (i64 m = 1; static_cast<double>(m) * s.real() <= 60.0; ++m) {
    int mu = moebius(m, pt);
    if (!mu) continue;
    acc -= static_cast<double>(mu) *
           zeta_logderiv(static_cast<double>(m) * s);
  }
  return acc;
}

// Closed-form remainder sum truncated at p <= pmax.
cplx rem_truncated(cplx r, const PrimeTable& pt, i64 pmax) {
  cplx acc = 0.0;
  for (i64 p : pt.primes()) {
    if (p > pmax) break;
    double dp = static_cast<double>(p);
    double lp = std::log(dp);
    cplx w = std::exp(2.0 * r * lp);  // p^{2r}
    acc += dp * lp * (1.0 - w) /
           ((dp + 1.0) * (1.0 - dp * w) * (1.0 - dp * dp * w));
  }
  return acc;
}

// A'(r) through the remainder decomposition with a short prime cutoff;
// used only inside smooth-term quadratures where ~1e-6 accuracy suffices.
cplx a_prime_fast(cplx r, const PrimeTable& pt) {
  return rem_truncated(r, pt, 2000) - zeta_logderiv(2.0 + 2.0 * r);
}

// int_R g(tau) log|tau| dtau for compactly supported even ghat:
//   -(C + log 2 pi) ghat(0) - int_0^max(1,sigma) (ghat(u) - ghat(0) 1_{u<=1}) du/u.
double g_log_moment(const TestFunctionPair& tf) {
  double sig = tf.sigma;
  double inner = std::min(sig, 1.0);
  double J = integrate([&](double u) { return (tf.ghat(u) - tf.ghat0) / u; },
                       0.0, inner, 1e-12)
                 .value;
  if (sig < 1.0)
    J += tf.ghat0 * std::log(sig);  // ghat vanishes on (sigma, 1]
  else if (sig > 1.0)
    J += integrate([&](double u) { return tf.ghat(u) / u; }, 1.0, sig, 1e-12)
             .value;
  return -(kEuler + std::log(2.0 * kPi)) * tf.ghat0 - J;
}

}  // namespace

double scale_L(i64 D, double X) {
  if (D <= 0 || X <= 0.0) throw std::invalid_argument("scale_L: D, X > 0");
  double L = std::log(std::sqrt(static_cast<double>(D)) * X);
  if (L <= 0.0) throw std::invalid_argument("scale_L: sqrt(D) X must exceed 1");
  return L;
}

ConductorTerm conductor_term(const FamilySpec& fam, const TestFunctionPair& tf) {
  if (fam.xstar == 0) throw std::invalid_argument("conductor_term: empty family");
  i64 D = -fam.D.d;
  double L = scale_L(D, static_cast<double>(fam.X));
  double mean_logf = 0.0;
  for (i64 f : fam.members) mean_logf += std::log(std::abs(static_cast<double>(f)));
  mean_logf /= static_cast<double>(fam.xstar);
  ConductorTerm c;
  c.exact = tf.ghat0 / L *
            (std::log(static_cast<double>(D) / (kPi * kPi)) + 2.0 * mean_logf);
  c.closed_form =
      (2.0 + std::log(16.0 / (kPi * kPi * std::exp(2.0))) / L) * tf.ghat0;
  c.gap = c.exact - c.closed_form;
  c.gap_scale = tf.ghat0 / (std::sqrt(static_cast<double>(fam.X)) * L);
  return c;
}

double conductor_term_single(i64 D, i64 f, const TestFunctionPair& tf, double L) {
  double df2 = static_cast<double>(D) * static_cast<double>(f) *
               static_cast<double>(f);
  return std::log(df2 / (kPi * kPi)) / L * tf.ghat0;
}

TermPair gamma_term(double L, const TestFunctionPair& tf) {
  if (L <= 0.0) throw std::invalid_argument("gamma_term: L > 0 required");
  TermPair out;
  // Rewrite evaluator: digamma(1/4) + digamma(3/4) = -2C - log 64, plus the
  // sinh integral with the exact tail -2 ghat(0) log tanh(sigma L / 4)
  // (ghat vanishes beyond sigma L, where the primitive is 2 log tanh(y/4)).
  double sL = tf.sigma * L;
  double body = integrate(
                    [&](double y) {
                      return (tf.ghat0 - tf.ghat(y / L)) / std::sinh(0.5 * y);
                    },
                    0.0, sL, 1e-12)
                    .value;
  double tail = -2.0 * tf.ghat0 * std::log(std::tanh(0.25 * sL));
  out.secondary =
      ((-2.0 * kEuler - std::log(64.0)) * tf.ghat0 + body + tail) / L;

  // Direct evaluator: split off the 2 log(pi tau / L) growth, which is
  // integrated exactly against g via the log-moment identity.
  auto diff = [&](double tau) {
    cplx ix(0.0, kPi * tau / L);
    double re = (digamma(0.25 + ix) + digamma(0.75 + ix)).real();
    return tf.g(tau) * (re - 2.0 * std::log(kPi * tau / L));
  };
  double tau_max = (tf.family == "fejer") ? 300.0 : 60.0;
  double I1 = integrate(diff, 0.0, 1.0, 1e-12).value;
  int n = static_cast<int>(std::ceil((tau_max - 1.0) * 4.0 * std::max(1.0, tf.sigma)));
  I1 += integrate_panels(diff, 1.0, tau_max, n, 1e-10).value;
  double I2 = g_log_moment(tf) + tf.ghat0 * std::log(kPi / L);
  out.primary = (2.0 / L) * (I1 + I2);
  out.gap = out.primary - out.secondary;
  return out;
}

double s_even1_exact(const Discriminant& D, double L, const TestFunctionPair& tf,
                     const PrimeTable& pt) {
  double half = 0.5 * tf.sigma * L;
  require_prime_cover(pt, half);
  double nmax = std::exp(half);
  double sum = 0.0;
  for (i64 p : pt.primes()) {
    if (static_cast<double>(p) >= nmax) break;
    bool ram = std::find(D.prime_divisors.begin(), D.prime_divisors.end(), p) !=
               D.prime_divisors.end();
    double lp = std::log(static_cast<double>(p));
    double lambda = ram ? lp : 2.0 * lp;
    double n = static_cast<double>(p);
    for (int k = 1; k * lp < half; ++k, n *= static_cast<double>(p))
      sum += lambda / n * tf.ghat(2.0 * k * lp / L);
  }
  return -2.0 / L * sum;
}

double s_even1_integral(const Discriminant& D, double L,
                        const TestFunctionPair& tf, double tau_max,
                        double* tail_cert) {
  auto f = [&](double tau) {
    cplx s(1.0, 4.0 * kPi * tau / L);
    cplx v = 2.0 * zeta_logderiv(s) + ramified_logderiv_sum(D, s);
    return tf.g(tau) * v.real();
  };
  int n = static_cast<int>(std::ceil(tau_max / 0.25));
  double I = integrate_panels(f, 0.0, tau_max, n, 1e-8).value;
  if (tail_cert) {
    double kd = 10.0;
    for (i64 q : D.prime_divisors)
      kd += 2.0 * std::log(static_cast<double>(q)) / (static_cast<double>(q) - 1.0);
    *tail_cert = 4.0 / L * quadratic_decay_constant(tf) *
                 (2.0 * (std::log(2.0 * tau_max / L) + 1.0) + kd) / tau_max;
  }
  return -tf.g(0.0) + 4.0 / L * I;
}

TermPair s_even1(const Discriminant& D, double L, const TestFunctionPair& tf,
                 const PrimeTable& pt, double tau_max) {
  TermPair out;
  out.primary = s_even1_exact(D, L, tf, pt);
  out.secondary = s_even1_integral(D, L, tf, tau_max);
  out.gap = out.primary - out.secondary;
  return out;
}

double s_even2_exact(const FamilySpec& fam, const TestFunctionPair& tf,
                     const PrimeTable& pt) {
  if (fam.xstar == 0) throw std::invalid_argument("s_even2_exact: empty family");
  i64 D = -fam.D.d;
  double L = scale_L(D, static_cast<double>(fam.X));
  double half = 0.5 * tf.sigma * L;
  double sum = 0.0;
  for (i64 f : fam.members) {
    for (auto [p, e] : factorize(std::abs(f), pt)) {
      double lp = std::log(static_cast<double>(p));
      double pl = static_cast<double>(p);
      for (int l = 1; l * lp < half; ++l, pl *= static_cast<double>(p))
        sum += lp / pl * tf.ghat(2.0 * l * lp / L);
    }
  }
  return 4.0 / (static_cast<double>(fam.xstar) * L) * sum;
}

double s_even2_smooth(double L, const TestFunctionPair& tf, const PrimeTable& pt,
                      double tau_max, double* tail_cert,
                      const std::vector<i64>* exclude_primes) {
  auto f = [&](double tau) {
    cplx r(0.0, 2.0 * kPi * tau / L);
    cplx v = a_prime_fast(r, pt);
    if (exclude_primes)
      for (i64 q : *exclude_primes) {
        double dq = static_cast<double>(q);
        double lq = std::log(dq);
        v -= lq / ((dq + 1.0) * (std::exp((1.0 + 2.0 * r) * lq) - 1.0));
      }
    return tf.g(tau) * v.real();
  };
  int n = static_cast<int>(std::ceil(tau_max / 0.25));
  double I = integrate_panels(f, 0.0, tau_max, n, 1e-8).value;
  if (tail_cert)
    *tail_cert = 8.0 / L *
                 (0.57 * quadratic_decay_constant(tf) / tau_max +
                  3e-7 * tf.ghat0);
  return 8.0 / L * I;
}

TermPair s_even2(const FamilySpec& fam, const TestFunctionPair& tf,
                 const PrimeTable& pt, double tau_max) {
  i64 D = -fam.D.d;
  double L = scale_L(D, static_cast<double>(fam.X));
  TermPair out;
  out.primary = s_even2_exact(fam, tf, pt);
  out.secondary =
      s_even2_smooth(L, tf, pt, tau_max, nullptr, &fam.D.prime_divisors);
  out.gap = out.primary - out.secondary;
  return out;
}

cplx a_prime(cplx r, const PrimeTable& pt) {
  constexpr i64 kCutoff = 10000;
  constexpr int kOrder = 4;  // truncation of the (j, k) expansion for p > cutoff
  if (pt.limit() < kCutoff)
    throw std::invalid_argument("a_prime: prime table must reach 1e4");
  // Collect the (j, k) exponent pairs, j + k <= kOrder, k >= 1.
  struct JK {
    int j, k;
    cplx partial;  // sum_{p <= cutoff} log p p^{-s_jk}
  };
  std::vector<JK> jk;
  for (int j = 0; j < kOrder; ++j)
    for (int k = 1; j + k <= kOrder; ++k) jk.push_back({j, k, 0.0});

  cplx direct = 0.0;
  for (i64 p : pt.primes()) {
    if (p > kCutoff) break;
    double dp = static_cast<double>(p);
    double lp = std::log(dp);
    cplx z = std::exp(-2.0 * r * lp);  // p^{-2r}
    direct += lp / ((dp + 1.0) * (dp / z - 1.0));
    // p^{-s_jk} = p^{-(1+j+k)} z^k.
    for (auto& t : jk)
      t.partial += lp * std::pow(1.0 / dp, 1 + t.j + t.k) * std::pow(z, t.k);
  }
  cplx acc = direct;
  for (auto& t : jk) {
    cplx s = cplx(static_cast<double>(1 + t.j + t.k), 0.0) + 2.0 * static_cast<double>(t.k) * r;
    cplx tail = prime_log_zeta(s, pt) - t.partial;
    acc += (t.j % 2 ? -1.0 : 1.0) * tail;
  }
  return acc;
}

cplx rem_closed(cplx r, const PrimeTable& pt) {
  constexpr i64 kCutoff = 100000;
  if (pt.limit() < kCutoff)
    throw std::invalid_argument("rem_closed: prime table must reach 1e5");
  return rem_truncated(r, pt, kCutoff);
}

cplx rem_assembled(cplx r, const PrimeTable& pt) {
  return a_prime(r, pt) + zeta_logderiv(2.0 + 2.0 * r);
}

double rem_prime_term(i64 p, double t) {
  double dp = static_cast<double>(p);
  double lp = std::log(dp);
  cplx w = std::exp(cplx(0.0, 2.0 * t * lp));  // p^{2it}
  cplx term = dp * lp * (1.0 - w) /
              ((dp + 1.0) * (1.0 - dp * w) * (1.0 - dp * dp * w));
  return term.real();
}

double s_odd_psi(const GenusCharacter& psi, const FamilySpec& fam,
                 const TestFunctionPair& tf, const PrimeTable& pt) {
  if (fam.xstar == 0) throw std::invalid_argument("s_odd_psi: empty family");
  i64 D = -fam.D.d;
  double L = scale_L(D, static_cast<double>(fam.X));
  double window = tf.sigma * L;
  require_prime_cover(pt, window);
  double sum = 0.0;
  for (i64 p : pt.primes()) {
    double lp = std::log(static_cast<double>(p));
    if (lp >= window) break;
    int lam = lambda_split(p, fam.D);
    if (!lam) continue;
    i64 cs = char_sum(p, fam);
    if (!cs) continue;
    int pv = psi_value(psi, p, D);
    double w = static_cast<double>(lam * pv * cs) * lp;
    for (int l = 0; (2 * l + 1) * lp < window; ++l)
      sum += w * std::pow(static_cast<double>(p), -(2.0 * l + 1.0) / 2.0) *
             tf.ghat((2.0 * l + 1.0) * lp / L);
  }
  return -2.0 / (static_cast<double>(fam.xstar) * L) * sum;
}

OddCancellation s_odd_character_cancellation(const FamilySpec& fam,
                                             const TestFunctionPair& tf,
                                             const PrimeTable& pt) {
  i64 D = -fam.D.d;
  double L = scale_L(D, static_cast<double>(fam.X));
  double window = tf.sigma * L;
  require_prime_cover(pt, window);
  auto chars = genus_characters(D, pt);
  OddCancellation out;
  for (i64 p : pt.primes()) {
    if (std::log(static_cast<double>(p)) >= window) break;
    int lam = lambda_split(p, fam.D);
    if (!lam) continue;
    ++out.primes_in_window;
    i64 psum = 0;
    for (auto& psi : chars) psum += psi_value(psi, p, D);
    i64 weight = static_cast<i64>(lam) * psum * char_sum(p, fam);
    if (weight != 0) {
      out.exact_zero = false;
      out.failures.push_back(p);
    }
  }
  return out;
}

const std::vector<double>& ZeroCache::ordinates(i64 d, double T) {
  auto it = map_.find(d);
  if (it != map_.end() && it->second.T >= T) return it->second.g;
  ZeroScan scan = find_zeros(d, T);
  if (!scan.count_consistent)
    throw std::runtime_error(
        "zero ordinate scan failed its argument-principle count at d = " +
        std::to_string(d));
  Entry e;
  e.T = T;
  for (auto& z : scan.zeros) e.g.push_back(z.gamma);
  return map_.insert_or_assign(d, std::move(e)).first->second.g;
}

void ZeroCache::put(i64 d, double T, std::vector<double> ordinates) {
  map_.insert_or_assign(d, Entry{T, std::move(ordinates)});
}

std::optional<double> ZeroCache::stored_height(i64 d) const {
  auto it = map_.find(d);
  if (it == map_.end()) return std::nullopt;
  return it->second.T;
}

std::map<i64, std::pair<double, std::vector<double>>> ZeroCache::snapshot()
    const {
  std::map<i64, std::pair<double, std::vector<double>>> out;
  for (auto& [d, e] : map_) out.emplace(d, std::make_pair(e.T, e.g));
  return out;
}

double zero_tail_bound(const TestFunctionPair& tf, double L, double T,
                       i64 d_abs) {
  if (T <= 0.0 || L <= 0.0) throw std::invalid_argument("zero_tail_bound");
  double c = quadratic_decay_constant(tf);
  double q = static_cast<double>(d_abs);
  // Zero-count upper envelope (t/pi) log(q t / 2 pi e) + 2 log(q t), partially
  // integrated against 1/t^2 over (T, infinity).
  double main = 2.0 / kPi * (std::max(0.0, std::log(q * T / (2.0 * kPi * std::exp(1.0)))) + 1.0) / T;
  double fluct = 2.0 * (std::log(q * T) + 0.5) / (T * T);
  double s = 2.0 * kPi / L;
  return 2.0 * c * s * s * (main + fluct);
}

ZeroSideResult zero_side_single(i64 d, const TestFunctionPair& tf, double L,
                                double T, ZeroCache* cache) {
  ZeroCache local;
  ZeroCache& c = cache ? *cache : local;
  const auto& g = c.ordinates(d, T);
  ZeroSideResult out;
  for (double gamma : g) {
    if (gamma > T) break;
    out.value += 2.0 * tf.g(gamma * L / (2.0 * kPi));
    ++out.count;
  }
  out.tail = zero_tail_bound(tf, L, T, std::abs(d));
  return out;
}

EFReport ef_balance(const FamilySpec& fam, const GenusCharacter& psi,
                    const TestFunctionPair& tf, double T, const PrimeTable& pt,
                    ZeroCache* cache, bool with_zeros) {
  if (fam.xstar == 0) throw std::invalid_argument("ef_balance: empty family");
  i64 D = -fam.D.d;
  EFReport r;
  r.L = scale_L(D, static_cast<double>(fam.X));
  r.sigma = tf.sigma;
  r.T = T;
  r.conductor = conductor_term(fam, tf).exact;
  r.gamma = gamma_term(r.L, tf).secondary;
  r.even1 = s_even1_exact(fam.D, r.L, tf, pt);
  r.even2 = s_even2_exact(fam, tf, pt);
  r.odd = s_odd_psi(psi, fam, tf, pt);
  r.tail_quadrature = 1e-7;
  if (with_zeros) {
    ZeroCache local;
    ZeroCache& c = cache ? *cache : local;
    double vsum = 0.0, tsum = 0.0;
    for (i64 f : fam.members) {
      i64 n = 0;
      for (i64 dd : {f * psi.d1, f * psi.d2}) {
        ZeroSideResult zs = zero_side_single(dd, tf, r.L, T, &c);
        vsum += zs.value;
        tsum += zs.tail;
        n += zs.count;
      }
      r.per_member_zero_counts.push_back(n);
      r.zero_count += n;
    }
    r.zero_side = vsum / static_cast<double>(fam.xstar);
    r.tail_zero = tsum / static_cast<double>(fam.xstar);
  }
  r.residual =
      r.zero_side - (r.conductor + r.gamma + r.even1 + r.even2 + r.odd);
  r.tail_total = r.tail_zero + r.tail_quadrature;
  r.balanced = with_zeros && std::abs(r.residual) <= r.tail_total;
  return r;
}

DensityReport ef_family_density(const FamilySpec& fam, const GenusCharacter& psi,
                                const TestFunctionPair& tf, double T,
                                const PrimeTable& pt, ZeroCache* cache,
                                bool with_zeros) {
  DensityReport d;
  d.ef = ef_balance(fam, psi, tf, T, pt, cache, with_zeros);
  d.xstar = fam.xstar;
  double zp2 = zeta_logderiv(cplx(2.0, 0.0)).real();  // negative
  double sum_minus = 0.0, sum_plus = 0.0;
  for (i64 q : fam.D.prime_divisors) {
    double lq = std::log(static_cast<double>(q));
    sum_minus += 2.0 * lq / (static_cast<double>(q) - 1.0);
    sum_plus += 2.0 * lq / (static_cast<double>(q) + 1.0);
  }
  double base = -std::log(4.0 * kPi * kPi * std::exp(2.0)) + 2.0 * kEuler;
  d.block_qminus_apos = sum_minus - 4.0 * zp2 + base;
  d.block_qminus_aneg = sum_minus + 4.0 * zp2 + base;
  d.block_qplus_apos = sum_plus - 4.0 * zp2 + base;
  d.block_qplus_aneg = sum_plus + 4.0 * zp2 + base;
  double conv = 4.0 * zp2 * tf.ghat0 / d.ef.L;
  d.even2_gap_apos = std::abs(d.ef.even2 + conv);  // against -4 zeta'/zeta(2)
  d.even2_gap_aneg = std::abs(d.ef.even2 - conv);
  d.even2_matches_positive = d.even2_gap_apos < d.even2_gap_aneg;
  d.density_prediction =
      (2.0 + d.block_qminus_apos / d.ef.L) * tf.ghat0 - tf.g(0.0) + d.ef.odd;
  d.sin_kernel = sin_kernel_functional(tf);
  return d;
}

EFReport dedekind_ef(i64 D, const TestFunctionPair& tf, double X_scale, double T,
                     const PrimeTable& pt, std::optional<double> synthetic_delta,
                     ZeroCache* cache, double tau_max) {
  Discriminant disc = Discriminant::make(-D, pt);
  if (!disc.fundamental)
    throw std::invalid_argument("dedekind_ef: -D must be fundamental");
  EFReport r;
  r.L = scale_L(D, X_scale);
  r.sigma = tf.sigma;
  r.T = T;
  double window = tf.sigma * r.L;
  require_prime_cover(pt, window);
  r.conductor = std::log(static_cast<double>(D) / (kPi * kPi)) / r.L * tf.ghat0;
  r.gamma = gamma_term(r.L, tf).secondary;
  double cert = 0.0;
  r.even1 = s_even1_integral(disc, r.L, tf, tau_max, &cert);
  // Odd prime powers enter the zero side of this identity; carried here as a
  // signed right-side term for a uniform residual convention.
  double odd_left = 0.0;
  for (i64 p : pt.primes()) {
    double lp = std::log(static_cast<double>(p));
    if (lp >= window) break;
    int lam = lambda_split(p, disc);
    if (!lam) continue;
    for (int l = 0; (2 * l + 1) * lp < window; ++l)
      odd_left += 2.0 * lam * lp / r.L *
                  std::pow(static_cast<double>(p), -(2.0 * l + 1.0) / 2.0) *
                  tf.ghat((2.0 * l + 1.0) * lp / r.L);
  }
  r.odd = -odd_left;
  if (synthetic_delta)
    r.delta = synthetic_delta;
  else
    r.delta = real_zero_scan(D).delta;
  double pole = 2.0 * tf.g_imag(r.L / (4.0 * kPi));
  if (r.delta) pole -= 2.0 * tf.g_imag((0.5 - *r.delta) * r.L / (2.0 * kPi));
  r.pole_siegel = pole;
  ZeroCache local;
  ZeroCache& c = cache ? *cache : local;
  for (i64 d : {static_cast<i64>(1), -D}) {
    ZeroSideResult zs = zero_side_single(d, tf, r.L, T, &c);
    r.zero_side += zs.value;
    r.tail_zero += zs.tail;
    r.zero_count += zs.count;
  }
  r.tail_quadrature = cert + 1e-7;
  r.residual = r.zero_side - (r.conductor + r.gamma + r.even1 + r.even2 +
                              r.odd + r.pole_siegel);
  r.tail_total = r.tail_zero + r.tail_quadrature;
  r.balanced = std::abs(r.residual) <= r.tail_total;
  return r;
}

ResonanceData resonance_curve(i64 D, double tmax, double step,
                              const PrimeTable& pt) {
  if (step <= 0.0 || tmax <= step)
    throw std::invalid_argument("resonance_curve: need 0 < step < tmax");
  Discriminant disc = Discriminant::make(-D, pt);
  ResonanceData out;
  int n = static_cast<int>(std::floor(tmax / step + 1e-9));
  for (int i = 1; i <= n; ++i) {
    double t = i * step;
    cplx s(1.0, 2.0 * t);
    out.points.push_back(
        {t, zeta_D_logderiv(s, disc).real(), zeta_LS_logderiv(s, disc).real()});
  }
  ZeroScan scan = find_zeros(-D, 2.0 * tmax);
  if (!scan.count_consistent)
    throw std::runtime_error("resonance_curve: zero scan count mismatch");
  for (auto& z : scan.zeros) out.green.push_back(0.5 * z.gamma);
  return out;
}

std::vector<RemFigRow> rem_figure(double tmax, double step,
                                  const PrimeTable& pt) {
  if (step <= 0.0 || tmax <= step)
    throw std::invalid_argument("rem_figure: need 0 < step < tmax");
  std::vector<RemFigRow> rows;
  int n = static_cast<int>(std::floor(tmax / step + 1e-9));
  for (int i = 1; i <= n; ++i) {
    double t = i * step;
    RemFigRow row;
    row.t = t;
    row.red = zeta_logderiv(cplx(1.0, 2.0 * t)).real();
    row.blue = -zeta_logderiv(cplx(2.0, 2.0 * t)).real();
    row.green = rem_closed(cplx(0.0, t), pt).real();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace twistlab
