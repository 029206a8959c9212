#include "twistlab/lfun.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace twistlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// B_2, B_4, ..., B_20.
constexpr double kBern[10] = {1.0 / 6,      -1.0 / 30,       1.0 / 42,
                              -1.0 / 30,    5.0 / 66,        -691.0 / 2730,
                              7.0 / 6,      -3617.0 / 510,   43867.0 / 798,
                              -174611.0 / 330};

struct Tail {
  cplx val{0.0, 0.0}, ds{0.0, 0.0};
  double last = 0.0;  // magnitude of the final correction term
};

// Euler-Maclaurin tail of sum_{n >= N} (qn + a)^{-s} with u = qN + a:
//   u^{1-s}/(q(s-1)) + u^{-s}/2
//     + sum_k B_{2k}/(2k)! q^{2k-1} (s)_{2k-1} u^{1-s-2k}.
Tail em_tail(cplx s, double u, double q, bool with_ds, bool with_integral) {
  double lu = std::log(u);
  cplx ums = std::exp(-s * lu);
  Tail t;
  t.val = 0.5 * ums;
  if (with_ds) t.ds = -0.5 * lu * ums;
  if (with_integral) {
    cplx sm1 = s - 1.0;
    cplx I = ums * u / (q * sm1);
    t.val += I;
    if (with_ds) t.ds += -lu * I - ums * u / (q * sm1 * sm1);
  }
  cplx P = 1.0, Pd = 0.0;  // (s)_j and its s-derivative
  int j = 0;
  double fact = 1.0;   // (2k)!
  double qpow = 1.0;   // q^{2k-1}
  double upow = 1.0;   // u^{1-2k}
  for (int k = 1; k <= 10; ++k) {
    while (j < 2 * k - 1) {
      cplx f = s + static_cast<double>(j);
      Pd = Pd * f + P;
      P = P * f;
      ++j;
    }
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    qpow *= (k == 1) ? q : q * q;
    upow /= (k == 1) ? u : u * u;
    double c = kBern[k - 1] / fact * qpow * upow;
    cplx term = c * P * ums;
    t.val += term;
    if (with_ds) t.ds += c * ums * (Pd - P * lu);
    t.last = std::abs(term);
  }
  return t;
}

int choose_N(double abs_t) {
  return std::max(16, static_cast<int>(std::ceil(0.55 * abs_t)) + 8);
}

struct VD {
  cplx val, ds;
};

VD hz_core(cplx s, double a, bool with_ds) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("hurwitz_zeta: a must lie in (0, 1]");
  if (std::abs(s - 1.0) < 1e-12)
    throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
  int N = choose_N(std::abs(s.imag()));
  for (int attempt = 0;; ++attempt) {
    cplx sum = 0.0, sumds = 0.0;
    for (int n = 0; n < N; ++n) {
      double lu = std::log(n + a);
      cplx w = std::exp(-s * lu);
      sum += w;
      if (with_ds) sumds -= lu * w;
    }
    Tail tl = em_tail(s, N + a, 1.0, with_ds, true);
    cplx val = sum + tl.val;
    if (tl.last <= 1e-13 * std::max(1.0, std::abs(val)) || attempt >= 3)
      return {val, sumds + tl.ds};
    N *= 2;
  }
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) { return hz_core(s, a, false).val; }
cplx hurwitz_zeta_ds(cplx s, double a) { return hz_core(s, a, true).ds; }

cplx digamma(cplx s) {
  if (std::abs(s.imag()) < 1e-12 && s.real() <= 0.5) {
    double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s.real() - r) < 1e-12)
      throw std::invalid_argument("digamma: pole at nonpositive integer");
  }
  cplx acc = 0.0;
  while (s.real() < 10.0) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  cplx inv = 1.0 / s, inv2 = inv * inv;
  cplx r = std::log(s) - 0.5 * inv;
  cplx p = inv2;
  for (int k = 1; k <= 7; ++k) {
    r -= kBern[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + r;
}

cplx log_gamma(cplx z) {
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc -= std::log(z);
    z += 1.0;
  }
  cplx inv = 1.0 / z, inv2 = inv * inv;
  cplx r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  cplx p = inv;
  for (int k = 1; k <= 7; ++k) {
    r += kBern[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return acc + r;
}

cplx zeta_logderiv(cplx s) {
  VD v = hz_core(s, 1.0, true);
  if (std::abs(v.val) < 1e-13)
    throw std::domain_error("zeta_logderiv: evaluation point too close to a zero");
  return v.ds / v.val;
}

std::vector<int> character_table(i64 d) {
  i64 q = d < 0 ? -d : d;
  std::vector<int> chi(static_cast<size_t>(q));
  for (i64 m = 0; m < q; ++m) chi[static_cast<size_t>(m)] = kronecker(d, m);
  if (q == 1) chi[0] = 1;
  return chi;
}

LPair dirichlet_L_pair(cplx s, i64 d, const std::vector<int>& chi, bool with_ds) {
  i64 q = d < 0 ? -d : d;
  if (q == 1) {
    VD v = hz_core(s, 1.0, with_ds);
    return {v.val, v.ds};
  }
  i64 N = choose_N(std::abs(s.imag()));
  for (int attempt = 0;; ++attempt) {
    cplx main = 0.0, mainds = 0.0;
    for (i64 m = 1; m <= q * N; ++m) {
      int c = chi[static_cast<size_t>(m % q)];
      if (!c) continue;
      double lu = std::log(static_cast<double>(m));
      cplx w = std::exp(-s * lu);
      main += static_cast<double>(c) * w;
      if (with_ds) mainds -= static_cast<double>(c) * lu * w;
    }
    double worst = 0.0;
    int classes = 0;
    cplx tails = 0.0, tailsds = 0.0;
    // The per-class integral parts sum_a chi(a) u_a^{1-s}/(q(s-1)) cancel at
    // s = 1 (sum chi(a) = 0); assemble them jointly with a series fallback.
    cplx eps = s - 1.0;
    bool near_pole = std::abs(eps) < 1e-4;
    double S[6] = {0, 0, 0, 0, 0, 0};  // S_k = sum_a chi(a) log^k(u_a)
    cplx Iv = 0.0, Ids = 0.0;
    for (i64 a = 1; a <= q; ++a) {
      int c = chi[static_cast<size_t>(a % q)];
      if (!c) continue;
      ++classes;
      double u = static_cast<double>(q * N + a);
      Tail tl = em_tail(s, u, static_cast<double>(q), with_ds, false);
      tails += static_cast<double>(c) * tl.val;
      tailsds += static_cast<double>(c) * tl.ds;
      worst = std::max(worst, tl.last);
      if (near_pole) {
        double lu = std::log(u), p = 1.0;
        for (int k = 1; k <= 5; ++k) {
          p *= lu;
          S[k] += c * p;
        }
      } else {
        double lu = std::log(u);
        cplx ums = std::exp(-s * lu);
        cplx I = ums * u / (static_cast<double>(q) * eps);
        Iv += static_cast<double>(c) * I;
        if (with_ds)
          Ids += static_cast<double>(c) *
                 (-lu * I - ums * u / (static_cast<double>(q) * eps * eps));
      }
    }
    if (near_pole) {
      // I_total = (1/q) sum_{k>=1} (-1)^k eps^{k-1} S_k / k!.
      double fact = 1.0;
      cplx ep = 1.0, sign = -1.0;
      for (int k = 1; k <= 5; ++k) {
        fact *= k;
        Iv += sign * ep * (S[k] / fact) / static_cast<double>(q);
        if (with_ds && k >= 2)
          Ids += sign * static_cast<double>(k - 1) *
                 (k == 2 ? cplx(1.0) : std::pow(eps, k - 2)) * (S[k] / fact) /
                 static_cast<double>(q);
        ep *= eps;
        sign = -sign;
      }
    }
    tails += Iv;
    tailsds += Ids;
    cplx L = main + tails;
    if (worst * classes <= 1e-13 * std::max(1.0, std::abs(L)) || attempt >= 3)
      return {L, mainds + tailsds};
    N *= 2;
  }
}

cplx dirichlet_L(cplx s, i64 d) {
  return dirichlet_L_pair(s, d, character_table(d), false).L;
}

cplx dirichlet_L_ds(cplx s, i64 d) {
  return dirichlet_L_pair(s, d, character_table(d), true).Lds;
}

cplx L_logderiv(cplx s, i64 d) {
  LPair p = dirichlet_L_pair(s, d, character_table(d), true);
  if (std::abs(p.L) < 1e-13)
    throw std::domain_error("L_logderiv: evaluation point too close to a zero");
  return p.Lds / p.L;
}

cplx completed_L(cplx s, i64 d) {
  if (d == 1) {
    cplx z = hz_core(s, 1.0, false).val;
    return 0.5 * s * (s - 1.0) * std::exp(-0.5 * s * std::log(kPi)) *
           std::exp(log_gamma(0.5 * s)) * z;
  }
  if (!is_fundamental(d))
    throw std::invalid_argument("completed_L: d must be fundamental");
  double q = static_cast<double>(d < 0 ? -d : d);
  double a = d < 0 ? 1.0 : 0.0;
  cplx z = 0.5 * (s + a);
  cplx L = dirichlet_L_pair(s, d, character_table(d), false).L;
  return std::exp(z * std::log(q / kPi) + log_gamma(z)) * L;
}

namespace {

// Phase-rotated real function on the critical line: Z(t) = Re[e^{i theta} L],
// a positive real multiple of the completed function (which is real there).
double rotated_Z(double t, i64 d, const std::vector<int>& chi) {
  cplx s(0.5, t);
  double q = static_cast<double>(d < 0 ? -d : d);
  double a = d < 0 ? 1.0 : 0.0;
  cplx z = 0.5 * (s + a);
  double theta = log_gamma(z).imag() + 0.5 * t * std::log(q / kPi);
  cplx L = dirichlet_L_pair(s, d, chi, false).L;
  return (std::exp(cplx(0.0, theta)) * L).real();
}

// Completed-function value used on the argument-principle contour (entire:
// the zeta pole is removed by the s(s-1)/2 factor when d = 1).
cplx contour_F(cplx s, i64 d, const std::vector<int>& chi) {
  if (d == 1) {
    cplx z = hz_core(s, 1.0, false).val;
    return 0.5 * s * (s - 1.0) * std::exp(-0.5 * s * std::log(kPi)) *
           std::exp(log_gamma(0.5 * s)) * z;
  }
  double q = static_cast<double>(d < 0 ? -d : d);
  double a = d < 0 ? 1.0 : 0.0;
  cplx z = 0.5 * (s + a);
  cplx L = dirichlet_L_pair(s, d, chi, false).L;
  return std::exp(z * std::log(q / kPi) + log_gamma(z)) * L;
}

void accum_phase(const std::function<cplx(cplx)>& F, cplx s1, cplx f1, cplx s2,
                 cplx f2, int depth, double& total) {
  double da = std::arg(f2 / f1);
  if (std::abs(da) > 1.5 && depth < 40) {
    cplx sm = 0.5 * (s1 + s2);
    cplx fm = F(sm);
    accum_phase(F, s1, f1, sm, fm, depth + 1, total);
    accum_phase(F, sm, fm, s2, f2, depth + 1, total);
    return;
  }
  total += da;
}

long winding_count(i64 d, const std::vector<int>& chi, double Tp) {
  double q = static_cast<double>(d < 0 ? -d : d);
  auto F = [&](cplx s) { return contour_F(s, d, chi); };
  double base = std::min(0.1, 2.0 / (std::log((q + 1.0) * (Tp + 2.0)) + 4.0));
  cplx corners[5] = {cplx(1.5, -Tp), cplx(1.5, Tp), cplx(-0.5, Tp),
                     cplx(-0.5, -Tp), cplx(1.5, -Tp)};
  for (int attempt = 0; attempt < 2; ++attempt) {
    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
      cplx A = corners[e], B = corners[e + 1];
      int n = static_cast<int>(std::ceil(std::abs(B - A) / base)) + 1;
      cplx prev_s = A, prev_f = F(A);
      for (int i = 1; i <= n; ++i) {
        cplx s = A + (B - A) * (static_cast<double>(i) / n);
        cplx f = F(s);
        accum_phase(F, prev_s, prev_f, s, f, 0, total);
        prev_s = s;
        prev_f = f;
      }
    }
    double w = total / (2.0 * kPi);
    long rounded = std::lround(w);
    if (std::abs(w - rounded) < 0.05) return rounded;
    base *= 0.25;
  }
  throw std::runtime_error("winding_count: contour phase did not close to an integer");
}

}  // namespace

ZeroScan find_zeros(i64 d, double T) {
  if (d != 1 && !is_fundamental(d))
    throw std::invalid_argument("find_zeros: d must be fundamental");
  if (std::abs(d) > 10000 || !(T > 0.0) || T > 100.0)
    throw std::invalid_argument("find_zeros: require |d| <= 1e4, 0 < T <= 100");
  auto chi = character_table(d);
  auto Z = [&](double t) { return rotated_Z(t, d, chi); };

  ZeroScan out;
  double step = 0.01;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<ZeroRecord> found;
    double scan_to = T + 0.5;
    double t_prev = 1e-4, z_prev = Z(t_prev);
    for (double t = step; t <= scan_to + 0.5 * step; t += step) {
      double z = Z(t);
      if ((z_prev < 0.0) != (z < 0.0) || z == 0.0) {
        double lo = t_prev, hi = t, zlo = z_prev;
        while (hi - lo > 1e-11) {
          double mid = 0.5 * (lo + hi);
          double zm = Z(mid);
          if ((zlo < 0.0) != (zm < 0.0)) {
            hi = mid;
          } else {
            lo = mid;
            zlo = zm;
          }
        }
        ZeroRecord r;
        r.d = d;
        r.gamma = 0.5 * (lo + hi);
        r.width = 0.5 * (hi - lo);
        found.push_back(r);
      }
      t_prev = t;
      z_prev = z;
    }
    // Nudge the contour height strictly between ordinates.
    double g1 = 0.0, g2 = T + 0.4;
    std::vector<ZeroRecord> kept;
    for (auto& r : found) {
      if (r.gamma <= T) {
        kept.push_back(r);
        g1 = std::max(g1, r.gamma);
      } else {
        g2 = std::min(g2, r.gamma);
      }
    }
    double Tp = 0.5 * (g1 + g2);
    long wind = winding_count(d, chi, Tp);
    out.zeros = kept;
    out.argument_count = wind;
    out.t_prime = Tp;
    out.count_consistent = (wind == 2 * static_cast<long>(kept.size()));
    if (out.count_consistent) break;
    step *= 0.1;  // grid collision suspected: refine and rescan
  }
  for (size_t i = 0; i < out.zeros.size(); ++i)
    out.zeros[i].index = static_cast<int>(i) + 1;
  return out;
}

LSRecord real_zero_scan(i64 D) {
  if (D <= 0 || !is_fundamental(-D))
    throw std::invalid_argument("real_zero_scan: -D must be fundamental");
  auto chi = character_table(-D);
  auto f = [&](double x) {
    return dirichlet_L_pair(cplx(x, 0.0), -D, chi, false).L.real();
  };
  LSRecord rec;
  rec.D = D;
  const double step = 1e-4;
  double best = 0.0;
  double x_prev = 0.5 + step, f_prev = f(x_prev);
  for (double x = x_prev + step; x < 1.0 - 0.5 * step; x += step) {
    double fx = f(x);
    if ((f_prev < 0.0) != (fx < 0.0)) {
      double lo = x_prev, hi = x, flo = f_prev;
      while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      best = std::max(best, 0.5 * (lo + hi));
    }
    x_prev = x;
    f_prev = fx;
  }
  if (best > 0.0) rec.delta = 1.0 - best;
  return rec;
}

cplx zeta_D_logderiv(cplx s, const Discriminant& D) {
  if (std::abs(s - 1.0) < 1e-8)
    throw std::invalid_argument("zeta_D_logderiv: pole at s = 1");
  cplx r = 2.0 * zeta_logderiv(s) - 2.0 * zeta_logderiv(s + 1.0);
  for (i64 q : D.prime_divisors) {
    double lq = std::log(static_cast<double>(q));
    cplx qs = std::exp(-s * lq);
    r += lq * qs / (1.0 - qs);
  }
  return r;
}

cplx zeta_LS_logderiv(cplx s, const Discriminant& D) {
  if (std::abs(s - 1.0) < 1e-8 || std::abs(s - 0.5) < 1e-8)
    throw std::invalid_argument("zeta_LS_logderiv: pole");
  cplx r = zeta_logderiv(s) + 2.0 * zeta_logderiv(2.0 * s) -
           2.0 * zeta_logderiv(s + 1.0) - L_logderiv(s, D.d);
  for (i64 q : D.prime_divisors) {
    double lq = std::log(static_cast<double>(q));
    cplx q2s = std::exp(-2.0 * s * lq);
    r += 2.0 * lq * q2s / (1.0 - q2s);
  }
  return r;
}

}  // namespace twistlab
