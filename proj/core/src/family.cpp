#include "twistlab/family.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twistlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Squarefree flags for 1..n-1 by cancelling multiples of prime squares.
std::vector<char> squarefree_sieve(i64 n) {
  std::vector<char> sf(static_cast<size_t>(n), 1);
  if (n > 0) sf[0] = 0;
  for (i64 p = 2; p * p < n; ++p) {
    if (!sf[static_cast<size_t>(p)]) continue;  // p has a square factor itself
    for (i64 m = p * p; m < n; m += p * p) sf[static_cast<size_t>(m)] = 0;
  }
  return sf;
}

int moebius_trial(i64 n) {
  int m = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

}  // namespace

FamilySpec enumerate_family(i64 D, i64 X, const PrimeTable& pt) {
  if (X < 2) throw std::invalid_argument("enumerate_family: X >= 2 required");
  FamilySpec fam;
  fam.D = Discriminant::make(-D, pt);
  fam.X = X;
  auto sf = squarefree_sieve(2 * X);
  auto coprime_D = [&](i64 n) { return std::gcd(n, D) == 1; };
  for (i64 n = X; n < 2 * X; ++n) {
    if (!coprime_D(n)) continue;
    switch (n % 4) {
      case 1:
        if (sf[static_cast<size_t>(n)]) fam.members.push_back(n);
        break;
      case 3:
        if (sf[static_cast<size_t>(n)]) fam.members.push_back(-n);
        break;
      case 0: {
        i64 m = n / 4;
        if (!sf[static_cast<size_t>(m)]) break;
        i64 r = m % 4;
        if (r == 2 || r == 3) fam.members.push_back(n);
        if (r == 1 || r == 2) fam.members.push_back(-n);
        break;
      }
      default:
        break;  // n = 2 mod 4 is never a fundamental discriminant
    }
  }
  fam.xstar = static_cast<i64>(fam.members.size());
  double density = 6.0 / (kPi * kPi);
  for (i64 q : fam.D.prime_divisors) density *= 1.0 - 1.0 / (q + 1.0);
  fam.asymptotic = density * static_cast<double>(X);
  fam.ratio = fam.xstar / fam.asymptotic;
  return fam;
}

i64 char_sum(i64 p, const FamilySpec& fam) {
  i64 s = 0;
  for (i64 f : fam.members) s += kronecker(f, p);
  return s;
}

namespace {

// sum of xi(k) over odd squarefree k in [A, B) with gcd(k, R) = 1, where R is
// the odd radical of D and xi is totally multiplicative on odd arguments.
template <typename Xi>
i64 rearranged_interval_sum(i64 A, i64 B, i64 R, Xi xi) {
  if (A < 1) A = 1;
  if (A >= B) return 0;
  // Squarefree divisors t of R paired with odd l; k runs over multiples of
  // lcm(t, l^2); the coefficients mu(t) mu(l) realize both sieves.
  std::vector<i64> tdivs{1};
  {
    i64 rest = R;
    std::vector<i64> primes;
    for (i64 p = 3; p * p <= rest; p += 2)
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    if (rest > 1) primes.push_back(rest);
    for (i64 q : primes) {
      size_t n = tdivs.size();
      for (size_t i = 0; i < n; ++i) tdivs.push_back(tdivs[i] * q);
    }
  }
  i64 S = 0;
  for (i64 t : tdivs) {
    int mu_t = moebius_trial(t);
    for (i64 l = 1; l * l < B; l += 2) {
      int mu_l = moebius_trial(l);
      if (!mu_l) continue;
      i64 l2 = l * l;
      i64 m = t / std::gcd(t, l2) * l2;  // lcm(t, l^2), odd
      if (m >= B) continue;
      i64 c = static_cast<i64>(mu_t * mu_l) * xi(m);
      if (!c) continue;
      i64 j = (A + m - 1) / m;
      if (j % 2 == 0) ++j;
      i64 inner = 0;
      for (; m * j < B; j += 2) inner += xi(j);
      S += c * inner;
    }
  }
  return S;
}

}  // namespace

i64 char_sum_moebius(i64 p, const FamilySpec& fam) {
  i64 D = -fam.D.d;
  i64 X = fam.X;
  i64 R = D;
  while (R % 2 == 0) R /= 2;  // odd radical suffices: k is odd
  if (p == 2) {
    // Only odd members contribute (chi_f(2) = 0 for even f); the mod-8
    // character chi_8 is even, so the two sign patterns share xi = (2/k).
    return rearranged_interval_sum(X, 2 * X, R,
                                   [](i64 k) { return kronecker(2, k); });
  }
  auto xi = [p](i64 k) { return kronecker(p, k); };
  // Odd f = +-k: reciprocity gives chi_f(p) = (p/k) outright.
  i64 S = rearranged_interval_sum(X, 2 * X, R, xi);
  if (D % 2 == 1) {
    // f = +-4k (one sign per odd k): coefficient (-1)^((p-1)/2) (p/k).
    int sgn = ((p - 1) / 2) % 2 ? -1 : 1;
    S += sgn * rearranged_interval_sum((X + 3) / 4, (2 * X - 1) / 4 + 1, R, xi);
    // f = +-8k (both signs): the pair sums to (1 + (-1)^((p-1)/2))(2/p)(p/k).
    if (p % 4 == 1)
      S += 2 * kronecker(2, p) *
           rearranged_interval_sum((X + 7) / 8, (2 * X - 1) / 8 + 1, R, xi);
  }
  return S;
}

std::vector<BurgessRecord> burgess_dashboard(const FamilySpec& fam, i64 pmax,
                                             double eps, const PrimeTable& pt) {
  std::vector<BurgessRecord> out;
  double X = static_cast<double>(fam.X);
  double t = static_cast<double>(fam.D.tau);
  for (i64 p : pt.primes()) {
    if (p > pmax) break;
    BurgessRecord r;
    r.p = p;
    r.sum = char_sum(p, fam);
    r.bound = t * (std::pow(X, 1.0 - eps * eps) +
                   std::sqrt(X) * std::pow(static_cast<double>(p), 0.125 + eps / 2.0));
    r.ratio = std::abs(static_cast<double>(r.sum)) / r.bound;
    r.within = r.ratio <= 1.0;
    out.push_back(r);
  }
  return out;
}

RegimeReport algebra_regime(i64 D, i64 e, double sigma, i64 X) {
  RegimeReport r;
  r.sigma = sigma;
  r.D = D;
  r.X = X;
  double expo = 1.0 / (sigma * static_cast<double>(e)) - 0.5;
  r.x_max_algebra = std::pow(static_cast<double>(D), expo) / 4.0;
  r.algebra_ok = sigma < 2.0 / static_cast<double>(e) &&
                 static_cast<double>(X) < r.x_max_algebra;
  r.no_split_certificate =
      std::pow(std::sqrt(static_cast<double>(D)) * X, sigma) <=
      std::pow(D / 4.0, 1.0 / static_cast<double>(e));
  return r;
}

RegimeReport analysis_regime(i64 D, i64 X, double sigma) {
  RegimeReport r;
  r.sigma = sigma;
  r.D = D;
  r.X = X;
  r.logD_X = std::log(static_cast<double>(X)) / std::log(static_cast<double>(D));
  r.window_lo = sigma / (8.0 - 2.0 * sigma);
  r.window_hi = 1.0 / sigma - 0.5;
  double cap = (4.0 - sigma - sigma / (2.0 * r.logD_X)) / 16.0;
  if (cap > 0.0) r.epsilon = std::min(0.25, cap);
  r.analysis_ok = sigma < 4.0 / 3.0 && r.window_lo < r.logD_X &&
                  r.logD_X < r.window_hi && r.epsilon.has_value();
  return r;
}

RegimeReport regime_report(i64 D, i64 X, double sigma, i64 e) {
  RegimeReport r = analysis_regime(D, X, sigma);
  RegimeReport a = algebra_regime(D, e, sigma, X);
  r.algebra_ok = a.algebra_ok;
  r.x_max_algebra = a.x_max_algebra;
  r.no_split_certificate = a.no_split_certificate;
  return r;
}

OrthogonalityRecord orthogonality_sum(i64 D, i64 pmax, const PrimeTable& pt) {
  OrthogonalityRecord rec;
  rec.D = D;
  auto G = class_group(D, pt);
  auto cs = genus_characters(D, pt);
  for (i64 p : pt.primes()) {
    if (p > pmax) break;
    if (kronecker(-D, p) == -1) continue;  // inert
    auto idx = represent_prime(G, p);
    if (!idx.has_value()) {
      rec.pass = false;
      rec.failures.push_back(p);
      continue;
    }
    i64 s = 0;
    for (auto& psi : cs) s += psi_on_form(psi, G.reduced_forms[*idx], D);
    i64 expect = G.in_principal_genus(*idx) ? G.genus_count : 0;
    ++rec.primes_checked;
    if (s != expect) {
      rec.pass = false;
      rec.failures.push_back(p);
    }
  }
  return rec;
}

}  // namespace twistlab
