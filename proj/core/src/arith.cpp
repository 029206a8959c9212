#include "twistlab/arith.hpp"

#include <cmath>
#include <numeric>

namespace twistlab {

PrimeTable::PrimeTable(i64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("PrimeTable limit must be >= 2");
  sieve_.assign(static_cast<size_t>(limit) + 1, 1);
  sieve_[0] = sieve_[1] = 0;
  for (i64 i = 2; i * i <= limit; ++i) {
    if (!sieve_[static_cast<size_t>(i)]) continue;
    for (i64 j = i * i; j <= limit; j += i) sieve_[static_cast<size_t>(j)] = 0;
  }
  for (i64 i = 2; i <= limit; ++i)
    if (sieve_[static_cast<size_t>(i)]) primes_.push_back(i);
}

bool PrimeTable::is_prime(i64 n) const {
  if (n < 2) return false;
  if (n <= limit_) return sieve_[static_cast<size_t>(n)] != 0;
  if (n <= limit_ * limit_) {
    for (i64 p : primes_) {
      if (p * p > n) break;
      if (n % p == 0) return false;
    }
    return true;
  }
  throw std::out_of_range("PrimeTable::is_prime beyond limit^2");
}

int kronecker(i64 d, i64 n) {
  // Standard reduction: strip 2s with the (d/2) rule, flip by reciprocity.
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) sign = -sign;
  }
  i64 a = d;
  // (a/2): 0 if a even, else +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    i64 r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) sign = -sign;
  }
  // Now n odd positive; the Jacobi symbol is periodic mod n in the numerator.
  a = ((a % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return (n == 1) ? sign : 0;
}

namespace {
bool squarefree_small(i64 m) {
  if (m < 0) m = -m;
  for (i64 i = 2; i * i <= m; ++i)
    if (m % (i * i) == 0) return false;
  return true;
}
}  // namespace

bool is_fundamental(i64 d) {
  if (d == 0) throw std::invalid_argument("is_fundamental: d = 0");
  if (d == 1) return true;
  i64 r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree_small(d);
  if (r != 0) return false;
  i64 m = d / 4;
  i64 rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree_small(m);
}

std::vector<std::pair<i64, int>> factorize(i64 n, const PrimeTable& pt) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p : pt.primes()) {
    if (p * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int moebius(i64 n, const PrimeTable& pt) {
  auto f = factorize(n, pt);
  for (auto& [p, e] : f)
    if (e > 1) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

int omega(i64 n, const PrimeTable& pt) {
  return static_cast<int>(factorize(n, pt).size());
}

i64 tau(i64 n, const PrimeTable& pt) {
  i64 t = 1;
  for (auto& [p, e] : factorize(n, pt)) t *= (e + 1);
  return t;
}

Discriminant Discriminant::make(i64 d, const PrimeTable& pt) {
  if (d == 0) throw std::invalid_argument("Discriminant: d = 0");
  Discriminant out;
  out.d = d;
  out.fundamental = is_fundamental(d);
  i64 n = d < 0 ? -d : d;
  if (n == 1) {
    out.omega = 0;
    out.tau = 1;
    return out;
  }
  auto f = factorize(n, pt);
  out.omega = static_cast<int>(f.size());
  out.tau = 1;
  for (auto& [p, e] : f) {
    out.tau *= (e + 1);
    out.prime_divisors.push_back(p);
  }
  return out;
}

int lambda_split(i64 p, const Discriminant& minusD) {
  return 1 + kronecker(minusD.d, p);
}

}  // namespace twistlab
