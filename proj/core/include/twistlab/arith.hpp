#pragma once
// Integer-arithmetic substrate: prime sieving, Kronecker symbols,
// multiplicative functions, fundamental-discriminant predicates.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twistlab {

using i64 = std::int64_t;

// Ascending list of all primes <= limit. Immutable after construction,
// safe to share across workers.
class PrimeTable {
public:
  explicit PrimeTable(i64 limit);
  i64 limit() const { return limit_; }
  const std::vector<i64>& primes() const { return primes_; }
  bool is_prime(i64 n) const;

private:
  i64 limit_;
  std::vector<i64> primes_;
  std::vector<std::uint8_t> sieve_;  // sieve_[i] = 1 iff i is prime, i <= limit
};

// Kronecker symbol (d/n), total on all integer pairs.
int kronecker(i64 d, i64 n);

// d != 0; true iff d is a fundamental discriminant (d = 1 included as the
// trivial character).
bool is_fundamental(i64 d);

// Factorization of n >= 1 by trial division against a prime table whose
// limit^2 must cover n (or limit >= n). Returns (prime, exponent) pairs.
std::vector<std::pair<i64, int>> factorize(i64 n, const PrimeTable& pt);

int moebius(i64 n, const PrimeTable& pt);
int omega(i64 n, const PrimeTable& pt);
i64 tau(i64 n, const PrimeTable& pt);

// Fundamental discriminant with cached factorization metadata. The value
// stored is d; for the imaginary quadratic settings d = -D with D > 0.
struct Discriminant {
  i64 d = 0;
  bool fundamental = false;
  int omega = 0;
  i64 tau = 0;
  std::vector<i64> prime_divisors;

  static Discriminant make(i64 d, const PrimeTable& pt);
};

// lambda(p) = 1 + chi_{-D}(p): 2 split, 1 ramified (p | D), 0 inert.
int lambda_split(i64 p, const Discriminant& minusD);

}  // namespace twistlab
