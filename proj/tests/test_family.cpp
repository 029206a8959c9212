#include "doctest.h"
#include "twistlab/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace twistlab;

namespace {

// Independent membership oracle: direct is_fundamental scan over both signs.
std::vector<i64> members_bruteforce(i64 D, i64 X) {
  std::vector<i64> out;
  for (i64 n = X; n < 2 * X; ++n) {
    if (std::gcd(n, D) != 1) continue;
    if (is_fundamental(n)) out.push_back(n);
    if (is_fundamental(-n)) out.push_back(-n);
  }
  return out;
}

bool same_members(std::vector<i64> a, std::vector<i64> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("enumerate_family: exact agreement with brute force") {
  PrimeTable pt(5000);
  for (i64 D : {3, 4, 15, 20, 1411})
    for (i64 X : {2, 10, 37, 100, 500}) {
      auto fam = enumerate_family(D, X, pt);
      auto oracle = members_bruteforce(D, X);
      REQUIRE(same_members(fam.members, oracle));
      REQUIRE(fam.xstar == (i64)oracle.size());
      for (i64 f : fam.members) {
        REQUIRE(is_fundamental(f));
        REQUIRE(std::gcd(f < 0 ? -f : f, D) == 1);
        REQUIRE(std::abs(f) >= X);
        REQUIRE(std::abs(f) < 2 * X);
      }
    }
  CHECK_THROWS(enumerate_family(15, 1, pt));
}

TEST_CASE("enumerate_family: D = 4 members are all odd") {
  PrimeTable pt(5000);
  auto fam = enumerate_family(4, 10, pt);
  REQUIRE(!fam.members.empty());
  for (i64 f : fam.members) CHECK(f % 2 != 0);
}

TEST_CASE("enumerate_family: count asymptotics") {
  PrimeTable pt(5000);
  auto f100 = enumerate_family(15, 100, pt);
  CHECK(std::abs(f100.ratio - 1.0) < 0.15);
  auto f1e6 = enumerate_family(15, 1000000, pt);
  CHECK(std::abs(f1e6.ratio - 1.0) < 0.01);
  // Determinism.
  auto again = enumerate_family(15, 100, pt);
  CHECK(again.members == f100.members);
}

TEST_CASE("char_sum: Moebius rearrangement equals direct sum exactly") {
  PrimeTable pt(5000);
  for (i64 D : {15, 1411})
    for (i64 X : {100, 1000, 10000}) {
      auto fam = enumerate_family(D, X, pt);
      for (i64 p : pt.primes()) {
        if (p > 100) break;
        REQUIRE(char_sum_moebius(p, fam) == char_sum(p, fam));
      }
    }
}

TEST_CASE("char_sum: small pinned case and large-p behaviour") {
  PrimeTable pt(5000);
  auto fam = enumerate_family(15, 10, pt);
  // Independent hand evaluation over the explicit member list.
  i64 direct = 0;
  for (i64 f : members_bruteforce(15, 10)) direct += kronecker(f, 2);
  CHECK(char_sum(2, fam) == direct);
  CHECK(char_sum_moebius(2, fam) == direct);
  // p > 2X: no member is divisible by p, so every term is +-1.
  i64 s101 = 0;
  for (i64 f : fam.members) {
    i64 k = kronecker(f, 101);
    REQUIRE(k != 0);
    s101 += k;
  }
  CHECK(char_sum(101, fam) == s101);
  CHECK(char_sum_moebius(101, fam) == s101);
}

TEST_CASE("burgess_dashboard: shape and (empirical) inequality") {
  PrimeTable pt(5000);
  auto fam = enumerate_family(15, 10000, pt);
  auto recs = burgess_dashboard(fam, 1000, 0.1, pt);
  REQUIRE(!recs.empty());
  for (auto& r : recs) {
    REQUIRE(r.bound > 0.0);
    REQUIRE(r.ratio == std::abs((double)r.sum) / r.bound);
    if (!r.within)
      MESSAGE("observed ratio above the unit-constant bound at p = ",
              r.p, ": ", r.ratio);
  }
  // With the unit constant the bound comfortably holds here.
  for (auto& r : recs) CHECK(r.within);
}

TEST_CASE("algebra_regime: pinned exponent arithmetic") {
  auto r1 = algebra_regime(1000000, 1, 1.0, 100);
  CHECK(r1.x_max_algebra == doctest::Approx(250.0).epsilon(1e-12));
  CHECK(r1.algebra_ok);
  CHECK(!algebra_regime(1000000, 1, 1.0, 250).algebra_ok);

  auto r2 = algebra_regime(1000000, 1, 2.0, 2);
  CHECK(r2.x_max_algebra == doctest::Approx(0.25));
  CHECK(!r2.algebra_ok);  // boundary sigma = 2/e: empty regime

  auto r3 = algebra_regime(1000000, 2, 0.9, 2);
  CHECK(r3.x_max_algebra == doctest::Approx(std::pow(1e6, 1.0 / 1.8 - 0.5) / 4.0));
  CHECK(r3.x_max_algebra < 1.0);
  CHECK(!r3.algebra_ok);
}

TEST_CASE("analysis_regime: window and epsilon selection") {
  auto r = analysis_regime(100000000, 100, 1.0);
  CHECK(r.logD_X == doctest::Approx(0.25));
  CHECK(r.window_lo == doctest::Approx(1.0 / 6.0));
  CHECK(r.window_hi == doctest::Approx(0.5));
  REQUIRE(r.epsilon.has_value());
  CHECK(*r.epsilon == doctest::Approx(1.0 / 16.0));
  CHECK(r.analysis_ok);

  // sigma = 4/3: the window degenerates to the single point 1/4.
  auto r43 = analysis_regime(100000000, 100, 4.0 / 3.0);
  CHECK(r43.window_lo == doctest::Approx(r43.window_hi));
  CHECK(!r43.analysis_ok);

  CHECK(!analysis_regime(100000000, 100, 1.5).analysis_ok);
}

TEST_CASE("regime_report: merged fragments") {
  auto r = regime_report(1000000, 100, 1.0, 1);
  CHECK(r.x_max_algebra == doctest::Approx(250.0));
  CHECK(r.algebra_ok);
  CHECK(r.logD_X == doctest::Approx(std::log(100.0) / std::log(1e6)));
}

TEST_CASE("orthogonality_sum: exact annihilation off the principal genus") {
  PrimeTable pt(5000);
  auto rec15 = orthogonality_sum(15, 200, pt);
  CHECK(rec15.pass);
  CHECK(rec15.primes_checked > 10);
  CHECK(rec15.failures.empty());
  // Spot checks at the character level.
  auto G = class_group(15, pt);
  auto cs = genus_characters(15, pt);
  auto r2 = represent_prime(G, 2);  // class (2,1,2), outside the principal genus
  REQUIRE(r2.has_value());
  i64 s2 = 0;
  for (auto& psi : cs) s2 += psi_on_form(psi, G.reduced_forms[*r2], 15);
  CHECK(s2 == 0);
  auto r19 = represent_prime(G, 19);  // principal-genus class
  REQUIRE(r19.has_value());
  i64 s19 = 0;
  for (auto& psi : cs) s19 += psi_on_form(psi, G.reduced_forms[*r19], 15);
  CHECK(s19 == 2);
  // Single-character discriminant: the sum is 1 for every non-inert prime.
  auto rec4 = orthogonality_sum(4, 200, pt);
  CHECK(rec4.pass);
  for (i64 D : {20, 84, 120, 1411}) CHECK(orthogonality_sum(D, 200, pt).pass);
}
