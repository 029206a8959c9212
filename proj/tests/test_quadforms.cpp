#include "doctest.h"
#include "twistlab/quadforms.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace twistlab;

namespace {

// Independent equivalence-classing oracle: connected components of the
// neighbor graph under the generators T, T^-1, S restricted to the box
// 1 <= a, c <= D (reduction paths never leave the box, see the translation
// monotonicity argument: steps toward |b| <= a strictly decrease c).
struct FormKey {
  i64 a, b, c;
  auto operator<=>(const FormKey&) const = default;
};

int count_classes_bruteforce(i64 D) {
  std::vector<FormKey> forms;
  std::map<FormKey, int> id;
  for (i64 a = 1; a <= D; ++a)
    for (i64 c = 1; c <= D; ++c) {
      i64 b2 = 4 * a * c - D;
      if (b2 < 0) continue;
      i64 b = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(b2))));
      if (b * b != b2) continue;
      for (i64 s : {b, -b}) {
        FormKey f{a, s, c};
        if (std::gcd(std::gcd(a, s < 0 ? -s : s), c) != 1) continue;
        if (!id.count(f)) {
          id[f] = static_cast<int>(forms.size());
          forms.push_back(f);
        }
        if (s == 0) break;
      }
    }
  std::vector<int> parent(forms.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  auto link = [&](const FormKey& f, const FormKey& g) {
    auto itf = id.find(f), itg = id.find(g);
    if (itf != id.end() && itg != id.end()) unite(itf->second, itg->second);
  };
  for (auto& [f, i] : id) {
    link(f, FormKey{f.a, f.b + 2 * f.a, f.a + f.b + f.c});  // T
    link(f, FormKey{f.a, f.b - 2 * f.a, f.a - f.b + f.c});  // T^-1
    link(f, FormKey{f.c, -f.b, f.a});                       // S
  }
  std::set<int> roots;
  for (size_t i = 0; i < forms.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("reduce: pinned examples") {
  CHECK(reduce(QuadForm{1, 1, 4}) == QuadForm{1, 1, 4});
  CHECK(reduce(QuadForm{4, 1, 1}) == QuadForm{1, 1, 4});
  CHECK(reduce(QuadForm{2, -1, 2}) == QuadForm{2, 1, 2});
  CHECK_THROWS(reduce(QuadForm{-1, 0, 1}));
  CHECK_THROWS(reduce(QuadForm{1, 0, -1}));
}

TEST_CASE("reduce: idempotent and equivalence-stable") {
  for (i64 D : {3, 4, 15, 20, 23, 1411}) {
    if (!is_fundamental(-D)) continue;
    for (i64 a = 1; a <= 12; ++a)
      for (i64 b = -12; b <= 12; ++b) {
        i64 n = b * b + D;
        if (n % (4 * a) != 0) continue;
        QuadForm f{a, b, n / (4 * a)};
        QuadForm r = reduce(f);
        REQUIRE(r.disc() == -D);
        REQUIRE(reduce(r) == r);
        REQUIRE(std::abs(r.b) <= r.a);
        REQUIRE(r.a <= r.c);
        if (r.a == r.c || std::abs(r.b) == r.a) REQUIRE(r.b >= 0);
        // Translation and flip leave the class fixed.
        REQUIRE(reduce(QuadForm{f.a, f.b + 2 * f.a, f.a + f.b + f.c}) == r);
        REQUIRE(reduce(QuadForm{f.c, -f.b, f.a}) == r);
      }
  }
}

TEST_CASE("class_group: pinned structures") {
  PrimeTable pt(5000);
  auto g4 = class_group(4, pt);
  CHECK(g4.h == 1);
  CHECK(g4.e == 1);
  CHECK(g4.reduced_forms[0] == QuadForm{1, 0, 1});

  auto g15 = class_group(15, pt);
  CHECK(g15.h == 2);
  CHECK(g15.reduced_forms[0] == QuadForm{1, 1, 4});
  CHECK(g15.reduced_forms[1] == QuadForm{2, 1, 2});
  CHECK(g15.principal_genus.size() == 1);
  CHECK(g15.e == 1);
  CHECK(g15.genus_count == 2);

  auto g1411 = class_group(1411, pt);
  CHECK(g1411.genus_count == 2);  // omega = 2
  CHECK(g1411.h % 2 == 0);
  CHECK_THROWS(class_group(9, pt));
}

TEST_CASE("class_group: h matches brute-force equivalence classing, D <= 200") {
  PrimeTable pt(5000);
  for (i64 D = 3; D <= 200; ++D) {
    if (!is_fundamental(-D)) continue;
    auto G = class_group(D, pt);
    REQUIRE(G.h == count_classes_bruteforce(D));
    // Composition sanity: identity, commutativity, associativity.
    for (i64 i = 0; i < G.h; ++i) {
      REQUIRE(G.compose(0, static_cast<int>(i)) == i);
      for (i64 j = 0; j < G.h; ++j) {
        REQUIRE(G.compose((int)i, (int)j) == G.compose((int)j, (int)i));
        for (i64 k = 0; k < G.h; ++k)
          REQUIRE(G.compose(G.compose((int)i, (int)j), (int)k) ==
                  G.compose((int)i, G.compose((int)j, (int)k)));
      }
    }
    // Invariant factors multiply to h, divide in a chain.
    i64 prod = 1;
    for (size_t i = 0; i < G.invariant_factors.size(); ++i) {
      prod *= G.invariant_factors[i];
      if (i > 0) REQUIRE(G.invariant_factors[i] % G.invariant_factors[i - 1] == 0);
    }
    REQUIRE(prod == G.h);
    // Ambiguous classes have order dividing 2; e divides the group exponent.
    i64 exponent = 1;
    for (i64 i = 0; i < G.h; ++i) exponent = std::lcm(exponent, G.order_of((int)i));
    REQUIRE(exponent % G.e == 0);
  }
}

TEST_CASE("genus_characters: pinned factorizations") {
  PrimeTable pt(5000);
  auto c15 = genus_characters(15, pt);
  REQUIRE(c15.size() == 2);
  CHECK(c15[0].d1 == 1);
  CHECK(c15[0].d2 == -15);
  CHECK(c15[1].d1 == 5);
  CHECK(c15[1].d2 == -3);

  auto c4 = genus_characters(4, pt);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].d1 == 1);
  CHECK(c4[0].d2 == -4);

  auto c1411 = genus_characters(1411, pt);
  REQUIRE(c1411.size() == 2);
  CHECK(c1411[0].d1 == 1);
  CHECK(c1411[0].d2 == -1411);
  CHECK(c1411[1].d1 == 17);
  CHECK(c1411[1].d2 == -83);
}

TEST_CASE("genus_characters: valid factorizations for all D <= 500") {
  PrimeTable pt(5000);
  for (i64 D = 3; D <= 500; ++D) {
    if (!is_fundamental(-D)) continue;
    auto dd = Discriminant::make(-D, pt);
    auto cs = genus_characters(D, pt);
    REQUIRE((i64)cs.size() == (i64{1} << (dd.omega - 1)));
    for (auto& psi : cs) {
      REQUIRE(psi.d1 * psi.d2 == -D);
      REQUIRE(psi.d1 > 0);
      REQUIRE(psi.d2 < 0);
      REQUIRE(is_fundamental(psi.d1));
      REQUIRE(is_fundamental(psi.d2));
    }
  }
}

TEST_CASE("psi_value: pinned values and split consistency") {
  PrimeTable pt(5000);
  auto cs = genus_characters(15, pt);
  auto& triv = cs[0];
  auto& psi = cs[1];  // (5, -3)
  CHECK(psi_value(triv, 2, 15) == 1);
  CHECK(psi_value(psi, 2, 15) == -1);   // chi_5(2) = -1
  CHECK(psi_value(psi, 5, 15) == -1);   // chi_{-3}(5) = -1
  CHECK_THROWS(psi_value(psi, 7, 15));  // inert
  // For split p: chi_{d1}(p) = chi_{d2}(p) and their product is chi_{-D}(p)=1.
  for (i64 D : {15, 1411, 84, 120}) {
    if (!is_fundamental(-D)) continue;
    for (auto& g : genus_characters(D, pt))
      for (i64 p : pt.primes()) {
        if (p > 300) break;
        if (kronecker(-D, p) != 1) continue;
        REQUIRE(kronecker(g.d1, p) == kronecker(g.d2, p));
        REQUIRE(kronecker(g.d1, p) * kronecker(g.d2, p) == 1);
        REQUIRE(psi_value(g, p, D) == kronecker(g.d1, p));
      }
  }
}

TEST_CASE("psi is a homomorphism on classes; genus orthogonality") {
  PrimeTable pt(5000);
  for (i64 D = 3; D <= 200; ++D) {
    if (!is_fundamental(-D)) continue;
    auto G = class_group(D, pt);
    auto cs = genus_characters(D, pt);
    for (auto& psi : cs) {
      std::vector<int> val(G.h);
      for (i64 i = 0; i < G.h; ++i)
        val[i] = psi_on_form(psi, G.reduced_forms[i], D);
      REQUIRE(val[0] == 1);
      for (i64 i = 0; i < G.h; ++i)
        for (i64 j = 0; j < G.h; ++j)
          REQUIRE(val[G.compose((int)i, (int)j)] == val[i] * val[j]);
    }
    // Orthogonality: sum over characters is 2^(omega-1) on the principal
    // genus and exactly 0 elsewhere (integer arithmetic).
    for (i64 i = 0; i < G.h; ++i) {
      i64 s = 0;
      for (auto& psi : cs) s += psi_on_form(psi, G.reduced_forms[i], D);
      if (G.in_principal_genus((int)i))
        REQUIRE(s == G.genus_count);
      else
        REQUIRE(s == 0);
    }
  }
}

TEST_CASE("represent_prime") {
  PrimeTable pt(5000);
  auto G = class_group(15, pt);
  auto r2 = represent_prime(G, 2);
  REQUIRE(r2.has_value());
  CHECK(G.reduced_forms[*r2] == QuadForm{2, 1, 2});
  CHECK(!represent_prime(G, 7).has_value());
  // p | D lands in an ambiguous class (order <= 2).
  for (i64 D : {15, 84, 1411}) {
    auto H = class_group(D, pt);
    for (i64 q : H.D.prime_divisors) {
      auto r = represent_prime(H, q);
      REQUIRE(r.has_value());
      REQUIRE(H.order_of(*r) <= 2);
    }
  }
  // Cross-validate psi_value against the representing class for split p.
  for (i64 D : {15, 1411}) {
    auto H = class_group(D, pt);
    for (auto& psi : genus_characters(D, pt))
      for (i64 p : pt.primes()) {
        if (p > 200) break;
        if (kronecker(-D, p) == -1) continue;
        auto r = represent_prime(H, p);
        REQUIRE(r.has_value());
        REQUIRE(psi_value(psi, p, D) == psi_on_form(psi, H.reduced_forms[*r], D));
      }
  }
}

TEST_CASE("principal_genus_min_prime: pinned cases") {
  PrimeTable pt(5000);
  auto g15 = class_group(15, pt);
  auto rep15 = principal_genus_min_prime(g15, pt);
  CHECK(rep15.pass);
  CHECK(rep15.primes_checked == std::vector<i64>{2});

  auto g4 = class_group(4, pt);
  auto rep4 = principal_genus_min_prime(g4, pt);
  CHECK(rep4.pass);
  CHECK(rep4.primes_checked.empty());  // no primes below (4/4)^1 = 1

  auto g1411 = class_group(1411, pt);
  auto rep1411 = principal_genus_min_prime(g1411, pt);
  CHECK(rep1411.pass);
}
