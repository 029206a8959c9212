#include "twistlab/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace twistlab {

namespace {

i64 floordiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Extended gcd: returns g and s,t with a*s + b*t = g.
i64 egcd(i64 a, i64 b, i64& s, i64& t) {
  if (b == 0) {
    s = (a >= 0) ? 1 : -1;
    t = 0;
    return a >= 0 ? a : -a;
  }
  i64 s1, t1;
  i64 g = egcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

i64 modinv(i64 a, i64 m) {  // gcd(a, m) = 1
  i64 s, t;
  egcd(((a % m) + m) % m, m, s, t);
  return ((s % m) + m) % m;
}

// Apply the unimodular substitution (x, y) -> (p x + q y, r x + s y).
QuadForm transform(const QuadForm& f, i64 p, i64 q, i64 r, i64 s) {
  QuadForm g;
  g.a = f.a * p * p + f.b * p * r + f.c * r * r;
  g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
  g.c = f.a * q * q + f.b * q * s + f.c * s * s;
  return g;
}

}  // namespace

QuadForm reduce(QuadForm f) {
  if (f.a <= 0 || f.disc() >= 0)
    throw std::invalid_argument("reduce: form must be positive definite");
  while (true) {
    // Normalize b into (-a, a].
    if (f.b > f.a || f.b <= -f.a) {
      i64 k = floordiv(f.a - f.b, 2 * f.a);
      f = transform(f, 1, k, 0, 1);
    }
    if (f.a > f.c) {
      f = QuadForm{f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
  return f;
}

int ClassGroup::index_of(const QuadForm& reduced) const {
  for (size_t i = 0; i < reduced_forms.size(); ++i)
    if (reduced_forms[i] == reduced) return static_cast<int>(i);
  throw std::logic_error("ClassGroup::index_of: form not in group");
}

bool ClassGroup::in_principal_genus(int idx) const {
  return std::find(principal_genus.begin(), principal_genus.end(), idx) !=
         principal_genus.end();
}

i64 ClassGroup::order_of(int idx) const {
  i64 n = 1;
  int cur = idx;
  while (cur != 0) {
    cur = composition[cur][idx];
    ++n;
  }
  return n;
}

namespace {

// Dirichlet composition of primitive forms of equal discriminant, after
// arranging coprime leading coefficients via a united representative.
QuadForm compose_forms(const QuadForm& f1, const QuadForm& f2in, i64 D) {
  // Find a primitive value of f2 coprime to 2 a1 D, so every congruence
  // below is solvable.
  QuadForm f2 = f2in;
  i64 m = 2 * f1.a * D;
  bool found = false;
  for (i64 bound = 4; bound <= 256 && !found; bound *= 2) {
    for (i64 x = -bound; x <= bound && !found; ++x) {
      for (i64 y = -bound; y <= bound && !found; ++y) {
        if (std::gcd(x, y) != 1) continue;
        i64 v = f2in.a * x * x + f2in.b * x * y + f2in.c * y * y;
        if (v <= 0 || std::gcd(v, m) != 1) continue;
        i64 s, t;
        egcd(x, y, s, t);  // x*s + y*t = 1
        f2 = transform(f2in, x, -t, y, s);
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("compose_forms: no united representative");
  // Now gcd(a1, a2) = 1 and b1 = b2 mod 2. Solve
  //   B = b1 (mod 2 a1),  B = b2 (mod 2 a2)
  // via B = b1 + 2 a1 t, t = (b2 - b1)/2 * a1^{-1} (mod a2).
  i64 a1 = f1.a, a2 = f2.a;
  i64 t = ((f2.b - f1.b) / 2) % a2;
  t = (t * modinv(a1 % a2, a2)) % a2;
  i64 B = f1.b + 2 * a1 * ((t % a2 + a2) % a2);
  i64 A = a1 * a2;
  i64 C = (B * B + D) / (4 * A);
  return reduce(QuadForm{A, B, C});
}

std::vector<i64> invariant_factors_of(const std::vector<std::vector<int>>& mul) {
  // Peel off a cyclic subgroup of maximal order and recurse on the quotient.
  size_t n = mul.size();
  if (n == 1) return {};
  auto order = [&](int x) {
    i64 o = 1;
    int c = x;
    while (c != 0) c = mul[c][x], ++o;
    return o;
  };
  i64 best = 1;
  int gen = 0;
  for (size_t i = 0; i < n; ++i) {
    i64 o = order(static_cast<int>(i));
    if (o > best) best = o, gen = static_cast<int>(i);
  }
  if (best == static_cast<i64>(n)) return {best};
  // Cosets of <gen>.
  std::vector<int> cyc;
  {
    int c = 0;
    do {
      cyc.push_back(c);
      c = mul[c][gen];
    } while (c != 0);
  }
  std::vector<int> coset_id(n, -1);
  std::vector<int> reps;
  for (size_t i = 0; i < n; ++i) {
    if (coset_id[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    for (int z : cyc) coset_id[mul[i][z]] = id;
  }
  std::vector<std::vector<int>> qmul(reps.size(), std::vector<int>(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      qmul[i][j] = coset_id[mul[reps[i]][reps[j]]];
  auto rest = invariant_factors_of(qmul);
  rest.push_back(best);
  return rest;  // ascending, each dividing the next
}

}  // namespace

ClassGroup class_group(i64 D, const PrimeTable& pt) {
  if (D <= 0 || !is_fundamental(-D))
    throw std::invalid_argument("class_group: -D must be a negative fundamental discriminant");
  ClassGroup G;
  G.D = Discriminant::make(-D, pt);

  for (i64 a = 1; 3 * a * a <= D; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if ((b * b + D) % (4 * a) != 0) continue;
      i64 c = (b * b + D) / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      i64 g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
      if (g != 1) continue;
      QuadForm f{a, b, c};
      if (reduce(f) == f) G.reduced_forms.push_back(f);
    }
  }
  // Principal form first.
  QuadForm principal = (D % 4 == 0) ? QuadForm{1, 0, D / 4}
                                    : QuadForm{1, 1, (D + 1) / 4};
  auto it = std::find(G.reduced_forms.begin(), G.reduced_forms.end(), principal);
  if (it == G.reduced_forms.end())
    throw std::logic_error("class_group: principal form not enumerated");
  std::iter_swap(G.reduced_forms.begin(), it);
  G.h = static_cast<i64>(G.reduced_forms.size());

  G.composition.assign(G.h, std::vector<int>(G.h, 0));
  for (i64 i = 0; i < G.h; ++i)
    for (i64 j = i; j < G.h; ++j) {
      QuadForm f = compose_forms(G.reduced_forms[i], G.reduced_forms[j], D);
      int k = G.index_of(f);
      G.composition[i][j] = k;
      G.composition[j][i] = k;
    }

  // Principal genus = image of squaring.
  std::vector<char> sq(G.h, 0);
  for (i64 i = 0; i < G.h; ++i) sq[G.composition[i][i]] = 1;
  for (i64 i = 0; i < G.h; ++i)
    if (sq[i]) G.principal_genus.push_back(static_cast<int>(i));
  G.e = 1;
  for (int i : G.principal_genus) G.e = std::lcm(G.e, G.order_of(i));

  G.genus_count = i64{1} << (G.D.omega > 0 ? G.D.omega - 1 : 0);
  if (G.h % static_cast<i64>(G.principal_genus.size()) != 0 ||
      G.h / static_cast<i64>(G.principal_genus.size()) != G.genus_count)
    throw std::logic_error("class_group: genus count mismatch");

  G.invariant_factors = invariant_factors_of(G.composition);
  return G;
}

std::vector<GenusCharacter> genus_characters(i64 D, const PrimeTable& pt) {
  if (D <= 0 || !is_fundamental(-D))
    throw std::invalid_argument("genus_characters: -D must be a negative fundamental discriminant");
  // Factor -D into prime discriminants: q* = (-1)^((q-1)/2) q for odd q | D,
  // plus a two-part in {-4, 8, -8} when D is even.
  std::vector<i64> pd;
  i64 rest = -D;
  auto dd = Discriminant::make(-D, pt);
  for (i64 q : dd.prime_divisors) {
    if (q == 2) continue;
    i64 qs = (q % 4 == 1) ? q : -q;
    pd.push_back(qs);
    rest /= qs;
  }
  if (rest != 1) pd.push_back(rest);  // the two-part
  // Partitions {S, complement} up to swap: pin the last prime discriminant
  // to the complement.
  std::vector<GenusCharacter> out;
  size_t w = pd.size();
  size_t nmask = size_t{1} << (w - 1);
  for (size_t mask = 0; mask < nmask; ++mask) {
    i64 d = 1;
    for (size_t i = 0; i + 1 < w; ++i)
      if ((mask >> i) & 1) d *= pd[i];
    GenusCharacter psi;
    i64 other = -D / d;
    if (d > 0) {
      psi.d1 = d;
      psi.d2 = other;
    } else {
      psi.d1 = other;
      psi.d2 = d;
    }
    out.push_back(psi);
  }
  // Trivial character (1, -D) first.
  std::stable_sort(out.begin(), out.end(), [](const GenusCharacter& x, const GenusCharacter& y) {
    return (x.d1 == 1) > (y.d1 == 1);
  });
  return out;
}

int psi_value(const GenusCharacter& psi, i64 p, i64 D) {
  if (kronecker(-D, p) == -1)
    throw std::invalid_argument("psi_value: inert prime");
  i64 ad1 = psi.d1 < 0 ? -psi.d1 : psi.d1;
  if (ad1 % p == 0) return kronecker(psi.d2, p);
  return kronecker(psi.d1, p);
}

int psi_on_form(const GenusCharacter& psi, const QuadForm& f, i64 D) {
  for (i64 bound = 4; bound <= 256; bound *= 2) {
    for (i64 x = -bound; x <= bound; ++x)
      for (i64 y = -bound; y <= bound; ++y) {
        i64 v = f.a * x * x + f.b * x * y + f.c * y * y;
        if (v <= 0 || std::gcd(v, 2 * D) != 1) continue;
        return kronecker(psi.d1, v);
      }
  }
  throw std::logic_error("psi_on_form: no represented value coprime to 2D");
}

std::optional<int> represent_prime(const ClassGroup& G, i64 p) {
  i64 D = -G.D.d;
  if (kronecker(-D, p) == -1) return std::nullopt;
  for (i64 b = 0; b <= p; ++b) {
    if ((b * b + D) % (4 * p) != 0) continue;
    i64 c = (b * b + D) / (4 * p);
    return G.index_of(reduce(QuadForm{p, b, c}));
  }
  throw std::logic_error("represent_prime: no square root found");
}

PrincipalGenusReport principal_genus_min_prime(const ClassGroup& G,
                                               const PrimeTable& pt) {
  PrincipalGenusReport rep;
  i64 D = -G.D.d;
  double bound = std::pow(D / 4.0, 1.0 / static_cast<double>(G.e));
  for (i64 p : pt.primes()) {
    if (static_cast<double>(p) >= bound) break;
    if (D % p == 0) continue;
    rep.primes_checked.push_back(p);
    for (int idx : G.principal_genus) {
      const QuadForm& f = G.reduced_forms[idx];
      i64 xmax = static_cast<i64>(std::sqrt(4.0 * f.c * p / D)) + 1;
      i64 ymax = static_cast<i64>(std::sqrt(4.0 * f.a * p / D)) + 1;
      for (i64 x = -xmax; x <= xmax; ++x)
        for (i64 y = -ymax; y <= ymax; ++y)
          if (f.a * x * x + f.b * x * y + f.c * y * y == p) {
            rep.pass = false;
            rep.witness = p;
          }
    }
  }
  return rep;
}

}  // namespace twistlab
