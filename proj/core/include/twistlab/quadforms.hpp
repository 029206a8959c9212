#pragma once
// Binary quadratic forms of negative discriminant: Gauss reduction,
// composition, class-group structure, genus characters, and the
// principal-genus representation search.

#include <optional>
#include <vector>

#include "twistlab/arith.hpp"

namespace twistlab {

// Positive-definite form a x^2 + b x y + c y^2 with b^2 - 4ac = -D < 0.
struct QuadForm {
  i64 a = 1, b = 0, c = 0;
  i64 disc() const { return b * b - 4 * a * c; }
  bool operator==(const QuadForm&) const = default;
};

// Unique reduced representative of the proper equivalence class.
QuadForm reduce(QuadForm f);

struct ClassGroup {
  Discriminant D;                       // stores -D (negative fundamental)
  std::vector<QuadForm> reduced_forms;  // reduced_forms[0] is the principal form
  i64 h = 0;                            // class number
  std::vector<std::vector<int>> composition;  // h x h Cayley table
  std::vector<int> principal_genus;     // indices of the squares C^2
  i64 e = 1;                            // exponent of the principal genus
  i64 genus_count = 1;                  // 2^(omega-1)
  std::vector<i64> invariant_factors;   // d_1 | d_2 | ... | d_k, product = h

  int compose(int i, int j) const { return composition[i][j]; }
  int index_of(const QuadForm& reduced) const;
  bool in_principal_genus(int idx) const;
  i64 order_of(int idx) const;
};

// Enumerates reduced forms and builds the full structure. -D must be a
// negative fundamental discriminant.
ClassGroup class_group(i64 D, const PrimeTable& pt);

// Factorization -D = d1 * d2 into fundamental discriminants of opposite
// sign; d1 is the positive factor (d1 = 1 for the trivial character).
struct GenusCharacter {
  i64 d1 = 1, d2 = 0;
};

// All 2^(omega-1) genus characters, trivial one first.
std::vector<GenusCharacter> genus_characters(i64 D, const PrimeTable& pt);

// psi evaluated at a prime with lambda(p) >= 1: chi_{d1}(p) if p does not
// divide d1, else chi_{d2}(p). Throws for inert p.
int psi_value(const GenusCharacter& psi, i64 p, i64 D);

// psi evaluated on a form class, via a represented value coprime to 2D.
int psi_on_form(const GenusCharacter& psi, const QuadForm& f, i64 D);

// Reduced class representing p (lambda(p) >= 1), or nullopt if inert.
// The +-b ambiguity is resolved by 0 <= b <= p; genus characters do not
// distinguish a class from its inverse, so either root is acceptable.
std::optional<int> represent_prime(const ClassGroup& G, i64 p);

// Exhaustive check that no prime p < (D/4)^(1/e) coprime to D is
// represented by any principal-genus form.
struct PrincipalGenusReport {
  bool pass = true;
  std::vector<i64> primes_checked;
  std::optional<i64> witness;  // a represented prime, if the check fails
};
PrincipalGenusReport principal_genus_min_prime(const ClassGroup& G,
                                               const PrimeTable& pt);

}  // namespace twistlab
