#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "joindet/digraph.hpp"
#include "joindet/int_matrix.hpp"
#include "joindet/pairs.hpp"

namespace joindet {

// det(j_join(g, h, arity)) evaluated as the signed sum of products of
// modified determinants, without materializing the join.
mpz_class decompose_join_det(const Digraph& g, const Digraph& h, int arity,
                             bool strict = false);

// The k x k matrix of all modified determinants, k = C(2*arity, arity):
// entry (i,l) applies pair i to the head of g and pair l, conjugated,
// to its tail. Requires order >= 2*arity. workers > 1 spreads the k^2
// determinants over that many threads; the result is identical.
IntMatrix phi(const Digraph& g, int arity, int workers = 1);

// (phi(g) E phi(h))[0][0]; equals the join determinant.
mpz_class join_det_via_phi(const Digraph& g, const Digraph& h, int arity);

// (phi(g1) E phi(g2) E ... phi(gt))[0][0]; phi is computed once per
// distinct factor.
mpz_class chain_det(const std::vector<Digraph>& graphs, int arity);

// Determinant of the chain with n joins (n+1 copies) of g, via
// sandwich powering in O(log n) matrix products.
mpz_class nfold_det(const Digraph& g, unsigned long long n, int arity);

// E * phi(g); multiplicative: phi_monoid(g join h) =
// phi_monoid(g) * phi_monoid(h).
IntMatrix phi_monoid(const Digraph& g, int arity);

// True iff every modified determinant of g and h agrees, i.e.
// phi(g) == phi(h).
bool equivalent(const Digraph& g, const Digraph& h, int arity);

struct ClassLabel {
  enum class Kind { Identity, NClass, Zero, Invertible, Other };

  Kind kind = Kind::Other;
  mpz_class value;  // n for NClass, the unit (+1/-1) for Invertible

  static ClassLabel identity() { return {Kind::Identity, 1}; }
  static ClassLabel zero() { return {Kind::Zero, 0}; }
  static ClassLabel n_class(const mpz_class& n);
  static ClassLabel invertible(int unit) { return {Kind::Invertible, unit}; }
  static ClassLabel other() { return {Kind::Other, 0}; }

  std::string to_string() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// Identity when phi(g) = E, NClass(n) when phi(g) = n*E, Invertible
// when det(E*phi(g)) is a unit, Other otherwise.
ClassLabel classify(const Digraph& g, int arity);

// Smallest all-P2 representative with phi = E: a base of det (-1)^arity
// (P2 for odd arity, P2+P2 for even) in the middle labels and one
// boundary P2 {i, order+1-i} per join slot.
Digraph make_identity(int arity);

// K_{n+1} in the middle (plus one extra P2 when n+arity is odd) with
// the same boundary P2 slots; phi = n*E.
Digraph make_n_class(long n, int arity);

}  // namespace joindet
