#pragma once

#include <gmpxx.h>

#include "joindet/digraph.hpp"

namespace joindet {

// Signed Leibniz expansion of the adjacency determinant. Factorial
// cost, so capped at order 10.
mpz_class det_permutations(const Digraph& g);

// Determinant as a sum over spanning sets of vertex-disjoint directed
// cycles, each cover contributing (-1)^(order - #cycles). Capped at
// order 10.
mpz_class det_cycle_covers(const Digraph& g);

}  // namespace joindet
