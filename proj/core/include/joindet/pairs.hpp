#pragma once

#include <string>
#include <utility>
#include <vector>

#include "joindet/digraph.hpp"
#include "joindet/int_matrix.hpp"

namespace joindet {

// One term of the join decomposition: a set R of vertices to remove
// and an allowable set B of handles, both over labels {1..arity}.
// Canonical pairs hold positive labels; conjugated pairs hold the
// negated labels and resolve only when applied to a concrete graph.
struct ModPair {
  std::vector<int> removals;
  std::vector<std::pair<int, int>> handles;

  friend bool operator==(const ModPair&, const ModPair&) = default;
};

// True iff all endpoints lie in {1..arity} minus the removal set, no
// vertex is used twice, and every two handles are strictly
// component-wise comparable.
bool is_allowable(const std::vector<std::pair<int, int>>& handles, int arity,
                  const std::vector<int>& removals);

// All C(2*arity, arity) allowable pairs in canonical order: |B|
// ascending, then R as a bitmask ascending, then the handle sequence
// in reverse lexicographic order. Index 0 is always (∅,∅).
// Bounded to arity <= 12; the table size is the central binomial
// coefficient, which passes 2.7 million there.
std::vector<ModPair> enumerate_pairs(int arity);

// (R,B) -> ({-i : i in R}, {[-r,-c] : [c,r] in B}): every handle is
// reversed and every label negated. Involutive.
ModPair conjugate_pair(const ModPair& p);

// (-1)^(|R|+|B|).
int pair_sign(const ModPair& p);

// Diagonal matrix of pair signs in canonical order.
IntMatrix build_sign_matrix(int arity);

// Attaches direct.handles then conj's conjugated handles (endpoints
// resolved against the original order), then removes direct.removals
// together with conj's negated removals. Overlap between the two
// resolved removal sets is a precondition violation and throws.
Digraph apply_modification(const Digraph& g, const ModPair& direct,
                           const ModPair& conj);

// "(∅,∅)", "({1,2},∅)", "(∅,{[2,1]})", ...
std::string format_pair(const ModPair& p);

// "+1" or "−1" (U+2212) for the pair's sign.
std::string format_pair_sign(const ModPair& p);

}  // namespace joindet
