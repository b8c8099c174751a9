#pragma once

#include <random>

#include "joindet/digraph.hpp"

namespace joindet {

// Digraph on the given order where each ordered pair carries an edge
// with probability density_permille/1000. Same engine state, same
// graph, on every platform (draws bypass std::distributions, whose
// output is implementation-defined).
Digraph random_digraph(std::mt19937_64& rng, int order, int density_permille);

// Uniform draw from [lo, hi].
int random_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace joindet
