#include "joindet/random_graphs.hpp"

#include <stdexcept>

namespace joindet {

Digraph random_digraph(std::mt19937_64& rng, int order, int density_permille) {
  Digraph g(order);
  for (int u = 1; u <= order; ++u)
    for (int v = 1; v <= order; ++v)
      if (u != v && rng() % 1000 < static_cast<unsigned>(density_permille))
        g.add_edge(u, v);
  return g;
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(
                                   hi - lo + 1));
}

}  // namespace joindet
