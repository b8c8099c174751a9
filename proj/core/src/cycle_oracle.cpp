#include "joindet/cycle_oracle.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace joindet {

namespace {

constexpr int kMaxOrder = 10;

std::array<unsigned, kMaxOrder> out_neighbors(const Digraph& g) {
  std::array<unsigned, kMaxOrder> adj{};
  for (const Edge& e : g.edges()) adj[e.from - 1] |= 1u << (e.to - 1);
  return adj;
}

void check_order(const Digraph& g) {
  if (g.order() > kMaxOrder)
    throw std::invalid_argument("oracle determinants are capped at order 10");
}

struct CoverCounter {
  int n = 0;
  std::array<unsigned, kMaxOrder> adj{};
  long long total = 0;

  void cover(unsigned pool, int cycles) {
    if (pool == 0) {
      total += ((n - cycles) % 2 == 0) ? 1 : -1;
      return;
    }
    const int start = std::countr_zero(pool);
    extend(start, start, pool & ~(1u << start), cycles);
  }

  void extend(int start, int cur, unsigned pool, int cycles) {
    if (cur != start && (adj[cur] >> start) & 1u) cover(pool, cycles + 1);
    unsigned nexts = adj[cur] & pool;
    while (nexts) {
      const int v = std::countr_zero(nexts);
      nexts &= nexts - 1;
      extend(start, v, pool & ~(1u << v), cycles);
    }
  }
};

long long perm_expand(const std::array<unsigned, kMaxOrder>& adj, int n,
                      int row, unsigned used) {
  if (row == n) return 1;
  long long sum = 0;
  int parity = 1;
  for (int c = 0; c < n; ++c) {
    if ((used >> c) & 1u) continue;
    if ((adj[row] >> c) & 1u) sum += parity * perm_expand(adj, n, row + 1, used | (1u << c));
    parity = -parity;
  }
  return sum;
}

}  // namespace

mpz_class det_permutations(const Digraph& g) {
  check_order(g);
  if (g.order() == 0) return 1;
  return mpz_class(
      static_cast<long>(perm_expand(out_neighbors(g), g.order(), 0, 0)));
}

mpz_class det_cycle_covers(const Digraph& g) {
  check_order(g);
  if (g.order() == 0) return 1;
  CoverCounter counter;
  counter.n = g.order();
  counter.adj = out_neighbors(g);
  counter.cover((1u << g.order()) - 1, 0);
  return mpz_class(static_cast<long>(counter.total));
}

}  // namespace joindet
