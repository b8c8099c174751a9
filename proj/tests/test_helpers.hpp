#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "joindet/digraph.hpp"
#include "joindet/int_matrix.hpp"
#include "joindet/pairs.hpp"

namespace testutil {

// Laplace expansion along the first row; exponential, for cross-checks
// on small matrices only.
inline mpz_class det_cofactor(const joindet::IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  mpz_class sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a.at(0, c) == 0) continue;
    joindet::IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, col++) = a.at(i, j);
      }
    }
    const mpz_class term = a.at(0, c) * det_cofactor(minor);
    if (c % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// Independent allowability test: endpoints inside {1..arity} minus
// removals, each vertex used at most once, handles pairwise strictly
// comparable in both coordinates.
inline bool allowable_reference(const std::vector<std::pair<int, int>>& handles,
                                int arity, const std::set<int>& removals) {
  std::set<int> used;
  for (const auto& [u, v] : handles) {
    for (int x : {u, v}) {
      if (x < 1 || x > arity || removals.count(x)) return false;
      if (!used.insert(x).second) return false;
    }
  }
  for (std::size_t i = 0; i < handles.size(); ++i)
    for (std::size_t k = i + 1; k < handles.size(); ++k) {
      const bool less = handles[i].first < handles[k].first &&
                        handles[i].second < handles[k].second;
      const bool greater = handles[i].first > handles[k].first &&
                           handles[i].second > handles[k].second;
      if (!less && !greater) return false;
    }
  return true;
}

// Every allowable pair for the arity, produced by filtering all handle
// subsets, as (sorted removals, source-sorted handles). Exponential in
// arity; fine through arity 4.
inline std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>>
brute_force_pairs(int arity) {
  std::vector<std::pair<int, int>> all_handles;
  for (int u = 1; u <= arity; ++u)
    for (int v = 1; v <= arity; ++v)
      if (u != v) all_handles.emplace_back(u, v);

  std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> out;
  for (unsigned rm = 0; rm < (1u << arity); ++rm) {
    std::set<int> removals;
    for (int i = 1; i <= arity; ++i)
      if ((rm >> (i - 1)) & 1u) removals.insert(i);
    const std::size_t hn = all_handles.size();
    for (unsigned long long hm = 0; hm < (1ull << hn); ++hm) {
      std::vector<std::pair<int, int>> handles;
      for (std::size_t i = 0; i < hn; ++i)
        if ((hm >> i) & 1ull) handles.push_back(all_handles[i]);
      if (!allowable_reference(handles, arity, removals)) continue;
      std::sort(handles.begin(), handles.end());
      out.emplace(std::vector<int>(removals.begin(), removals.end()), handles);
    }
  }
  return out;
}

inline joindet::Digraph relabeled(const joindet::Digraph& g,
                                  const std::vector<int>& perm) {
  joindet::Digraph out(g.order());
  for (const joindet::Edge& e : g.edges())
    out.add_edge(perm[e.from - 1], perm[e.to - 1]);
  return out;
}

inline joindet::Digraph self_chain(const joindet::Digraph& g,
                                   unsigned long long joins, int arity) {
  joindet::Digraph acc = g;
  for (unsigned long long i = 0; i < joins; ++i)
    acc = joindet::j_join(acc, g, arity);
  return acc;
}

}  // namespace testutil
