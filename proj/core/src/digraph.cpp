#include "joindet/digraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace joindet {

Digraph::Digraph(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
}

void Digraph::add_edge(int from, int to) {
  if (from < 1 || from > order_ || to < 1 || to > order_)
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(from) + " -> " +
                                std::to_string(to));
  if (from == to)
    throw std::invalid_argument("loops are not allowed: vertex " +
                                std::to_string(from));
  if (!edges_.insert({from, to}).second)
    throw std::invalid_argument("duplicate edge: " + std::to_string(from) +
                                " -> " + std::to_string(to));
}

void Digraph::add_undirected(int u, int v) {
  add_edge(u, v);
  add_edge(v, u);
}

int resolve_index(int index, int order) {
  if (index == 0) throw std::invalid_argument("vertex index 0 is not valid");
  const int label = index > 0 ? index : order + 1 + index;
  if (label < 1 || label > order)
    throw std::invalid_argument("vertex index " + std::to_string(index) +
                                " does not resolve into 1.." +
                                std::to_string(order));
  return label;
}

Digraph make_complete(int order) {
  if (order < 1) throw std::invalid_argument("complete graph needs order >= 1");
  Digraph g(order);
  for (int u = 1; u <= order; ++u)
    for (int v = u + 1; v <= order; ++v) g.add_undirected(u, v);
  return g;
}

Digraph make_path(int order, const std::vector<int>& labels) {
  if (order < 1) throw std::invalid_argument("path graph needs order >= 1");
  std::vector<int> seq = labels;
  if (seq.empty()) {
    seq.resize(order);
    for (int i = 0; i < order; ++i) seq[i] = i + 1;
  } else {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < order; ++i)
      if (i >= static_cast<int>(sorted.size()) || sorted[i] != i + 1)
        throw std::invalid_argument("labels must be a permutation of 1..order");
  }
  Digraph g(order);
  for (int i = 0; i + 1 < order; ++i) g.add_undirected(seq[i], seq[i + 1]);
  return g;
}

Digraph make_edgeless(int order) {
  if (order < 1) throw std::invalid_argument("graph needs order >= 1");
  return Digraph(order);
}

Digraph disjoint_union(const Digraph& g, const Digraph& h) {
  Digraph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.from, e.to);
  const int shift = g.order();
  for (const Edge& e : h.edges()) out.add_edge(e.from + shift, e.to + shift);
  return out;
}

Digraph attach_handles(const Digraph& g,
                       const std::vector<std::pair<int, int>>& handles) {
  const int base = g.order();
  Digraph out(base + static_cast<int>(handles.size()));
  for (const Edge& e : g.edges()) out.add_edge(e.from, e.to);
  int w = base;
  for (const auto& [u, v] : handles) {
    const int src = resolve_index(u, base);
    const int dst = resolve_index(v, base);
    ++w;
    out.add_edge(src, w);
    out.add_edge(w, dst);
  }
  return out;
}

Digraph delete_vertices(const Digraph& g, const std::vector<int>& vertices) {
  std::set<int> doomed;
  for (int v : vertices)
    if (!doomed.insert(resolve_index(v, g.order())).second)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " deleted twice");
  std::vector<int> relabel(g.order() + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.order(); ++v)
    if (!doomed.count(v)) relabel[v] = ++next;
  Digraph out(next);
  for (const Edge& e : g.edges())
    if (relabel[e.from] && relabel[e.to])
      out.add_edge(relabel[e.from], relabel[e.to]);
  return out;
}

Digraph j_join(const Digraph& g, const Digraph& h, int arity, bool strict) {
  if (arity < 1) throw std::invalid_argument("join arity must be >= 1");
  const int need = strict ? 2 * arity : arity;
  if (g.order() < need || h.order() < need)
    throw std::invalid_argument("join operands need order >= " +
                                std::to_string(need));
  Digraph out = disjoint_union(g, h);
  const int m = g.order();
  for (int i = 1; i <= arity; ++i) out.add_undirected(m + 1 - i, m + i);
  return out;
}

}  // namespace joindet
