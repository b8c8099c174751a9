#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

namespace joindet {

// Directed edge between 1-based vertex labels.
struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple labeled digraph on vertices {1..order}. No loops, no parallel
// edges. Instances are cheap to copy; every operation below returns a
// new graph instead of mutating in place.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);

  int order() const { return order_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(int from, int to) const { return edges_.count({from, to}) != 0; }

  void add_edge(int from, int to);
  void add_undirected(int u, int v);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::set<Edge> edges_;
};

// Maps a signed index onto {1..order}: positive labels count from the
// first vertex, negative ones from the last (-1 -> order, -2 -> order-1).
int resolve_index(int index, int order);

Digraph make_complete(int order);

// Bidirected path; the i-th position along the path carries labels[i]
// (identity labeling when labels is empty).
Digraph make_path(int order, const std::vector<int>& labels = {});

Digraph make_edgeless(int order);

Digraph disjoint_union(const Digraph& g, const Digraph& h);

// Appends one new vertex w per handle [u, v] together with the edges
// u -> w and w -> v. Endpoints may be signed; they always resolve
// against the order the graph had before the first handle was added.
Digraph attach_handles(const Digraph& g,
                       const std::vector<std::pair<int, int>>& handles);

// Removes the given vertices (signed indices) and relabels the rest
// contiguously, preserving relative order.
Digraph delete_vertices(const Digraph& g, const std::vector<int>& vertices);

// Disjoint union plus bidirected edges {order(g)+1-i, order(g)+i} for
// i = 1..arity, gluing the tail of g to the head of h. Both operands
// need order >= arity; strict mode demands order >= 2*arity.
Digraph j_join(const Digraph& g, const Digraph& h, int arity,
               bool strict = false);

}  // namespace joindet
