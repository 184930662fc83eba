#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "beic/vertex_set.hpp"

namespace beic {

/// Simple undirected graph on dense vertex ids with bitset adjacency rows.
/// No self-loops; adjacency is kept symmetric by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  std::size_t vertex_count() const { return n_; }

  void add_edge(VertexId u, VertexId v) {
    if (u == v) return;
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].count(); }

  std::size_t edge_count() const;
  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Vertices reachable from `start` while staying inside `within`
  /// (`start` must be a member of `within`).
  VertexSet reach(VertexId start, const VertexSet& within) const;

  /// Connected components of the subgraph induced on `within`, ordered by
  /// their smallest member.
  std::vector<VertexSet> components(const VertexSet& within) const;
  std::vector<VertexSet> components() const {
    return components(VertexSet::full(n_));
  }
  std::size_t component_count(const VertexSet& within) const;

  /// The empty graph counts as connected (zero components).
  bool is_connected() const {
    return component_count(VertexSet::full(n_)) <= 1;
  }
  bool is_complete() const;
  /// Adjacent to every other vertex.
  bool is_universal(VertexId v) const {
    VertexSet others = VertexSet::full(n_);
    others.reset(v);
    return others.is_subset_of(adj_[v]);
  }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Chordality test: maximum-cardinality search followed by the standard
/// perfect-elimination check. Works on disconnected graphs.
bool is_chordal(const Graph& g);

}  // namespace beic
