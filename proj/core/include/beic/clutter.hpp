#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beic/graph.hpp"
#include "beic/vertex_set.hpp"

namespace beic {

/// Ordering used for canonical label tables: labels that are plain decimal
/// integers sort first, by value (ties broken bytewise), followed by all
/// other labels in bytewise order. This keeps {"1", ..., "12"} in numeric
/// order while remaining a total order for arbitrary strings.
bool label_less(const std::string& a, const std::string& b);

/// The generator index pair (i, j), i < j, standing for x_i*y_j - x_j*y_i.
struct Binomial {
  VertexId i;
  VertexId j;
  bool operator==(const Binomial&) const = default;
};

/// A clutter: a finite vertex set together with an antichain of nonempty
/// edges (no edge contains another). Vertices carry external string labels;
/// internally they are dense ids 0..n-1 in canonical label order, and edges
/// are kept sorted lexicographically. Instances are immutable values; all
/// operations on them are pure functions.
class Clutter {
 public:
  Clutter() = default;

  /// Canonicalizing constructor. With `minimize` set, edges contained in
  /// other edges are dropped (the maximal elements are kept); otherwise a
  /// proper containment is a NotAnAntichain error. Exact duplicate edges
  /// collapse either way. Labels may include vertices that occur in no edge.
  static Clutter make(std::vector<std::string> labels,
                      const std::vector<std::vector<std::string>>& edges,
                      bool minimize = false);

  /// Same canonicalization, but edges arrive as id sets over an already
  /// sorted label table.
  static Clutter from_sets(std::vector<std::string> sorted_labels,
                           std::vector<VertexSet> edges, bool minimize = false);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> vertex(const std::string& label) const;
  /// Resolve a label or raise UnknownVertex.
  VertexId require_vertex(const std::string& label) const;

  const std::vector<VertexSet>& edges() const { return edges_; }
  std::vector<std::vector<std::string>> edge_labels() const;
  std::vector<std::string> labels_of(const VertexSet& s) const;

  VertexSet all_vertices() const { return VertexSet::full(labels_.size()); }

  bool operator==(const Clutter&) const = default;

 private:
  std::vector<std::string> labels_;  // canonical order
  std::vector<VertexSet> edges_;     // antichain, lexicographically sorted
};

/// Graph on the same vertices whose edges are all pairs lying together in
/// some clutter edge.
Graph associated_graph(const Clutter& c);

/// One binomial per associated-graph edge, sorted by (i, j).
std::vector<Binomial> binomial_generators(const Clutter& c);

/// Connectivity is read off the associated graph; the clutter with no
/// vertices counts as connected.
bool is_connected(const Clutter& c);

/// Connected components as sub-clutters (each keeps exactly the edges lying
/// inside it), ordered by smallest canonical vertex.
std::vector<Clutter> components(const Clutter& c);

/// Remove a vertex; the new edges are the maximal elements of {e \ {v}}.
Clutter delete_vertex(const Clutter& c, VertexId v);
Clutter delete_vertex(const Clutter& c, const std::string& label);

/// Induced sub-clutter on the KEPT set: edges are the maximal elements of
/// the restrictions {e ∩ kept}, empty restrictions dropped.
Clutter induced(const Clutter& c, const VertexSet& kept);

/// Union over the shared label space; the edge set is the set of maximal
/// elements of the combined edge sets.
Clutter clutter_union(const Clutter& a, const Clutter& b);

/// Union requiring disjoint label sets (LabelCollision otherwise).
Clutter disjoint_union(const Clutter& a, const Clutter& b);

/// cone(v, D): add a fresh vertex joined to every vertex of D by a 2-element
/// edge, keeping E(D). Singleton edges {i} of D are absorbed by {v, i}.
Clutter cone(const std::string& apex_label, const Clutter& d);

/// Cut point: deleting v increases the number of connected components of the
/// associated graph.
bool is_cut_point(const Clutter& c, VertexId v);
VertexSet cut_points(const Clutter& c);

/// True when every pair of distinct vertices lies together in some edge.
bool is_complete(const Clutter& c);

VertexSet vertex_set_of(const Clutter& c, const std::vector<std::string>& labels);

}  // namespace beic
