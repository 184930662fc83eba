#include "beic/clutter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "beic/errors.hpp"

namespace beic {

namespace {

bool is_decimal(const std::string& s) {
  if (s.empty() || s.size() > 19) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  const bool na = is_decimal(a), nb = is_decimal(b);
  if (na != nb) return na;  // numeric labels first
  if (na) {
    const std::uint64_t va = std::stoull(a), vb = std::stoull(b);
    if (va != vb) return va < vb;
  }
  return a < b;
}

Clutter Clutter::make(std::vector<std::string> labels,
                      const std::vector<std::vector<std::string>>& edges,
                      bool minimize) {
  std::sort(labels.begin(), labels.end(), label_less);
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] == labels[i]) {
      fail(ErrorKind::DuplicateLabel, "duplicate vertex label '" + labels[i] + "'");
    }
  }
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& edge : edges) {
    VertexSet s(labels.size());
    for (const auto& name : edge) {
      auto it = std::lower_bound(labels.begin(), labels.end(), name, label_less);
      if (it == labels.end() || *it != name) {
        fail(ErrorKind::UnknownLabelInEdge,
             "edge label '" + name + "' is not a declared vertex");
      }
      s.set(static_cast<VertexId>(it - labels.begin()));
    }
    sets.push_back(std::move(s));
  }
  return from_sets(std::move(labels), std::move(sets), minimize);
}

Clutter Clutter::from_sets(std::vector<std::string> sorted_labels,
                           std::vector<VertexSet> edges, bool minimize) {
  for (const auto& e : edges) {
    if (e.empty()) fail(ErrorKind::EmptyEdge, "edges must be nonempty");
  }
  std::sort(edges.begin(), edges.end(), lex_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Antichain: drop contained edges under `minimize`, reject them otherwise.
  std::vector<VertexSet> kept;
  kept.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < edges.size() && !contained; ++j) {
      contained = i != j && edges[i].is_subset_of(edges[j]);
    }
    if (contained && !minimize) {
      fail(ErrorKind::NotAnAntichain, "edge set contains a nested pair of edges");
    }
    if (!contained) kept.push_back(edges[i]);
  }

  Clutter c;
  c.labels_ = std::move(sorted_labels);
  c.edges_ = std::move(kept);
  return c;
}

std::optional<VertexId> Clutter::vertex(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label, label_less);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId Clutter::require_vertex(const std::string& label) const {
  auto v = vertex(label);
  if (!v) fail(ErrorKind::UnknownVertex, "unknown vertex '" + label + "'");
  return *v;
}

std::vector<std::vector<std::string>> Clutter::edge_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(labels_of(e));
  return out;
}

std::vector<std::string> Clutter::labels_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.count());
  for (VertexId v : s) out.push_back(labels_[v]);
  return out;
}

Graph associated_graph(const Clutter& c) {
  Graph g(c.vertex_count());
  for (const auto& e : c.edges()) {
    const auto members = e.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        g.add_edge(members[i], members[j]);
      }
    }
  }
  return g;
}

std::vector<Binomial> binomial_generators(const Clutter& c) {
  std::vector<Binomial> out;
  for (auto [u, v] : associated_graph(c).edges()) out.push_back({u, v});
  return out;
}

bool is_connected(const Clutter& c) { return associated_graph(c).is_connected(); }

std::vector<Clutter> components(const Clutter& c) {
  std::vector<Clutter> out;
  for (const auto& comp : associated_graph(c).components()) {
    out.push_back(induced(c, comp));
  }
  return out;
}

Clutter induced(const Clutter& c, const VertexSet& kept) {
  if (kept.universe_size() != c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex set does not match the clutter");
  }
  const auto members = kept.members();
  std::vector<int> rank(c.vertex_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    rank[members[i]] = static_cast<int>(i);
    labels.push_back(c.label(members[i]));
  }
  std::vector<VertexSet> edges;
  for (const auto& e : c.edges()) {
    VertexSet r(members.size());
    for (VertexId v : e) {
      if (rank[v] >= 0) r.set(static_cast<VertexId>(rank[v]));
    }
    if (!r.empty()) edges.push_back(std::move(r));
  }
  return Clutter::from_sets(std::move(labels), std::move(edges), /*minimize=*/true);
}

Clutter delete_vertex(const Clutter& c, VertexId v) {
  if (v >= c.vertex_count()) fail(ErrorKind::UnknownVertex, "vertex id out of range");
  VertexSet kept = c.all_vertices();
  kept.reset(v);
  return induced(c, kept);
}

Clutter delete_vertex(const Clutter& c, const std::string& label) {
  return delete_vertex(c, c.require_vertex(label));
}

Clutter clutter_union(const Clutter& a, const Clutter& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<std::vector<std::string>> edges = a.edge_labels();
  auto be = b.edge_labels();
  edges.insert(edges.end(), be.begin(), be.end());
  return Clutter::make(std::move(labels), edges, /*minimize=*/true);
}

Clutter disjoint_union(const Clutter& a, const Clutter& b) {
  for (const auto& name : b.labels()) {
    if (a.vertex(name)) {
      fail(ErrorKind::LabelCollision, "label '" + name + "' occurs on both sides");
    }
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<std::vector<std::string>> edges = a.edge_labels();
  auto be = b.edge_labels();
  edges.insert(edges.end(), be.begin(), be.end());
  return Clutter::make(std::move(labels), edges, /*minimize=*/false);
}

Clutter cone(const std::string& apex_label, const Clutter& d) {
  if (d.vertex(apex_label)) {
    fail(ErrorKind::LabelCollision, "apex '" + apex_label + "' is already a vertex");
  }
  std::vector<std::string> labels = d.labels();
  labels.push_back(apex_label);
  std::vector<std::vector<std::string>> edges = d.edge_labels();
  for (const auto& name : d.labels()) {
    edges.push_back({apex_label, name});
  }
  // Minimization only ever removes singleton edges {i} of the base, which
  // are absorbed by the new edge {apex, i}.
  return Clutter::make(std::move(labels), edges, /*minimize=*/true);
}

bool is_cut_point(const Clutter& c, VertexId v) {
  if (v >= c.vertex_count()) fail(ErrorKind::UnknownVertex, "vertex id out of range");
  const Graph g = associated_graph(c);
  const VertexSet all = VertexSet::full(c.vertex_count());
  VertexSet rest = all;
  rest.reset(v);
  return g.component_count(rest) > g.component_count(all);
}

VertexSet cut_points(const Clutter& c) {
  const Graph g = associated_graph(c);
  const VertexSet all = VertexSet::full(c.vertex_count());
  const std::size_t base = g.component_count(all);
  VertexSet out(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    VertexSet rest = all;
    rest.reset(v);
    if (g.component_count(rest) > base) out.set(v);
  }
  return out;
}

bool is_complete(const Clutter& c) { return associated_graph(c).is_complete(); }

VertexSet vertex_set_of(const Clutter& c, const std::vector<std::string>& labels) {
  VertexSet s(c.vertex_count());
  for (const auto& name : labels) s.set(c.require_vertex(name));
  return s;
}

}  // namespace beic
