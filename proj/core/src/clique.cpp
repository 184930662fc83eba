#include "beic/clique.hpp"

#include <algorithm>

#include "beic/errors.hpp"

namespace beic {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<Facet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back({std::move(r)});
    return;
  }
  // pivot: vertex of P ∪ X with the most neighbors in P
  int pivot = -1;
  std::size_t best = 0;
  for (VertexId u : p | x) {
    const std::size_t score = (g.neighbors(u) & p).count();
    if (pivot < 0 || score > best) {
      pivot = static_cast<int>(u);
      best = score;
    }
  }
  const VertexSet candidates = p - g.neighbors(static_cast<VertexId>(pivot));
  for (VertexId v : candidates) {
    VertexSet r2 = r;
    r2.set(v);
    bron_kerbosch(g, std::move(r2), p & g.neighbors(v), x & g.neighbors(v), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

bool is_clique(const Clutter& c, const VertexSet& d) {
  if (d.universe_size() != c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex set does not match the clutter");
  }
  const Graph g = associated_graph(c);
  const auto members = d.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

std::vector<Facet> maximal_cliques(const Graph& g, std::size_t budget) {
  if (g.vertex_count() > budget) {
    fail(ErrorKind::ComplexityGuard,
         "clique enumeration limited to " + std::to_string(budget) + " vertices");
  }
  std::vector<Facet> out;
  if (g.vertex_count() == 0) return out;
  bron_kerbosch(g, VertexSet(g.vertex_count()), VertexSet::full(g.vertex_count()),
                VertexSet(g.vertex_count()), out);
  std::sort(out.begin(), out.end(),
            [](const Facet& a, const Facet& b) { return lex_less(a.members, b.members); });
  return out;
}

std::vector<Facet> maximal_cliques(const Clutter& c, std::size_t budget) {
  return maximal_cliques(associated_graph(c), budget);
}

VertexSet free_vertices(const Clutter& c, std::size_t budget) {
  std::vector<int> facet_count(c.vertex_count(), 0);
  for (const auto& f : maximal_cliques(c, budget)) {
    for (VertexId v : f.members) ++facet_count[v];
  }
  VertexSet out(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (facet_count[v] == 1) out.set(v);
  }
  return out;
}

bool is_free(const Clutter& c, VertexId v, std::size_t budget) {
  if (v >= c.vertex_count()) fail(ErrorKind::UnknownVertex, "vertex id out of range");
  return free_vertices(c, budget).test(v);
}

}  // namespace beic
