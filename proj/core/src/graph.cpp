#include "beic/graph.hpp"

#include <algorithm>

namespace beic {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::reach(VertexId start, const VertexSet& within) const {
  VertexSet seen(n_);
  seen.set(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(n_);
    for (VertexId u : frontier) next |= adj_[u];
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  for (int v = rest.first(); v >= 0; v = rest.first()) {
    VertexSet comp = reach(static_cast<VertexId>(v), rest);
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t Graph::component_count(const VertexSet& within) const {
  std::size_t count = 0;
  VertexSet rest = within;
  for (int v = rest.first(); v >= 0; v = rest.first()) {
    rest -= reach(static_cast<VertexId>(v), rest);
    ++count;
  }
  return count;
}

bool Graph::is_complete() const {
  for (VertexId v = 0; v < n_; ++v) {
    if (adj_[v].count() + 1 != n_) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;

  // Maximum cardinality search; visit order u_0, u_1, ...
  std::vector<int> weight(n, 0);
  std::vector<int> pos(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      if (best < 0 || weight[v] > weight[best]) best = static_cast<int>(v);
    }
    pos[best] = static_cast<int>(step);
    order.push_back(static_cast<VertexId>(best));
    for (VertexId u : g.neighbors(static_cast<VertexId>(best))) {
      if (pos[u] < 0) ++weight[u];
    }
  }

  // Perfect elimination check: the earlier neighbors of each vertex, minus
  // the latest-visited one among them, must all be adjacent to it.
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    int latest = -1;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] < pos[v] && (latest < 0 || pos[u] > pos[latest])) {
        latest = static_cast<int>(u);
      }
    }
    if (latest < 0) continue;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] < pos[v] && u != static_cast<VertexId>(latest) &&
          !g.adjacent(u, static_cast<VertexId>(latest))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace beic
