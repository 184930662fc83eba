#pragma once

// Shared fixtures and seeded instance generators for the test suites.

#include <optional>
#include <string>
#include <vector>

#include "beic/clique.hpp"
#include "beic/clutter.hpp"
#include "beic/errors.hpp"
#include "beic/random.hpp"

namespace testgen {

using beic::Clutter;
using beic::Rng;

inline std::string lab(int v) { return std::to_string(v); }

inline Clutter from_edges(std::size_t n, const std::vector<std::vector<int>>& edges,
                          bool minimize = false) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = lab(static_cast<int>(i) + 1);
  std::vector<std::vector<std::string>> named;
  named.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<std::string> x;
    x.reserve(e.size());
    for (int v : e) x.push_back(lab(v));
    named.push_back(std::move(x));
  }
  return Clutter::make(labels, named, minimize);
}

/// Six-vertex running example: edges {1,2,4} {2,4,6} {4,5} {1,3,6}.
inline Clutter sample6() {
  return from_edges(6, {{1, 2, 4}, {2, 4, 6}, {4, 5}, {1, 3, 6}});
}

/// Same associated graph as sample6, but presented as its nine pairs.
inline Clutter sample6_pairs() {
  return from_edges(6, {{1, 2}, {2, 4}, {1, 4}, {2, 6}, {4, 6}, {4, 5}, {1, 3}, {3, 6}, {1, 6}});
}

inline Clutter path3() { return from_edges(3, {{1, 2}, {2, 3}}); }
inline Clutter star4() { return from_edges(4, {{1, 2}, {1, 3}, {1, 4}}); }

inline Clutter complete_clutter(std::size_t n) {
  if (n <= 1) return from_edges(n, {});
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i) + 1;
  return from_edges(n, {all});
}

/// Random clutter with n in [1, max_n]; may be disconnected or edgeless.
inline Clutter random_any(Rng& rng, std::size_t max_n = 8, std::size_t max_arity = 4) {
  const std::size_t n = 1 + rng.below(max_n);
  std::size_t m = rng.below(n + 3);
  while (true) {
    try {
      return beic::random_clutter(rng, n, m, max_arity);
    } catch (const beic::Error&) {
      if (m == 0) throw;
      m /= 2;
    }
  }
}

/// Connected random clutter: a random spanning tree plus extra hyperedges,
/// folded by maximality.
inline Clutter random_connected(Rng& rng, std::size_t n, std::size_t extra,
                                std::size_t max_arity) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = lab(static_cast<int>(i) + 1);
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({labels[rng.below(i)], labels[i]});
  }
  const std::size_t top = std::min(max_arity, n);
  if (top >= 2) {
    std::vector<std::size_t> scratch(n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = i;
    for (std::size_t e = 0; e < extra; ++e) {
      const std::size_t arity = 2 + rng.below(top - 1);
      std::vector<std::string> edge;
      for (std::size_t i = 0; i < arity; ++i) {
        std::swap(scratch[i], scratch[i + rng.below(n - i)]);
        edge.push_back(labels[scratch[i]]);
      }
      edges.push_back(std::move(edge));
    }
  }
  return Clutter::make(std::move(labels), edges, /*minimize=*/true);
}

/// Rename every numeric label by adding `offset`.
inline Clutter shift_labels(const Clutter& c, int offset) {
  std::vector<std::string> labels;
  for (const auto& name : c.labels()) {
    labels.push_back(std::to_string(std::stoi(name) + offset));
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : c.edge_labels()) {
    std::vector<std::string> x;
    for (const auto& name : e) x.push_back(std::to_string(std::stoi(name) + offset));
    edges.push_back(std::move(x));
  }
  return Clutter::make(std::move(labels), edges);
}

struct GluingInstance {
  Clutter glued;
  Clutter left;
  Clutter right;
  std::string vertex;
};

/// Random valid gluing: two connected clutters sharing exactly one vertex
/// that is free in both clique complexes. Total vertices <= max_total.
inline GluingInstance random_gluing(Rng& rng, std::size_t max_total = 10) {
  while (true) {
    const std::size_t n1 = 2 + rng.below(4);
    const std::size_t n2 = 2 + rng.below(4);
    if (n1 + n2 - 1 > max_total) continue;
    const Clutter c1 = random_connected(rng, n1, rng.below(3), 3);
    const Clutter c2raw = random_connected(rng, n2, rng.below(3), 3);
    const auto f1 = beic::free_vertices(c1).members();
    const auto f2 = beic::free_vertices(c2raw).members();
    if (f1.empty() || f2.empty()) continue;
    const std::string a = c1.label(f1[rng.below(f1.size())]);
    const std::string b = c2raw.label(f2[rng.below(f2.size())]);

    // rename the right side: b becomes a, everything else moves out of the way
    std::vector<std::string> labels;
    for (const auto& name : c2raw.labels()) {
      labels.push_back(name == b ? a : std::to_string(std::stoi(name) + 100));
    }
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : c2raw.edge_labels()) {
      std::vector<std::string> x;
      for (const auto& name : e) {
        x.push_back(name == b ? a : std::to_string(std::stoi(name) + 100));
      }
      edges.push_back(std::move(x));
    }
    Clutter c2 = Clutter::make(std::move(labels), edges);
    Clutter glued = beic::clutter_union(c1, c2);
    return {std::move(glued), c1, std::move(c2), a};
  }
}

struct BlockInstance {
  Clutter clutter;
  std::vector<Clutter> blocks;
};

/// Union of complete blocks, each new block attached at one existing vertex.
/// With `distinct_attach`, no vertex hosts two attachments, so the blocks
/// form a tree with empty triple intersections; otherwise several blocks may
/// share one vertex.
inline BlockInstance random_blocks(Rng& rng, std::size_t max_vertices,
                                   bool distinct_attach) {
  std::vector<std::vector<int>> block_sets;
  std::vector<char> used_as_attach;
  int next = 1;
  const auto fresh = [&] {
    used_as_attach.push_back(0);
    return next++;
  };

  std::size_t size0 = 2 + rng.below(3);
  std::vector<int> first;
  for (std::size_t i = 0; i < size0; ++i) first.push_back(fresh());
  block_sets.push_back(first);

  while (static_cast<std::size_t>(next - 1) < max_vertices) {
    const std::size_t size = 2 + rng.below(3);
    if (static_cast<std::size_t>(next - 1) + size - 1 > max_vertices) break;
    std::vector<int> candidates;
    for (int v = 1; v < next; ++v) {
      if (!distinct_attach || !used_as_attach[static_cast<std::size_t>(v - 1)]) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty()) break;
    const int attach = candidates[rng.below(candidates.size())];
    used_as_attach[static_cast<std::size_t>(attach - 1)] = 1;
    std::vector<int> block{attach};
    for (std::size_t i = 1; i < size; ++i) block.push_back(fresh());
    block_sets.push_back(std::move(block));
    if (rng.below(3) == 0) break;
  }

  BlockInstance out;
  out.clutter = from_edges(static_cast<std::size_t>(next - 1), block_sets);
  for (const auto& block : block_sets) {
    std::vector<std::string> labels;
    std::vector<std::string> edge;
    for (int v : block) {
      labels.push_back(lab(v));
      edge.push_back(lab(v));
    }
    out.blocks.push_back(Clutter::make(labels, {edge}));
  }
  return out;
}

/// Disjoint union of `parts` connected clutters on disjoint numeric ranges.
inline Clutter random_disconnected(Rng& rng, std::size_t parts,
                                   std::size_t part_max_n = 4) {
  Clutter acc;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t n = 1 + rng.below(part_max_n);
    Clutter piece = shift_labels(random_connected(rng, n, rng.below(2), 3),
                                 static_cast<int>(100 * i));
    acc = i == 0 ? std::move(piece) : beic::disjoint_union(acc, piece);
  }
  return acc;
}

}  // namespace testgen
