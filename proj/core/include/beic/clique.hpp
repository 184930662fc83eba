#pragma once

#include <cstddef>
#include <vector>

#include "beic/clutter.hpp"

namespace beic {

inline constexpr std::size_t kDefaultCliqueBudget = 64;

/// A facet of the clique complex: a maximal clique of the associated graph.
struct Facet {
  VertexSet members;
  bool operator==(const Facet&) const = default;
};

/// True when every pair of distinct members of `d` lies in some edge.
/// Singletons and the empty set are cliques.
bool is_clique(const Clutter& c, const VertexSet& d);

/// Facets of the clique complex, computed on the associated graph by
/// pivoting Bron-Kerbosch, sorted lexicographically. Isolated vertices give
/// singleton facets. Throws ComplexityGuard above `budget` vertices.
std::vector<Facet> maximal_cliques(const Clutter& c,
                                   std::size_t budget = kDefaultCliqueBudget);
std::vector<Facet> maximal_cliques(const Graph& g,
                                   std::size_t budget = kDefaultCliqueBudget);

/// A vertex is free when it lies in exactly one facet.
bool is_free(const Clutter& c, VertexId v,
             std::size_t budget = kDefaultCliqueBudget);
VertexSet free_vertices(const Clutter& c,
                        std::size_t budget = kDefaultCliqueBudget);

}  // namespace beic
