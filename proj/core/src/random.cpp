#include "beic/random.hpp"

#include <algorithm>
#include <numeric>

#include "beic/errors.hpp"

namespace beic {

Clutter random_clutter(Rng& rng, std::size_t n, std::size_t edge_count,
                       std::size_t max_arity) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  // numeric labels sort by value, so the dense ids follow 1..n
  if (edge_count == 0) return Clutter::from_sets(std::move(labels), {});

  const std::size_t top_arity = std::min(max_arity, n);
  std::size_t attempts = 200 * edge_count + 1000;
  std::vector<VertexSet> edges;
  std::vector<VertexId> scratch(n);
  std::iota(scratch.begin(), scratch.end(), 0);

  while (edges.size() < edge_count && top_arity >= 2 && attempts-- > 0) {
    const auto arity = static_cast<std::size_t>(rng.range(2, top_arity));
    for (std::size_t i = 0; i < arity; ++i) {
      std::swap(scratch[i], scratch[i + rng.below(n - i)]);
    }
    VertexSet e(n);
    for (std::size_t i = 0; i < arity; ++i) e.set(scratch[i]);
    const bool comparable =
        std::any_of(edges.begin(), edges.end(), [&](const VertexSet& f) {
          return e.is_subset_of(f) || f.is_subset_of(e);
        });
    if (!comparable) edges.push_back(std::move(e));
  }
  if (edges.size() < edge_count) {
    fail(ErrorKind::EdgeBudgetExhausted,
         "could not place " + std::to_string(edge_count) +
             " antichain edges with " + std::to_string(n) +
             " vertices and arity <= " + std::to_string(max_arity));
  }
  return Clutter::from_sets(std::move(labels), std::move(edges));
}

Clutter random_clutter(std::uint64_t seed, std::size_t n, std::size_t edge_count,
                       std::size_t max_arity) {
  Rng rng(seed);
  return random_clutter(rng, n, edge_count, max_arity);
}

}  // namespace beic
