#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "beic/clutter.hpp"

namespace beic {

/// Budgets for exhaustive subset enumeration. `max_vertices` bounds the
/// number of vertices (the scan is over all 2^n subsets with a component
/// table of 2^n bytes); `threads` splits the qualification scan. Results are
/// deterministic and independent of the thread count.
struct EnumOptions {
  std::size_t max_vertices = 24;
  unsigned threads = 1;
};

/// A vertex set T with the cut point property, together with the component
/// count c of the associated graph minus T, the height of the corresponding
/// minimal prime (n + |T| - c), and dim of the quotient by it (2n - height).
struct CutSetRecord {
  VertexSet t;
  int component_count = 0;
  int height = 0;
  int dim = 0;
  bool operator==(const CutSetRecord&) const = default;
};

/// Combinatorial stand-in for the prime P_T: the deleted set T plus the
/// component partition of the remaining vertices. The height is
/// sum over parts of (|part| - 1) plus 2|T|, which equals n + |T| - c(T).
struct PrimeDescriptor {
  VertexSet t;
  std::vector<VertexSet> parts;  // components of the associated graph on V \ T
  int height = 0;
  bool operator==(const PrimeDescriptor&) const = default;
};

/// Number of connected components of the associated graph induced on V \ t.
int component_count(const Clutter& c, const VertexSet& t);

/// T has the cut point property when removing any single element of T would
/// merge components: c(T \ {i}) < c(T) for every i in T. The empty set
/// qualifies vacuously.
bool has_cut_point_property(const Clutter& c, const VertexSet& t);

/// height P_T = n + |T| - c(T), defined for every T.
int prime_height(const Clutter& c, const VertexSet& t);

/// All subsets with the cut point property, ordered by size then
/// lexicographically. Throws ComplexityGuard over the vertex budget.
std::vector<CutSetRecord> cut_sets(const Clutter& c, const EnumOptions& opts = {});

/// Krull dimension of the quotient ring: max over qualifying T of
/// (n - |T| + c(T)).
int dim_quotient(const Clutter& c, const EnumOptions& opts = {});

/// One descriptor per qualifying T, in cut_sets order.
std::vector<PrimeDescriptor> minimal_primes(const Clutter& c,
                                            const EnumOptions& opts = {});

/// Unmixedness, decided per connected component: every qualifying T of the
/// component must satisfy c(T) = |T| + 1. For connected clutters this
/// coincides with all minimal primes having equal height.
bool is_unmixed(const Clutter& c, const EnumOptions& opts = {});

}  // namespace beic
