#pragma once

#include <cstddef>
#include <vector>

#include "beic/clutter.hpp"
#include "beic/prime.hpp"

namespace beic {

inline constexpr std::size_t kOracleBudget = 12;

/// Brute-force ground truth for the minimal-prime structure. Every subset T
/// yields a descriptor; containment between the described primes is decided
/// on generators, and the inclusion-minimal ones are extracted directly,
/// without the cut point criterion.
namespace oracle {

/// Descriptor of P_T: components of the associated graph on V \ T, height by
/// the generator count formula sum(|part| - 1) + 2|T|.
PrimeDescriptor describe_pt(const Clutter& c, const VertexSet& t);

/// Does Q ⊆ P? Generator membership: a variable indexed by i lies in P iff
/// i ∈ T_P; a binomial on {i, j} inside one part of Q lies in P iff i ∈ T_P,
/// j ∈ T_P, or i and j share a part of P. Throws DescriptorMismatch when the
/// universes differ.
bool prime_contains(const PrimeDescriptor& p, const PrimeDescriptor& q);

/// Inclusion-minimal descriptors among {P_T : T ⊆ V}, sorted by size of T
/// then lexicographically. Throws ComplexityGuard above `budget` vertices.
std::vector<PrimeDescriptor> minimal_primes(const Clutter& c,
                                            std::size_t budget = kOracleBudget);

}  // namespace oracle

}  // namespace beic
