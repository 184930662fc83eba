#include "beic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "beic/errors.hpp"

namespace beic::oracle {

namespace {

VertexSet set_from_mask(std::uint32_t mask, std::size_t n) {
  VertexSet s(n);
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    s.set(static_cast<VertexId>(std::countr_zero(rest)));
  }
  return s;
}

}  // namespace

PrimeDescriptor describe_pt(const Clutter& c, const VertexSet& t) {
  if (t.universe_size() != c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex set does not match the clutter");
  }
  PrimeDescriptor d;
  d.t = t;
  d.parts = associated_graph(c).components(c.all_vertices() - t);
  // generator count route: each part contributes a complete-graph prime of
  // height |part| - 1, each deleted vertex two variables
  int h = 2 * static_cast<int>(t.count());
  for (const auto& part : d.parts) h += static_cast<int>(part.count()) - 1;
  d.height = h;
  return d;
}

bool prime_contains(const PrimeDescriptor& p, const PrimeDescriptor& q) {
  if (p.t.universe_size() != q.t.universe_size()) {
    fail(ErrorKind::DescriptorMismatch, "descriptors live over different universes");
  }
  // variable generators x_i, y_i of Q: need i in T_P as well
  if (!q.t.is_subset_of(p.t)) return false;
  // binomial generators: every pair inside a part of Q must either touch T_P
  // or land in a single part of P
  for (const auto& part : q.parts) {
    const VertexSet rest = part - p.t;
    if (rest.count() < 2) continue;
    const auto w = static_cast<VertexId>(rest.first());
    const VertexSet* home = nullptr;
    for (const auto& pp : p.parts) {
      if (pp.test(w)) {
        home = &pp;
        break;
      }
    }
    if (home == nullptr) {
      fail(ErrorKind::DescriptorMismatch, "descriptor does not cover its universe");
    }
    if (!rest.is_subset_of(*home)) return false;
  }
  return true;
}

std::vector<PrimeDescriptor> minimal_primes(const Clutter& c, std::size_t budget) {
  const std::size_t n = c.vertex_count();
  if (n > budget) {
    fail(ErrorKind::ComplexityGuard,
         "oracle enumeration limited to " + std::to_string(budget) +
             " vertices (clutter has " + std::to_string(n) + ")");
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<PrimeDescriptor> all;
  all.reserve(total);
  for (std::uint32_t t = 0; t < total; ++t) {
    all.push_back(describe_pt(c, set_from_mask(t, n)));
  }

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t t = 0; t < total; ++t) {
    bool is_minimal = true;
    // a contained prime must use a subset of the deleted vertices, so only
    // proper submasks can witness non-minimality
    if (t != 0) {
      for (std::uint32_t s = (t - 1) & t;; s = (s - 1) & t) {
        if (prime_contains(all[t], all[s])) {
          is_minimal = false;
          break;
        }
        if (s == 0) break;
      }
    }
    if (is_minimal) minimal.push_back(t);
  }

  std::sort(minimal.begin(), minimal.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    const std::uint32_t d = (a ^ b) & (~(a ^ b) + 1);
    return (a & d) != 0;
  });

  std::vector<PrimeDescriptor> out;
  out.reserve(minimal.size());
  for (std::uint32_t t : minimal) out.push_back(std::move(all[t]));
  return out;
}

}  // namespace beic::oracle
