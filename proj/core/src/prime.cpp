#include "beic/prime.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "beic/errors.hpp"

namespace beic {

namespace {

// The component table stores one byte per subset.
constexpr std::size_t kHardEnumCap = 28;

struct DenseGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
};

DenseGraph densify(const Graph& g) {
  DenseGraph d;
  d.n = static_cast<int>(g.vertex_count());
  d.adj.assign(static_cast<std::size_t>(d.n), 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) d.adj[u] |= std::uint32_t{1} << v;
  }
  return d;
}

/// comp[s] = number of connected components induced on the kept set s.
std::vector<std::uint8_t> component_table(const DenseGraph& g) {
  std::vector<std::uint8_t> comp(std::size_t{1} << g.n, 0);
  for (std::uint32_t s = 1; s < comp.size(); ++s) {
    // peel the component of the lowest kept vertex; the remainder is a
    // smaller mask whose count is already known
    std::uint32_t r = s & (~s + 1);
    std::uint32_t frontier = r;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        next |= g.adj[std::countr_zero(f)];
      }
      next &= s & ~r;
      r |= next;
      frontier = next;
    }
    comp[s] = static_cast<std::uint8_t>(comp[s & ~r] + 1);
  }
  return comp;
}

void check_budget(const Clutter& c, const EnumOptions& opts) {
  const std::size_t limit = std::min(opts.max_vertices, kHardEnumCap);
  if (c.vertex_count() > limit) {
    fail(ErrorKind::ComplexityGuard,
         "subset enumeration limited to " + std::to_string(limit) +
             " vertices (clutter has " + std::to_string(c.vertex_count()) + ")");
  }
}

/// Visit every subset with the cut point property in [begin, end).
template <typename Visit>
void scan_range(const std::vector<std::uint8_t>& comp, int n, std::uint32_t begin,
                std::uint32_t end, Visit&& visit) {
  const std::uint32_t all =
      n == 0 ? 0 : (n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  for (std::uint32_t t = begin; t != end; ++t) {
    const std::uint32_t keep = all & ~t;
    const std::uint8_t c = comp[keep];
    bool ok = true;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (comp[keep | bit] >= c) {
        ok = false;
        break;
      }
    }
    if (ok) visit(t, c);
  }
}

struct Hit {
  std::uint32_t t;
  std::uint8_t c;
};

std::vector<Hit> scan_cut_sets(const Clutter& clutter, const EnumOptions& opts) {
  const DenseGraph g = densify(associated_graph(clutter));
  const auto comp = component_table(g);
  const std::uint64_t total = std::uint64_t{1} << g.n;

  const unsigned threads =
      std::max(1u, std::min<unsigned>(opts.threads,
                                      static_cast<unsigned>(total / 4096 + 1)));
  if (threads == 1) {
    std::vector<Hit> hits;
    scan_range(comp, g.n, 0, static_cast<std::uint32_t>(total),
               [&](std::uint32_t t, std::uint8_t c) { hits.push_back({t, c}); });
    return hits;
  }

  std::vector<std::vector<Hit>> chunks(threads);
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    const auto begin = static_cast<std::uint32_t>(std::min<std::uint64_t>(k * step, total));
    const auto end = static_cast<std::uint32_t>(std::min<std::uint64_t>((k + 1) * step, total));
    pool.emplace_back([&, k, begin, end] {
      scan_range(comp, g.n, begin, end,
                 [&, k](std::uint32_t t, std::uint8_t c) { chunks[k].push_back({t, c}); });
    });
  }
  for (auto& th : pool) th.join();
  std::vector<Hit> hits;
  for (auto& ch : chunks) hits.insert(hits.end(), ch.begin(), ch.end());
  return hits;
}

// size-then-lex order on bitmasks: the smaller member of the symmetric
// difference decides lex
bool mask_size_lex_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint32_t d = (a ^ b) & (~(a ^ b) + 1);
  return (a & d) != 0;
}

VertexSet set_from_mask(std::uint32_t mask, std::size_t n) {
  VertexSet s(n);
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    s.set(static_cast<VertexId>(std::countr_zero(rest)));
  }
  return s;
}

}  // namespace

int component_count(const Clutter& c, const VertexSet& t) {
  if (t.universe_size() != c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex set does not match the clutter");
  }
  return static_cast<int>(
      associated_graph(c).component_count(c.all_vertices() - t));
}

bool has_cut_point_property(const Clutter& c, const VertexSet& t) {
  if (t.universe_size() != c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex set does not match the clutter");
  }
  const Graph g = associated_graph(c);
  const VertexSet keep = c.all_vertices() - t;
  const std::size_t ct = g.component_count(keep);
  for (VertexId i : t) {
    VertexSet wider = keep;
    wider.set(i);
    if (g.component_count(wider) >= ct) return false;
  }
  return true;
}

int prime_height(const Clutter& c, const VertexSet& t) {
  return static_cast<int>(c.vertex_count()) + static_cast<int>(t.count()) -
         component_count(c, t);
}

std::vector<CutSetRecord> cut_sets(const Clutter& c, const EnumOptions& opts) {
  check_budget(c, opts);
  auto hits = scan_cut_sets(c, opts);
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return mask_size_lex_less(a.t, b.t); });

  const int n = static_cast<int>(c.vertex_count());
  std::vector<CutSetRecord> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) {
    CutSetRecord rec;
    rec.t = set_from_mask(h.t, c.vertex_count());
    rec.component_count = h.c;
    rec.height = n + std::popcount(h.t) - h.c;
    rec.dim = 2 * n - rec.height;
    out.push_back(std::move(rec));
  }
  return out;
}

int dim_quotient(const Clutter& c, const EnumOptions& opts) {
  check_budget(c, opts);
  const int n = static_cast<int>(c.vertex_count());
  int best = 0;
  for (const Hit& h : scan_cut_sets(c, opts)) {
    best = std::max(best, n - std::popcount(h.t) + h.c);
  }
  return best;
}

std::vector<PrimeDescriptor> minimal_primes(const Clutter& c,
                                            const EnumOptions& opts) {
  const Graph g = associated_graph(c);
  std::vector<PrimeDescriptor> out;
  for (const CutSetRecord& rec : cut_sets(c, opts)) {
    PrimeDescriptor d;
    d.t = rec.t;
    d.parts = g.components(c.all_vertices() - rec.t);
    d.height = rec.height;
    out.push_back(std::move(d));
  }
  return out;
}

bool is_unmixed(const Clutter& c, const EnumOptions& opts) {
  check_budget(c, opts);
  for (const Clutter& comp : components(c)) {
    for (const CutSetRecord& rec : cut_sets(comp, opts)) {
      if (rec.component_count != static_cast<int>(rec.t.count()) + 1) return false;
    }
  }
  return true;
}

}  // namespace beic
