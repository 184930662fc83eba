#include "beic/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "beic/errors.hpp"
#include "beic/random.hpp"

namespace beic {

const char* to_string(CmStatus s) noexcept {
  switch (s) {
    case CmStatus::CohenMacaulay: return "CohenMacaulay";
    case CmStatus::NotCohenMacaulay: return "NotCohenMacaulay";
    case CmStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::size_t GluingTree::leaf_count() const {
  if (const auto* leaf = std::get_if<Leaf>(&node)) {
    (void)leaf;
    return 1;
  }
  const auto& glue = std::get<Glue>(node);
  return glue.left->leaf_count() + glue.right->leaf_count();
}

namespace {

std::string label_list(const Clutter& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.labels().size(); ++i) {
    if (i) out += ",";
    out += c.labels()[i];
  }
  return out + "}";
}

std::vector<GluingSplit> all_gluing_splits(const Clutter& c) {
  std::vector<GluingSplit> out;
  if (c.vertex_count() == 0) return out;
  const Graph g = associated_graph(c);
  if (!g.is_connected()) return out;
  const VertexSet all = c.all_vertices();
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    VertexSet rest = all;
    rest.reset(v);
    const auto branches = g.components(rest);
    // a free vertex can separate at most two branches: each branch holding
    // neighbors of v contributes its own facet through v
    if (branches.size() != 2) continue;
    VertexSet left_side = branches[0];
    left_side.set(v);
    VertexSet right_side = branches[1];
    right_side.set(v);
    Clutter c1 = induced(c, left_side);
    Clutter c2 = induced(c, right_side);
    const std::string& name = c.label(v);
    if (!is_free(c1, c1.require_vertex(name)) ||
        !is_free(c2, c2.require_vertex(name))) {
      continue;
    }
    out.push_back({name, std::move(c1), std::move(c2)});
  }
  return out;
}

std::vector<VertexId> all_apexes(const Clutter& c) {
  std::vector<VertexId> out;
  const Graph g = associated_graph(c);
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (g.is_universal(v)) out.push_back(v);
  }
  return out;
}

struct Chooser {
  std::optional<Rng> rng;
  std::size_t pick(std::size_t n) {
    if (n <= 1 || !rng) return 0;
    return static_cast<std::size_t>(rng->below(n));
  }
};

CmStatus combine(CmStatus a, CmStatus b) {
  if (a == CmStatus::NotCohenMacaulay || b == CmStatus::NotCohenMacaulay) {
    return CmStatus::NotCohenMacaulay;
  }
  if (a == CmStatus::CohenMacaulay && b == CmStatus::CohenMacaulay) {
    return CmStatus::CohenMacaulay;
  }
  return CmStatus::Unknown;
}

struct RuleResult {
  CmStatus status = CmStatus::Unknown;
  std::vector<CertEntry> entries;
};

RuleResult decide(const Clutter& c, const EnumOptions& eo, Chooser& ch);

CertEntry wrap_sub(const std::string& tag, const Clutter& part, const RuleResult& sub) {
  CertEntry e;
  e.rule = tag;
  e.result = "recursive sub-verdict";
  e.note = label_list(part) + ": " + to_string(sub.status);
  e.children = sub.entries;
  return e;
}

RuleResult decide(const Clutter& c, const EnumOptions& eo, Chooser& ch) {
  RuleResult rr;

  if (c.vertex_count() == 0) {
    rr.status = CmStatus::CohenMacaulay;
    rr.entries.push_back({"empty-clutter", "the zero ideal over no vertices is Cohen-Macaulay", "", {}});
    return rr;
  }

  const auto comps = components(c);
  if (comps.size() != 1) {
    CertEntry top{"component-reduction",
                  "Cohen-Macaulay iff every connected component is (background fact)",
                  std::to_string(comps.size()) + " components",
                  {}};
    rr.status = CmStatus::CohenMacaulay;
    for (const auto& comp : comps) {
      RuleResult sub = decide(comp, eo, ch);
      rr.status = combine(rr.status, sub.status);
      top.children.push_back(wrap_sub("component", comp, sub));
    }
    rr.entries.push_back(std::move(top));
    return rr;
  }

  if (is_complete(c)) {
    rr.status = CmStatus::CohenMacaulay;
    rr.entries.push_back({"complete-clutter",
                          "complete clutters give generic determinantal ideals, which are Cohen-Macaulay",
                          "on " + std::to_string(c.vertex_count()) + " vertices",
                          {}});
    return rr;
  }

  if (auto splits = all_gluing_splits(c); !splits.empty()) {
    const GluingSplit& split = splits[ch.pick(splits.size())];
    RuleResult left = decide(split.left, eo, ch);
    RuleResult right = decide(split.right, eo, ch);
    rr.status = combine(left.status, right.status);
    CertEntry top{"gluing-split",
                  "a gluing at a free vertex is Cohen-Macaulay iff both sides are",
                  "at vertex '" + split.vertex + "'",
                  {}};
    top.children.push_back(wrap_sub("side", split.left, left));
    top.children.push_back(wrap_sub("side", split.right, right));
    rr.entries.push_back(std::move(top));
    return rr;
  }

  if (auto apexes = all_apexes(c); !apexes.empty()) {
    const VertexId apex = apexes[ch.pick(apexes.size())];
    VertexSet rest = c.all_vertices();
    rest.reset(apex);
    const Clutter base = induced(c, rest);
    const auto base_comps = components(base);
    if (base_comps.size() == 2) {
      RuleResult left = decide(base_comps[0], eo, ch);
      RuleResult right = decide(base_comps[1], eo, ch);
      rr.status = combine(left.status, right.status);
      CertEntry top{"cone-two-component-base",
                    "a cone over two connected components is Cohen-Macaulay iff both are",
                    "apex '" + c.label(apex) + "'",
                    {}};
      top.children.push_back(wrap_sub("base-component", base_comps[0], left));
      top.children.push_back(wrap_sub("base-component", base_comps[1], right));
      rr.entries.push_back(std::move(top));
      return rr;
    }
    if (base_comps.size() >= 3) {
      rr.status = CmStatus::NotCohenMacaulay;
      rr.entries.push_back({"cone-many-component-base",
                            "an unmixed cone admits at most two base components",
                            "apex '" + c.label(apex) + "' over " +
                                std::to_string(base_comps.size()) + " components",
                            {}});
      return rr;
    }
    // connected base: no cone rule applies, fall through
  }

  if (auto chordal = chordal_clique_case(c); chordal.has_value()) {
    rr.status = *chordal ? CmStatus::CohenMacaulay : CmStatus::NotCohenMacaulay;
    rr.entries.push_back({"chordal-clique-case",
                          "chordal clutters with almost-disjoint maximal cliques are "
                          "Cohen-Macaulay iff no vertex lies in three of them",
                          *chordal ? "no triple intersection" : "some vertex lies in three facets",
                          {}});
    return rr;
  }

  if (!is_unmixed(c, eo)) {
    rr.status = CmStatus::NotCohenMacaulay;
    rr.entries.push_back({"unmixedness-gate",
                          "Cohen-Macaulay ideals are unmixed",
                          "minimal primes of unequal height",
                          {}});
    return rr;
  }

  rr.status = CmStatus::Unknown;
  rr.entries.push_back({"undecided",
                        "outside the decided structural classes",
                        "unmixed, but no reduction applies",
                        {}});
  return rr;
}

}  // namespace

std::optional<GluingSplit> gluing_split(const Clutter& c) {
  auto splits = all_gluing_splits(c);
  if (splits.empty()) return std::nullopt;
  return std::move(splits.front());
}

std::optional<ConeApex> graph_cone_apex(const Clutter& c) {
  const auto apexes = all_apexes(c);
  if (apexes.empty()) return std::nullopt;
  VertexSet rest = c.all_vertices();
  rest.reset(apexes.front());
  return ConeApex{c.label(apexes.front()), induced(c, rest)};
}

bool is_literal_cone(const Clutter& c, VertexId apex) {
  if (apex >= c.vertex_count()) {
    fail(ErrorKind::UnknownVertex, "vertex id out of range");
  }
  VertexSet rest = c.all_vertices();
  rest.reset(apex);
  return cone(c.label(apex), induced(c, rest)) == c;
}

std::optional<bool> chordal_clique_case(const Clutter& c, std::size_t budget) {
  if (!is_chordal(associated_graph(c))) return std::nullopt;
  const auto facets = maximal_cliques(c, budget);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if ((facets[i].members & facets[j].members).count() > 1) return std::nullopt;
    }
  }
  std::vector<int> membership(c.vertex_count(), 0);
  for (const auto& f : facets) {
    for (VertexId v : f.members) ++membership[v];
  }
  return std::all_of(membership.begin(), membership.end(),
                     [](int m) { return m <= 2; });
}

Verdict cm_verdict(const Clutter& c, const VerdictOptions& opts) {
  Verdict v;
  v.dim = dim_quotient(c, opts.enumeration);
  v.unmixed = is_unmixed(c, opts.enumeration);
  v.depth = depth_exact(c);
  Chooser ch;
  if (opts.tiebreak_seed) ch.rng.emplace(*opts.tiebreak_seed);
  RuleResult rr = decide(c, opts.enumeration, ch);
  v.status = rr.status;
  v.certificate = std::move(rr.entries);
  return v;
}

std::optional<int> depth_exact(const Clutter& c) {
  const std::size_t n = c.vertex_count();
  if (n == 0) return 0;

  const auto comps = components(c);
  if (comps.size() != 1) {
    int sum = 0;
    for (const auto& comp : comps) {
      const auto d = depth_exact(comp);
      if (!d) return std::nullopt;
      sum += *d;
    }
    return sum;
  }

  if (is_complete(c)) return static_cast<int>(n) + 1;

  if (const auto split = gluing_split(c)) {
    const auto l = depth_exact(split->left);
    const auto r = depth_exact(split->right);
    if (l && r) return *l + *r - 2;
    return std::nullopt;
  }

  if (const auto apex = graph_cone_apex(c)) {
    const auto base_comps = components(apex->base);
    if (base_comps.size() >= 2) {
      const auto d = depth_exact(apex->base);
      if (!d) return std::nullopt;
      return std::min(*d, static_cast<int>(apex->base.vertex_count()) + 2);
    }
  }

  return std::nullopt;
}

std::optional<GluingTree> general_gluing_decomposition(
    const Clutter& c, const std::vector<Clutter>& blocks) {
  if (blocks.empty()) {
    fail(ErrorKind::BlocksDontCoverEdges, "no blocks given");
  }

  // Coverage: block vertices and edges must reassemble the clutter exactly,
  // with every edge in exactly one block.
  std::set<std::vector<std::string>> uncovered;
  for (const auto& e : c.edge_labels()) uncovered.insert(e);
  std::set<std::string> seen_labels;
  for (const auto& block : blocks) {
    for (const auto& name : block.labels()) {
      if (!c.vertex(name)) {
        fail(ErrorKind::BlocksDontCoverEdges,
             "block vertex '" + name + "' is not a vertex of the clutter");
      }
      seen_labels.insert(name);
    }
    for (const auto& e : block.edge_labels()) {
      if (uncovered.erase(e) == 0) {
        fail(ErrorKind::BlocksDontCoverEdges,
             "block edge is not an uncovered edge of the clutter");
      }
    }
  }
  if (!uncovered.empty() || seen_labels.size() != c.vertex_count()) {
    fail(ErrorKind::BlocksDontCoverEdges,
         "blocks do not cover the clutter's edges and vertices");
  }

  const std::size_t r = blocks.size();
  for (const auto& block : blocks) {
    if (!is_connected(block)) return std::nullopt;
  }

  // pairwise intersections of size <= 1, free on both sides, no triples
  std::map<std::string, int> vertex_blocks;
  for (const auto& block : blocks) {
    for (const auto& name : block.labels()) ++vertex_blocks[name];
  }
  for (const auto& [name, uses] : vertex_blocks) {
    if (uses > 2) return std::nullopt;
  }
  std::vector<std::vector<std::pair<std::size_t, std::string>>> adj(r);
  std::size_t links = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<std::string> shared;
      for (const auto& name : blocks[i].labels()) {
        if (blocks[j].vertex(name)) shared.push_back(name);
      }
      if (shared.empty()) continue;
      if (shared.size() > 1) return std::nullopt;
      const std::string& v = shared.front();
      if (!is_free(blocks[i], blocks[i].require_vertex(v)) ||
          !is_free(blocks[j], blocks[j].require_vertex(v))) {
        return std::nullopt;
      }
      adj[i].emplace_back(j, v);
      adj[j].emplace_back(i, v);
      ++links;
    }
  }

  // the intersection pattern must be a tree on the blocks
  if (links != r - 1) return std::nullopt;
  std::vector<char> visited(r, 0);
  std::vector<std::size_t> stack{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& [j, v] : adj[i]) {
      if (!visited[j]) {
        visited[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != r) return std::nullopt;

  // fold the tree rooted at block 0 into binary glue nodes
  std::vector<char> folded(r, 0);
  auto fold = [&](auto&& self, std::size_t i) -> std::unique_ptr<GluingTree> {
    folded[i] = 1;
    auto tree = std::make_unique<GluingTree>();
    tree->node = GluingTree::Leaf{blocks[i]};
    for (const auto& [j, v] : adj[i]) {
      if (folded[j]) continue;
      auto sub = self(self, j);
      auto joined = std::make_unique<GluingTree>();
      joined->node = GluingTree::Glue{v, std::move(tree), std::move(sub)};
      tree = std::move(joined);
    }
    return tree;
  };
  auto root = fold(fold, 0);
  return std::move(*root);
}

}  // namespace beic
