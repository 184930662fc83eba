#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "beic/clique.hpp"
#include "beic/clutter.hpp"
#include "beic/prime.hpp"

namespace beic {

enum class CmStatus { CohenMacaulay, NotCohenMacaulay, Unknown };

const char* to_string(CmStatus s) noexcept;

/// One applied rule in a verdict trace. `result` names the structural fact
/// the rule rests on; `children` hold the traces of recursive sub-verdicts.
struct CertEntry {
  std::string rule;
  std::string result;
  std::string note;
  std::vector<CertEntry> children;
};

/// Outcome of the Cohen-Macaulay decision procedure. `dim` and `unmixed` are
/// always computed directly from the minimal-prime structure; `depth` is
/// present only when the closed-form recursion reaches bases with known
/// depth. Unknown is an honest status: nothing is guessed outside the
/// implemented reductions.
struct Verdict {
  CmStatus status = CmStatus::Unknown;
  bool unmixed = false;
  int dim = 0;
  std::optional<int> depth;
  std::vector<CertEntry> certificate;
};

/// Separation of a connected clutter at a vertex that is free in the clique
/// complexes of both sides; the sides meet exactly in that vertex.
struct GluingSplit {
  std::string vertex;
  Clutter left;
  Clutter right;
};

/// A vertex adjacent to every other vertex of the associated graph, with
/// the induced base. Detection is at associated-graph level; the clutter
/// itself need not literally be a cone over the base.
struct ConeApex {
  std::string vertex;
  Clutter base;
};

/// Binary gluing tree: leaves carry the blocks, inner nodes record the
/// shared free vertex of their two sides.
struct GluingTree {
  struct Leaf {
    Clutter block;
  };
  struct Glue {
    std::string vertex;
    std::unique_ptr<GluingTree> left;
    std::unique_ptr<GluingTree> right;
  };
  std::variant<Leaf, Glue> node;

  bool is_leaf() const { return std::holds_alternative<Leaf>(node); }
  std::size_t leaf_count() const;
};

struct VerdictOptions {
  EnumOptions enumeration;
  /// When set, eligible gluing vertices and apexes are chosen pseudo-randomly
  /// instead of smallest-label-first. The status must not depend on it.
  std::optional<std::uint64_t> tiebreak_seed;
};

/// Find a gluing split of a connected clutter: a cut vertex whose removal
/// leaves exactly two components and which is free in both sides' clique
/// complexes. Smallest such vertex wins. nullopt when none exists (or the
/// clutter is not connected).
std::optional<GluingSplit> gluing_split(const Clutter& c);

/// Smallest vertex adjacent to all others, with the base clutter induced on
/// the rest. nullopt when no such vertex exists.
std::optional<ConeApex> graph_cone_apex(const Clutter& c);

/// Is the clutter literally a cone with this apex, i.e. equal to
/// cone(apex, induced base)? Graph-level cones need not be.
bool is_literal_cone(const Clutter& c, VertexId apex);

/// When the associated graph is chordal and the facets pairwise intersect in
/// at most one vertex, the ideal is Cohen-Macaulay exactly when no vertex
/// lies in three or more facets; returns that answer, or nullopt when the
/// shape does not apply.
std::optional<bool> chordal_clique_case(const Clutter& c,
                                        std::size_t budget = kDefaultCliqueBudget);

/// Rule-based Cohen-Macaulay decision. Rules fire in a fixed order:
///   1. reduce to connected components;
///   2. complete clutters are Cohen-Macaulay;
///   3. gluing splits: Cohen-Macaulay iff both sides are;
///   4. cone over a two-component base: Cohen-Macaulay iff both parts are;
///   5. cone over three or more components: never unmixed, so never CM;
///   6. chordal clique decomposition;
///   7. not unmixed => not Cohen-Macaulay; otherwise Unknown.
Verdict cm_verdict(const Clutter& c, const VerdictOptions& opts = {});

/// Exact depth where the reductions close: complete clutter on m vertices
/// has depth m + 1 (zero for the empty clutter), disjoint unions add,
/// a gluing is the sum of its sides minus 2, and a graph cone over a
/// disconnected base on m vertices has depth min(depth(base), m + 2).
/// nullopt when the recursion reaches an unclassified block.
std::optional<int> depth_exact(const Clutter& c);

/// Validate a user-supplied block decomposition: blocks connected and
/// covering the edges, pairwise vertex intersections of size at most one and
/// free on both sides, empty triple intersections, and a tree intersection
/// pattern. Returns the folded tree, or nullopt when a condition fails.
/// Throws BlocksDontCoverEdges when the blocks do not reassemble the clutter.
std::optional<GluingTree> general_gluing_decomposition(
    const Clutter& c, const std::vector<Clutter>& blocks);

}  // namespace beic
