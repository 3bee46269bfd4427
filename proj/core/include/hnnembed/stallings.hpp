#pragma once

// Stallings graphs for finitely generated subgroups of free groups.
//
// Edges are stored once, oriented so their label is a positive generator;
// a walk reads x along an edge forwards and x' along it backwards. A vertex's
// degree counts edge endpoints, so a loop contributes 2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hnnembed/words.hpp"

namespace hnnembed {

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::uint32_t label = 0;

  bool operator==(const GraphEdge&) const = default;
  auto operator<=>(const GraphEdge&) const = default;
};

class CoreGraph {
 public:
  CoreGraph() = default;
  CoreGraph(std::size_t vertex_count, std::size_t basepoint, std::vector<GraphEdge> edges, bool folded = false);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t basepoint() const noexcept { return basepoint_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  bool folded() const noexcept { return folded_; }

  std::size_t degree(std::size_t v) const;
  bool connected() const;
  // Signed letters readable leaving v, in letter order, with multiplicity.
  std::vector<Letter> outgoing_labels(std::size_t v) const;

 private:
  std::size_t vertex_count_ = 1;
  std::size_t basepoint_ = 0;
  std::vector<GraphEdge> edges_;
  bool folded_ = false;
};

// One closed path per word, all through the basepoint. Throws on an empty word.
CoreGraph bouquet(const std::vector<Word>& generators);

enum class FoldOrder {
  first_edge,  // resolve the violation found scanning edges from the front
  last_edge,   // ... from the back
};

CoreGraph fold(const CoreGraph& g, FoldOrder order = FoldOrder::first_edge);
CoreGraph trim_to_core(const CoreGraph& g);

// fold + trim_to_core of the bouquet.
CoreGraph subgroup_core(const std::vector<Word>& generators);

bool membership(const CoreGraph& g, const Word& w);
std::size_t rank(const CoreGraph& g);
std::size_t basepoint_degree(const CoreGraph& g);

// Signed letters that no edge at the basepoint reads outgoing, in letter order.
std::vector<Letter> unused_basepoint_labels(const CoreGraph& g, const Alphabet& alphabet);
// The first `count` of them; throws Error("degree bound violated") if short.
std::vector<Letter> take_unused_basepoint_labels(const CoreGraph& g, const Alphabet& alphabet, std::size_t count);

// Injective iff the images freely generate a subgroup of rank |images|.
bool is_monomorphism(const std::vector<Word>& images);

// True iff wedging the loops onto the basepoint needs no fold there: their
// first letters, inverted last letters, and the core's basepoint labels are
// pairwise distinct, and each loop is cyclically reduced.
bool wedge_extension_check(const CoreGraph& core, const std::vector<Word>& new_loops);

// Attach each loop at the basepoint without folding.
CoreGraph wedge(const CoreGraph& core, const std::vector<Word>& new_loops);

// Vertices renumbered in BFS discovery order from the basepoint, exploring
// half-edges in letter order; edges sorted. Two folded graphs are isomorphic
// as based labelled graphs iff their canonical forms are equal.
struct CanonicalGraph {
  std::size_t vertex_count = 0;
  std::vector<GraphEdge> edges;

  bool operator==(const CanonicalGraph&) const = default;
};

CanonicalGraph canonical_form(const CoreGraph& g);

}  // namespace hnnembed
