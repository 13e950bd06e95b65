#ifndef TOWERS_TREE_CODING_HPP
#define TOWERS_TREE_CODING_HPP

#include <vector>

#include "towers/graph.hpp"
#include "towers/normal_tree.hpp"

namespace towers {

/// A rooted tree coded as a graph: one rigid 2-connected gadget per node,
/// bridges between the anchor vertices realizing the parent relation, and
/// a second, non-isomorphic gadget marking the root. Restriction along the
/// bridge forest gives Aut(graph) = Aut(tree), and two trees are isomorphic
/// iff their codes are.
struct TreeCode {
  Graph graph;
  std::vector<std::vector<unsigned>> node_anchor; // (level, idx) -> vertex
  unsigned marker_anchor = 0;
};

/// The two gadgets: (node gadget, root marker). Deterministically the first
/// two 2-connected rigid graphs in (vertex count, canonical form) order.
std::pair<Graph, Graph> coding_gadgets();

/// Codes a tree with at most one root. The empty tree codes to the bare
/// root marker.
TreeCode encode_tree(const NormalTree &t);

} // namespace towers

#endif
