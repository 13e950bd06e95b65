#ifndef TOWERS_GRAPH_HPP
#define TOWERS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towers/perm_group.hpp"

namespace towers {

/// A finite simple undirected graph on vertices {0, ..., n-1}. No loops,
/// no duplicate edges. Immutable after construction.
class Graph {
public:
  Graph() = default;
  Graph(unsigned vertex_count,
        std::vector<std::pair<unsigned, unsigned>> edges);

  static Graph complete(unsigned n);
  static Graph path(unsigned n);
  static Graph cycle(unsigned n);

  unsigned vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<unsigned, unsigned>> &edges() const {
    return edges_;
  }
  bool adjacent(unsigned u, unsigned v) const {
    return adj_[static_cast<std::size_t>(u) * words_ + v / 64] >>
               (v % 64) &
           1u;
  }
  unsigned degree_of(unsigned v) const { return degrees_[v]; }
  const std::vector<unsigned> &neighbors(unsigned v) const {
    return neighbors_[v];
  }

  /// Graph with vertex v renamed to relabel[v].
  Graph relabeled(const std::vector<unsigned> &relabel) const;

  bool operator==(const Graph &rhs) const {
    return n_ == rhs.n_ && edges_ == rhs.edges_;
  }

private:
  unsigned n_ = 0;
  unsigned words_ = 0;
  std::vector<std::pair<unsigned, unsigned>> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<unsigned> degrees_;
  std::vector<std::vector<unsigned>> neighbors_;
};

/// Vertex partition into maximal connected pieces; classes sorted, ordered
/// by least vertex.
std::vector<std::vector<unsigned>> connected_components(const Graph &g);

bool is_connected(const Graph &g);

/// Disjoint union, with the offset map recording where each part landed.
struct GraphSum {
  Graph graph;
  std::vector<unsigned> offsets; // vertex v of part i -> offsets[i] + v
};

GraphSum direct_sum(const std::vector<Graph> &parts);

/// Full automorphism group, computed by refinement-guided backtracking
/// along the stabiliser chain of the vertex order.
PermGroup aut_group(const Graph &g);

/// Witness vertex bijection preserving edges both ways, or absence.
std::optional<std::vector<unsigned>> is_isomorphic(const Graph &a,
                                                   const Graph &b);

/// Isomorphism-invariant canonical form: the lexicographically least
/// adjacency bit string over vertex orderings. Exhaustive minimisation for
/// up to 8 vertices, refinement-guided branch and bound above.
struct CanonicalForm {
  unsigned n = 0;
  std::vector<std::uint8_t> bits;    // pair bits in placement order
  std::vector<unsigned> ordering;    // ordering[i] = original vertex at i

  auto operator<=>(const CanonicalForm &rhs) const {
    if (auto c = n <=> rhs.n; c != 0)
      return c;
    return bits <=> rhs.bits;
  }
  bool operator==(const CanonicalForm &rhs) const {
    return n == rhs.n && bits == rhs.bits;
  }

  std::string hex() const;
  /// The canonical representative graph.
  Graph to_graph() const;
};

CanonicalForm canonical_form(const Graph &g);

/// g relabeled into its canonical ordering.
Graph canonical_relabel(const Graph &g);

} // namespace towers

#endif
