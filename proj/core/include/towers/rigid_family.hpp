#ifndef TOWERS_RIGID_FAMILY_HPP
#define TOWERS_RIGID_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "towers/graph.hpp"

namespace towers {

/// Per-member proof obligations: trivial automorphism group, connectivity,
/// and the canonical form that witnesses pairwise non-isomorphism.
struct RigidCertificate {
  std::uint64_t aut_order = 0;
  bool connected = false;
  CanonicalForm form;
};

/// A deterministic family of pairwise non-isomorphic connected rigid
/// graphs. Members are canonical representatives listed in increasing
/// (vertex count, canonical form) order.
struct RigidFamily {
  std::vector<Graph> members;
  std::vector<RigidCertificate> certificates;
};

struct RigidFamilyBudget {
  /// Exhaustive generation is feasible through 7 vertices; asking for more
  /// members than those sizes supply exhausts the budget.
  unsigned max_vertices = 7;
};

/// The first k connected rigid graphs with at least 2 vertices (the
/// 1-vertex graph is rigid but degenerate and excluded; sizes 2-5 admit
/// none, so members start at 6 vertices). Throws budget_error when k
/// outruns the enumerable sizes.
RigidFamily rigid_family(std::size_t k, const RigidFamilyBudget &budget = {});

/// All connected rigid graphs on exactly n vertices, canonical
/// representatives in canonical-form order. Exhaustive over the 2^(n(n-1)/2)
/// labelled graphs; intended for n <= 7.
std::vector<Graph> rigid_graphs_of_size(unsigned n);

} // namespace towers

#endif
