#ifndef TOWERS_BLOCK_SYSTEM_HPP
#define TOWERS_BLOCK_SYSTEM_HPP

#include <vector>

#include "towers/perm_group.hpp"

namespace towers {

/// A system of blocks of imprimitivity: a partition of the domain permuted
/// setwise by every group element, together with the induced action on the
/// blocks.
struct BlockSystem {
  std::vector<std::vector<unsigned>> blocks; // sorted, ordered by min point
  std::vector<Perm> generator_action;        // induced block permutations,
                                             // one per group generator
};

/// Orbit partition of the domain, each orbit sorted, orbits ordered by
/// least point.
std::vector<std::vector<unsigned>> orbits(const PermGroup &g);

/// The finest block system of a transitive group in which a and b share a
/// block (Atkinson's union-find algorithm). Seeds with a == b give the
/// partition into singletons.
BlockSystem minimal_block(const PermGroup &g, unsigned a, unsigned b);

/// All blocks of imprimitivity containing v, for transitive g. Every block
/// through v is a join of minimal blocks, so the list is the closure of
/// {{v}} and the minimal blocks under pairwise join. Sorted by size and
/// ordered by inclusion whenever they form a chain.
std::vector<std::vector<unsigned>> blocks_through_point(const PermGroup &g,
                                                        unsigned v);

/// The partition {g[block] : g in G} induced by a block of imprimitivity:
/// the orbit of the block under the set action of the generators.
std::vector<std::vector<unsigned>>
block_orbit(const PermGroup &g, const std::vector<unsigned> &block);

} // namespace towers

#endif
