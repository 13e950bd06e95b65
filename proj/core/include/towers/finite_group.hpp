#ifndef TOWERS_FINITE_GROUP_HPP
#define TOWERS_FINITE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towers/perm_group.hpp"

namespace towers {

/// A finite group given by its multiplication table over element ids
/// 0..n-1, id 0 the identity. Validated on construction (associativity,
/// identity, inverses).
class FiniteGroup {
public:
  FiniteGroup(); // trivial group

  explicit FiniteGroup(std::vector<std::vector<unsigned>> table);

  /// Elements enumerated from a faithful permutation representation,
  /// ordered lexicographically by image vector (deterministic ids).
  static FiniteGroup from_perm_group(const PermGroup &g,
                                     std::uint64_t max_order = 5000);

  unsigned order() const { return n_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned element_order(unsigned a) const;
  const std::vector<std::vector<unsigned>> &table() const { return table_; }

  /// A small generating set, found greedily (smallest id extending the
  /// generated subgroup fastest).
  std::vector<unsigned> generators() const;

  /// Subgroup generated by the given elements, as a sorted element list.
  std::vector<unsigned> closure(std::vector<unsigned> gens) const;

private:
  unsigned n_ = 1;
  std::vector<std::vector<unsigned>> table_;
  std::vector<unsigned> inv_;
};

/// Z(G) as a sorted element list; centreless iff it is {0}.
std::vector<unsigned> center(const FiniteGroup &g);
bool is_centreless(const FiniteGroup &g);

/// Aut(G) with its action on G: element k of `group` acts on G's ids as
/// `action[k]`. `inner` embeds G: inner[g] is the id of conjugation by g.
struct AutGroup {
  FiniteGroup group;
  std::vector<std::vector<unsigned>> action;
  std::vector<unsigned> inner;

  std::uint64_t order() const { return group.order(); }
  bool all_inner(unsigned g_order) const;
};

struct AutBudget {
  /// Bound on |G| for the generator-image search.
  unsigned max_order = 200;
};

/// All automorphisms by backtracking over generator images, pruned by
/// element order and conjugacy-class size fingerprints.
AutGroup aut_abstract(const FiniteGroup &g, const AutBudget &budget = {});

/// The automorphism tower G -> Aut(G) -> Aut(Aut(G)) -> ... of a
/// centreless group, iterated until Aut = Inn. Embeddings are materialized
/// maps level -> next level.
struct AutTower {
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<unsigned>> embeddings; // level i ids -> level i+1
  std::size_t height = 0;                        // tau
  bool complete = true;
};

AutTower automorphism_tower(const FiniteGroup &g, const AutBudget &budget = {});

/// Realizes every tower level inside the terminal group via the composed
/// embeddings, computes the normaliser tower of the base image there, and
/// compares level by level; also asserts the trivial centralizers the
/// comparison rests on.
struct TowerComparisonReport {
  bool levels_match = false;
  bool centralizers_trivial = false;
  std::size_t aut_height = 0;
  std::size_t normaliser_height = 0;
  std::vector<std::uint64_t> level_orders;
  std::string detail;

  bool pass() const { return levels_match && centralizers_trivial; }
};

TowerComparisonReport check_tower_comparison(const FiniteGroup &g,
                                             const AutBudget &budget = {});

} // namespace towers

#endif
