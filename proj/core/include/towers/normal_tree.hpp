#ifndef TOWERS_NORMAL_TREE_HPP
#define TOWERS_NORMAL_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace towers {

/// A finite tree of nodes addressed positionally as (level, index). Nodes
/// carry parent links into the previous level; level 0 holds the roots.
/// The height is the first empty level.
class NormalTree {
public:
  NormalTree() = default;

  /// parents[k][i] is the parent (index within level k-1) of node (k, i);
  /// the entries of parents[0] are ignored and conventionally 0.
  static NormalTree from_parents(std::vector<std::vector<unsigned>> parents);

  unsigned height() const { return static_cast<unsigned>(parent_.size()); }
  std::size_t level_size(unsigned k) const { return parent_[k].size(); }
  std::size_t node_count() const;
  unsigned parent_of(unsigned level, unsigned idx) const {
    return parent_[level][idx];
  }
  std::vector<unsigned> children_of(unsigned level, unsigned idx) const;
  const std::vector<std::vector<unsigned>> &parents() const { return parent_; }

  /// Number of maximal chains (one per childless node).
  std::size_t branch_count() const;

  bool operator==(const NormalTree &rhs) const {
    return parent_ == rhs.parent_;
  }

private:
  std::vector<std::vector<unsigned>> parent_;
};

/// The complete binary tree of height n: levels 0..n-1 of sizes 2^k.
NormalTree build_normal(unsigned n);

/// End-extension to the given height: the result restricted to the old
/// height is the input node-for-node, and the new levels split binarily.
NormalTree end_extend(const NormalTree &t, unsigned new_height);

struct NormalVerdict {
  bool normal = false;
  std::vector<std::string> violations;
  /// Conditions with no finite content, recorded rather than omitted.
  std::vector<std::string> vacuous;
};

/// Checks the normality clauses: unique root, exact binary splitting below
/// the top level, extension of every node to every higher level, and the
/// limit-level clauses (vacuous at finite height).
NormalVerdict validate_normal(const NormalTree &t);

/// A level-preserving isomorphism between the restrictions of two trees to
/// levels 0..delta.
struct PartialTreeIso {
  unsigned delta = 0;
  std::vector<std::vector<unsigned>> map; // map[k][i] = image index at level k

  /// The root-only partial map between trees with unique roots.
  static PartialTreeIso root_map();
};

/// Full-tree isomorphism maps, one image list per level.
using TreeIso = std::vector<std::vector<unsigned>>;

bool is_partial_iso(const NormalTree &s, const NormalTree &t,
                    const PartialTreeIso &phi);
bool is_full_iso(const NormalTree &s, const NormalTree &t, const TreeIso &pi);

/// Extends phi to a full isomorphism by matching, for each node s at level
/// delta, the subtree above s onto the subtree above phi(s) recursively in
/// child order. Requires normal trees of equal height.
TreeIso extend_iso(const NormalTree &s, const NormalTree &t,
                   const PartialTreeIso &phi);

/// Exhaustive count of the full isomorphisms s -> t extending phi.
std::uint64_t count_extensions(const NormalTree &s, const NormalTree &t,
                               const PartialTreeIso &phi);

/// Canonical code of the tree (rooted-forest invariant): two trees are
/// isomorphic iff their codes are equal.
std::string tree_code(const NormalTree &t);

/// |Aut(t)| by the multiplicity formula over the canonical subtree codes;
/// an independent route to the same number that the coded-graph
/// automorphism search produces.
std::uint64_t tree_aut_order(const NormalTree &t);

} // namespace towers

#endif
