#ifndef TOWERS_ASSEMBLY_HPP
#define TOWERS_ASSEMBLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "towers/rigid_family.hpp"
#include "towers/stage.hpp"

namespace towers {

enum class FactorKind { BPair, HBlock, FBlock };

std::string to_string(FactorKind k);

/// One factor of the main construction, with its place in the combined
/// component domain.
struct FactorEntry {
  FactorKind kind = FactorKind::FBlock;
  unsigned seed_index = 0; // family index of the seed graph actually used
  unsigned stage = 0;      // the factor acts on 2^stage components
  unsigned offset = 0;
  unsigned components = 0;
};

/// The main construction: for alpha >= 1,
///   H = B_alpha x H_alpha(G_alpha) x prod_{alpha <= gamma < L}
///       F_gamma(G_{gamma+1}),
/// where B_alpha doubles the pairs (F_beta(G_beta), stage beta) for
/// 1 <= beta < alpha; for alpha = 0 the B and H blocks collapse into the
/// single F_0(G_0) factor. Everything lives on the component level; the
/// seed graphs only determine which components count as interchangeable.
struct Assembly {
  unsigned L = 0;
  unsigned alpha = 0;
  std::vector<Graph> family_graphs;    // graphs by family index, after any
                                       // identification
  std::vector<unsigned> seed_used;     // family index actually used per slot
  std::vector<FactorEntry> manifest;
  PermGroup H;
  LabeledAction domain;
  std::vector<unsigned> component_seed; // per component: seed family index
  std::vector<PermGroup> f_chain;
};

struct AssemblyBudget {
  StageBudget stage;
  unsigned max_components = 64;
};

/// Requires alpha < L and at least L+1 certified family members.
Assembly assemble_main(const RigidFamily &family, unsigned L, unsigned alpha,
                       const AssemblyBudget &budget = {});

/// The automorphism group of the assembled graph on the component level:
/// the direct product of the symmetric groups on each class of mutually
/// isomorphic components (components sharing a seed graph).
PermGroup assembly_ambient(const Assembly &a);

/// Normaliser tower of H in the class-respecting ambient; the construction
/// pins its height to alpha.
Tower assembly_tower(const Assembly &a, const SearchBudget &budget = {});

/// The vertex-level disjoint union realizing the assembly, for small-scale
/// cross-checks of the component reduction.
Graph assembly_vertex_graph(const Assembly &a);

/// The sub-product of one factor kind, compacted onto its own components,
/// with the matching class-respecting ambient.
struct AssemblyPart {
  PermGroup group;
  PermGroup ambient;
};

AssemblyPart assembly_part(const Assembly &a, FactorKind kind);

/// Partition of the family indices {0..L}: class_of[i] = class id.
using IndexPartition = std::vector<unsigned>;

IndexPartition identity_partition(unsigned L);
/// The two paper shapes: merge {beta, alpha} when beta < alpha, merge the
/// interval [alpha, beta] when alpha < beta, identity when beta == alpha.
IndexPartition paper_partition(unsigned L, unsigned alpha, unsigned beta);

struct RelabelOutcome {
  Assembly rebuilt;
  std::optional<unsigned> predicted; // absent for unrecognised shapes
  std::string shape;                 // identity | pair-low | interval-high |
                                     // general
  Tower tower;
  unsigned measured = 0;
};

/// Literally identifies the graphs inside each class of E (every family
/// index is replaced by the least member of its class), rebuilds the
/// assembly, and recomputes the tower. For the identity partition and the
/// two paper shapes the expected height (alpha resp. beta) is attached as
/// the prediction.
RelabelOutcome relabel_by_E(const RigidFamily &family, const Assembly &a,
                            const IndexPartition &E,
                            const AssemblyBudget &budget = {});

} // namespace towers

#endif
