#ifndef TOWERS_NORMALIZER_HPP
#define TOWERS_NORMALIZER_HPP

#include <cstdint>

#include "towers/perm_group.hpp"

namespace towers {

/// Budgets for the search kernels. Exceeding max_nodes raises budget_error;
/// a search never degrades to an approximate answer.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  /// Ambient orders up to this bound are handled by exhaustive scan.
  std::uint64_t exhaustive_limit = 50'000;
};

/// N_ambient(g) = {a in ambient : a g a^-1 = g}. Dispatches to an
/// exhaustive scan when |ambient| <= budget.exhaustive_limit, otherwise to
/// base-image backtracking with conjugation pruning (after splitting along
/// ambient orbits when both groups decompose). Requires g <= ambient.
PermGroup normalizer(const PermGroup &ambient, const PermGroup &g,
                     const SearchBudget &budget = {});

/// The exhaustive backend: full enumeration of the ambient group. Exposed
/// for oracle cross-checks.
PermGroup normalizer_exhaustive(const PermGroup &ambient, const PermGroup &g,
                                const SearchBudget &budget = {});

/// The backtracking backend: base-image search over the ambient stabiliser
/// chain, pruned by the pair-orbit structure of g, exact leaf verification.
/// Exposed for oracle cross-checks.
PermGroup normalizer_backtrack(const PermGroup &ambient, const PermGroup &g,
                               const SearchBudget &budget = {});

} // namespace towers

#endif
