#ifndef TOWERS_PERM_ISO_HPP
#define TOWERS_PERM_ISO_HPP

#include <optional>

#include "towers/labeled_action.hpp"
#include "towers/normalizer.hpp"
#include "towers/perm_group.hpp"

namespace towers {

/// Witness of a permutation-group isomorphism (f, phi) from (A, Omega_A)
/// onto (B, Omega_B): phi is the domain bijection and f(g) = phi g phi^-1.
/// The pair satisfies f(g)(phi(x)) = phi(g(x)) by construction.
struct PermIsoWitness {
  Perm domain_map; // phi

  Perm apply_f(const Perm &g) const {
    return domain_map * g * domain_map.inverse();
  }
};

/// Searches for a permutation-group isomorphism witness by backtracking
/// over domain bijections with orbit and pair-orbit pruning. Absence is a
/// result, not an error. Feasible for degrees up to about 16.
std::optional<PermIsoWitness> perm_iso(const PermGroup &a, const PermGroup &b,
                                       const SearchBudget &budget = {});

std::optional<PermIsoWitness> perm_iso(const LabeledAction &a,
                                       const LabeledAction &b,
                                       const SearchBudget &budget = {});

/// Checks conditions (i)-(iii) of a permutation-group isomorphism for an
/// explicit domain bijection.
bool is_perm_iso_witness(const PermGroup &a, const PermGroup &b,
                         const Perm &phi);

} // namespace towers

#endif
