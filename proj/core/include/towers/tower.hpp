#ifndef TOWERS_TOWER_HPP
#define TOWERS_TOWER_HPP

#include <cstdint>
#include <vector>

#include "towers/normalizer.hpp"
#include "towers/perm_group.hpp"

namespace towers {

/// Certificate that the terminal level is a fixpoint: its normalizer in the
/// ambient group was recomputed and found equal to it.
struct TowerCertificate {
  std::uint64_t terminal_order = 0;
  std::uint64_t ambient_order = 0;
  bool terminal_self_normalizing = false;
};

/// A normaliser tower: levels[0] is the starting subgroup, each next level
/// its normalizer in the ambient group, strictly ascending until the first
/// fixpoint. height = index of the terminal level.
struct Tower {
  std::vector<PermGroup> levels;
  std::size_t height = 0;
  TowerCertificate certificate;

  const PermGroup &terminal() const { return levels.back(); }
};

/// Iterates a -> N_ambient(a) starting from h until a fixpoint is reached
/// (group equality of consecutive levels). Requires h <= ambient. At finite
/// scale limit stages are unions and are reached automatically.
Tower normaliser_tower(const PermGroup &ambient, const PermGroup &h,
                       const SearchBudget &budget = {});

} // namespace towers

#endif
