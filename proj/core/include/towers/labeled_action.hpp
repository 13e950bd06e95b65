#ifndef TOWERS_LABELED_ACTION_HPP
#define TOWERS_LABELED_ACTION_HPP

#include <string>
#include <vector>

#include "towers/perm_group.hpp"

namespace towers {

/// A named cell of a labeled domain. `name` is unique within an action;
/// `tag` preserves the cell's semantic identity across products, where names
/// get position prefixes to stay distinct.
struct Cell {
  std::string name;
  std::string tag;
  std::vector<unsigned> points;
};

/// A permutation group together with a partition of its domain into named
/// cells.
class LabeledAction {
public:
  LabeledAction() = default;
  LabeledAction(PermGroup group, std::vector<Cell> cells);

  /// Single unnamed cell covering the whole domain.
  static LabeledAction plain(PermGroup group, const std::string &name = "dom");

  const PermGroup &group() const { return group_; }
  unsigned degree() const { return group_.degree(); }
  const std::vector<Cell> &cells() const { return cells_; }

  const Cell *find_cell(const std::string &name) const;
  /// All cells carrying the given semantic tag, in cell order.
  std::vector<const Cell *> cells_with_tag(const std::string &tag) const;

  /// Same-degree replacement of the group, keeping the cells.
  LabeledAction with_group(PermGroup g) const;

private:
  PermGroup group_;
  std::vector<Cell> cells_;
};

/// Where each factor of a product landed in the combined domain.
struct FactorSpan {
  unsigned offset = 0;
  unsigned degree = 0;
};

struct ProductAction {
  LabeledAction action;
  std::vector<FactorSpan> spans;
};

/// Direct product acting on the disjoint union of the factor domains
/// (realized by offset shifting). Factor i's cell names are prefixed with
/// "pi." so names stay distinct; tags are carried through unchanged.
ProductAction direct_product(const std::vector<LabeledAction> &factors);

/// Wreath product F wr Sym(k) for k pairwise-equal copies: the base is the
/// direct product of the copies and the top Sym(k) exchanges the copies
/// coordinate-wise. Throws if the copies are not equal as permutation
/// groups (the construction needs literally aligned coordinates).
ProductAction wreath_top(const std::vector<LabeledAction> &copies);

/// Convenience: k fresh copies of one action.
ProductAction wreath_top(const LabeledAction &action, unsigned k);

} // namespace towers

#endif
