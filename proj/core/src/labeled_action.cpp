#include "towers/labeled_action.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace towers {

LabeledAction::LabeledAction(PermGroup group, std::vector<Cell> cells)
    : group_(std::move(group)), cells_(std::move(cells)) {
  std::vector<bool> covered(group_.degree(), false);
  std::set<std::string> names;
  for (const Cell &c : cells_) {
    if (!names.insert(c.name).second)
      throw std::invalid_argument("LabeledAction: duplicate cell name " +
                                  c.name);
    for (unsigned x : c.points) {
      if (x >= group_.degree() || covered[x])
        throw std::invalid_argument(
            "LabeledAction: cells do not partition the domain");
      covered[x] = true;
    }
  }
  for (bool b : covered)
    if (!b)
      throw std::invalid_argument(
          "LabeledAction: cells do not partition the domain");
}

LabeledAction LabeledAction::plain(PermGroup group, const std::string &name) {
  std::vector<unsigned> pts(group.degree());
  std::iota(pts.begin(), pts.end(), 0u);
  std::vector<Cell> cells;
  if (!pts.empty())
    cells.push_back({name, name, std::move(pts)});
  return LabeledAction(std::move(group), std::move(cells));
}

const Cell *LabeledAction::find_cell(const std::string &name) const {
  for (const Cell &c : cells_)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::vector<const Cell *>
LabeledAction::cells_with_tag(const std::string &tag) const {
  std::vector<const Cell *> out;
  for (const Cell &c : cells_)
    if (c.tag == tag)
      out.push_back(&c);
  return out;
}

LabeledAction LabeledAction::with_group(PermGroup g) const {
  if (g.degree() != degree())
    throw std::invalid_argument("with_group: degree mismatch");
  return LabeledAction(std::move(g), cells_);
}

ProductAction direct_product(const std::vector<LabeledAction> &factors) {
  unsigned total = 0;
  for (const auto &f : factors)
    total += f.degree();

  std::vector<FactorSpan> spans;
  std::vector<Perm> gens;
  std::vector<Cell> cells;
  unsigned offset = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const LabeledAction &f = factors[i];
    spans.push_back({offset, f.degree()});
    for (const Perm &g : f.group().generators())
      gens.push_back(g.shifted(offset, total));
    for (const Cell &c : f.cells()) {
      Cell shifted{"p" + std::to_string(i) + "." + c.name, c.tag, c.points};
      for (unsigned &x : shifted.points)
        x += offset;
      cells.push_back(std::move(shifted));
    }
    offset += f.degree();
  }
  return {LabeledAction(PermGroup(total, std::move(gens)), std::move(cells)),
          std::move(spans)};
}

ProductAction wreath_top(const std::vector<LabeledAction> &copies) {
  if (copies.empty())
    throw std::invalid_argument("wreath_top: no copies");
  for (const auto &c : copies)
    if (!(c.group() == copies[0].group()))
      throw std::invalid_argument(
          "wreath_top: copies are not isomorphic (equal actions required)");

  ProductAction base = direct_product(copies);
  unsigned d = copies[0].degree();
  unsigned total = base.action.degree();

  std::vector<Perm> gens = base.action.group().generators();
  auto swap_blocks = [&](unsigned i, unsigned j) {
    std::vector<unsigned> img(total);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned x = 0; x < d; ++x) {
      img[base.spans[i].offset + x] = base.spans[j].offset + x;
      img[base.spans[j].offset + x] = base.spans[i].offset + x;
    }
    return Perm(std::move(img));
  };
  // adjacent transpositions generate the top Sym(k)
  for (unsigned i = 0; i + 1 < copies.size(); ++i)
    gens.push_back(swap_blocks(i, i + 1));

  return {base.action.with_group(PermGroup(total, std::move(gens))),
          base.spans};
}

ProductAction wreath_top(const LabeledAction &action, unsigned k) {
  return wreath_top(std::vector<LabeledAction>(k, action));
}

} // namespace towers
