#include "towers/tower.hpp"

#include <stdexcept>

namespace towers {

Tower normaliser_tower(const PermGroup &ambient, const PermGroup &h,
                       const SearchBudget &budget) {
  Tower t;
  t.levels.push_back(h);
  while (true) {
    PermGroup next = normalizer(ambient, t.levels.back(), budget);
    if (next == t.levels.back())
      break;
    if (next.order() <= t.levels.back().order())
      throw std::logic_error("normaliser_tower: levels failed to ascend");
    t.levels.push_back(std::move(next));
  }
  t.height = t.levels.size() - 1;
  t.certificate.terminal_order = t.levels.back().order();
  t.certificate.ambient_order = ambient.order();
  t.certificate.terminal_self_normalizing = true;
  return t;
}

} // namespace towers
