#include "towers/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "towers/errors.hpp"

namespace towers {

namespace {

// Recompute a level's orbit and transversal from its generator list. BFS in
// discovery order with generators applied in list order keeps the result
// deterministic in the generators.
void rebuild_orbit(BsgsLevel &lvl, unsigned degree) {
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit_index.assign(degree, -1);

  lvl.orbit.push_back(lvl.base_point);
  lvl.transversal.push_back(Perm(degree));
  lvl.orbit_index[lvl.base_point] = 0;

  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    unsigned x = lvl.orbit[i];
    for (const Perm &g : lvl.gens) {
      unsigned y = g[x];
      if (lvl.orbit_index[y] < 0) {
        lvl.orbit_index[y] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.transversal.push_back(g * lvl.transversal[i]);
      }
    }
  }
}

unsigned least_moved_point(const Perm &p) {
  for (unsigned x = 0; x < p.degree(); ++x)
    if (p[x] != x)
      return x;
  throw std::logic_error("least_moved_point: identity");
}

// Deterministic incremental Schreier-Sims. The strong set S is global;
// level i works with the members of S fixing base[0..i). Verification
// walks the levels from the deepest up: a Schreier generator that fails to
// strip is added to S at its stall level and the walk jumps back there.
// A generator added at level j moves base[j], so levels deeper than j keep
// their verified status; levels at or below j are rescanned on the way
// down. New base points are the least point moved by the offending
// residual.
class BsgsBuilder {
public:
  BsgsBuilder(unsigned degree, const std::vector<Perm> &gens)
      : degree_(degree) {
    for (const Perm &g : gens)
      if (!g.is_identity()) {
        strong_.push_back(g);
        ensure_base_point(g);
      }
    rebuild_from(0);
    for (std::size_t i = levels_.size(); i-- > 0;)
      scan_level(i);
  }

  Bsgs take() {
    Bsgs b;
    b.degree = degree_;
    b.levels = std::move(levels_);
    return b;
  }

private:
  void ensure_base_point(const Perm &g) {
    for (unsigned b : base_)
      if (g[b] != b)
        return;
    base_.push_back(least_moved_point(g));
    levels_.emplace_back();
    levels_.back().base_point = base_.back();
  }

  bool fixes_prefix(const Perm &g, std::size_t i) const {
    for (std::size_t k = 0; k < i; ++k)
      if (g[base_[k]] != base_[k])
        return false;
    return true;
  }

  void rebuild_from(std::size_t from) {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      levels_[i].gens.clear();
      for (const Perm &s : strong_)
        if (fixes_prefix(s, i))
          levels_[i].gens.push_back(s);
      rebuild_orbit(levels_[i], degree_);
    }
  }

  std::pair<Perm, std::size_t> strip_from(const Perm &p,
                                          std::size_t from) const {
    Perm h = p;
    for (std::size_t i = from; i < levels_.size(); ++i) {
      unsigned x = h[levels_[i].base_point];
      if (!levels_[i].in_orbit(x))
        return {h, i};
      h = levels_[i].transversal[levels_[i].orbit_index[x]].inverse() * h;
    }
    return {h, levels_.size()};
  }

  // Scans the Schreier generators of level i; on failure records the new
  // strong generator and rescans from the insert level. Returns when the
  // level finally scans clean.
  bool scan_level(std::size_t i) {
    for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const Perm &s = levels_[i].gens[si];
        unsigned y = s[levels_[i].orbit[oi]];
        Perm schreier =
            levels_[i].transversal[levels_[i].orbit_index[y]].inverse() * s *
            levels_[i].transversal[oi];
        auto [h, j] = strip_from(schreier, i + 1);
        if (h.is_identity())
          continue;
        if (j == levels_.size()) {
          base_.push_back(least_moved_point(h));
          levels_.emplace_back();
          levels_.back().base_point = base_.back();
        }
        strong_.push_back(h);
        // h fixes base[0..j), so only levels <= j change; deeper levels
        // stay verified
        rebuild_from(0);
        for (std::size_t k = j; k > i; --k)
          scan_level(k);
        // restart this level: its orbit may have grown
        oi = 0;
        si = static_cast<std::size_t>(-1);
      }
    }
    return true;
  }

  unsigned degree_;
  std::vector<unsigned> base_;
  std::vector<Perm> strong_;
  std::vector<BsgsLevel> levels_;
};

} // namespace

std::uint64_t Bsgs::order() const {
  std::uint64_t n = 1;
  for (const auto &lvl : levels)
    n *= lvl.orbit.size();
  return n;
}

std::pair<Perm, std::size_t> Bsgs::strip(const Perm &p) const {
  Perm h = p;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    unsigned x = h[levels[i].base_point];
    if (!levels[i].in_orbit(x))
      return {h, i};
    h = levels[i].transversal[levels[i].orbit_index[x]].inverse() * h;
  }
  return {h, levels.size()};
}

PermGroup::PermGroup() : PermGroup(0) {}

PermGroup::PermGroup(unsigned degree) : degree_(degree), order_(1) {
  bsgs_.degree = degree;
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree) {
  for (const Perm &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
  gens_ = std::move(generators);
  std::vector<Perm> nontrivial;
  for (const Perm &g : gens_)
    if (!g.is_identity())
      nontrivial.push_back(g);
  bsgs_ = BsgsBuilder(degree, nontrivial).take();
  order_ = bsgs_.order();
}

PermGroup PermGroup::symmetric(unsigned degree) {
  if (degree <= 1)
    return PermGroup(degree);
  std::vector<Perm> gens{Perm::transposition(degree, 0, 1)};
  if (degree > 2) {
    std::vector<unsigned> img(degree);
    for (unsigned x = 0; x < degree; ++x)
      img[x] = (x + 1) % degree;
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating(unsigned degree) {
  if (degree <= 2)
    return PermGroup(degree);
  std::vector<Perm> gens;
  for (unsigned x = 2; x < degree; ++x)
    gens.push_back(Perm::cycle(degree, {0, 1, x}));
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(unsigned degree) {
  if (degree <= 1)
    return PermGroup(degree);
  std::vector<unsigned> img(degree);
  for (unsigned x = 0; x < degree; ++x)
    img[x] = (x + 1) % degree;
  return PermGroup(degree, {Perm(std::move(img))});
}

PermGroup PermGroup::dihedral(unsigned n) {
  if (n < 3)
    throw std::invalid_argument("dihedral: need n >= 3");
  std::vector<unsigned> rot(n), refl(n);
  for (unsigned x = 0; x < n; ++x) {
    rot[x] = (x + 1) % n;
    refl[x] = (n - x) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    return false;
  auto [h, passed] = bsgs_.strip(p);
  return passed == bsgs_.levels.size() && h.is_identity();
}

bool PermGroup::contains_group(const PermGroup &g) const {
  if (g.degree() != degree_)
    return false;
  for (const Perm &gen : g.generators())
    if (!contains(gen))
      return false;
  return true;
}

bool PermGroup::operator==(const PermGroup &rhs) const {
  // equal orders make one-sided generator membership equivalent to mutual
  // membership
  return degree_ == rhs.degree_ && order_ == rhs.order_ &&
         contains_group(rhs);
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0)
    return true;
  std::vector<bool> seen(degree_, false);
  std::vector<unsigned> queue{0};
  seen[0] = true;
  std::size_t covered = 1;
  while (!queue.empty()) {
    unsigned x = queue.back();
    queue.pop_back();
    for (const Perm &g : gens_) {
      unsigned y = g[x];
      if (!seen[y]) {
        seen[y] = true;
        ++covered;
        queue.push_back(y);
      }
    }
  }
  return covered == degree_;
}

void PermGroup::for_each_element(
    const std::function<void(const Perm &)> &fn) const {
  const auto &levels = bsgs_.levels;
  if (levels.empty()) {
    fn(Perm(degree_));
    return;
  }
  // odometer over the transversals, deepest level varying fastest;
  // partial[i] caches the product of picks for levels [0, i)
  std::vector<std::size_t> state(levels.size(), 0);
  std::vector<Perm> partial(levels.size() + 1, Perm(degree_));
  for (std::size_t i = 0; i < levels.size(); ++i)
    partial[i + 1] = partial[i] * levels[i].transversal[0];
  while (true) {
    fn(partial[levels.size()]);
    std::size_t i = levels.size();
    while (i > 0 && state[i - 1] + 1 == levels[i - 1].transversal.size()) {
      state[i - 1] = 0;
      --i;
    }
    if (i == 0)
      break;
    ++state[i - 1];
    for (std::size_t j = i - 1; j < levels.size(); ++j)
      partial[j + 1] = partial[j] * levels[j].transversal[state[j]];
  }
}

std::vector<Perm> PermGroup::elements(std::uint64_t max_count) const {
  if (order_ > max_count)
    throw budget_error("PermGroup::elements: order exceeds budget");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Perm &p) { out.push_back(p); });
  return out;
}

PermGroup PermGroup::shifted(unsigned offset, unsigned new_degree) const {
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (const Perm &g : gens_)
    gens.push_back(g.shifted(offset, new_degree));
  return PermGroup(new_degree, std::move(gens));
}

PermGroup PermGroup::relocated(const std::vector<unsigned> &placement,
                               unsigned new_degree) const {
  if (placement.size() != degree_)
    throw std::invalid_argument("relocated: placement size mismatch");
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (const Perm &g : gens_) {
    std::vector<unsigned> img(new_degree);
    for (unsigned x = 0; x < new_degree; ++x)
      img[x] = x;
    for (unsigned x = 0; x < degree_; ++x)
      img[placement[x]] = placement[g[x]];
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(new_degree, std::move(gens));
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b) {
  unsigned n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &g : a.generators())
    gens.push_back(g.extended(n));
  for (const Perm &g : b.generators())
    gens.push_back(g.shifted(a.degree(), n));
  return PermGroup(n, std::move(gens));
}

std::ostream &operator<<(std::ostream &os, const PermGroup &g) {
  os << "PermGroup(degree=" << g.degree() << ", order=" << g.order() << ")";
  return os;
}

} // namespace towers
