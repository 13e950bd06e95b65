#include "towers/normalizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "towers/block_system.hpp"
#include "towers/errors.hpp"

namespace towers {

namespace {

void require_subgroup(const PermGroup &ambient, const PermGroup &g) {
  if (g.degree() != ambient.degree())
    throw std::invalid_argument("normalizer: degree mismatch");
  if (!ambient.contains_group(g))
    throw std::invalid_argument("normalizer: g is not a subgroup of ambient");
}

bool normalizes(const Perm &a, const PermGroup &g) {
  // a g a^-1 <= g suffices for equality in a finite group
  Perm a_inv = a.inverse();
  for (const Perm &gen : g.generators())
    if (!g.contains(a * gen * a_inv))
      return false;
  return true;
}

// Orbit partition of the domain into the given group's orbits, as a point
// -> class id map plus class point lists.
struct OrbitClasses {
  std::vector<unsigned> class_of;
  std::vector<std::vector<unsigned>> points;
};

OrbitClasses orbit_classes(const PermGroup &g) {
  OrbitClasses oc;
  oc.class_of.assign(g.degree(), 0);
  oc.points = orbits(g);
  for (std::size_t c = 0; c < oc.points.size(); ++c)
    for (unsigned x : oc.points[c])
      oc.class_of[x] = static_cast<unsigned>(c);
  return oc;
}

PermGroup restrict_to(const PermGroup &g, const std::vector<unsigned> &pts) {
  std::vector<int> local(g.degree(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    local[pts[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm &gen : g.generators()) {
    std::vector<unsigned> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      img[i] = static_cast<unsigned>(local[gen[pts[i]]]);
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(static_cast<unsigned>(pts.size()), std::move(gens));
}

// Orbits of g on ordered pairs (x, y), diagonal included. The class table
// is the invariant that drives the backtrack pruning: conjugation by any
// normalizing element permutes these classes preserving their sizes.
struct PairClasses {
  unsigned n = 0;
  std::vector<int> class_of;       // x * n + y -> class id
  std::vector<std::uint64_t> size; // class id -> number of pairs
};

PairClasses pair_classes(const PermGroup &g) {
  unsigned n = g.degree();
  PairClasses pc;
  pc.n = n;
  pc.class_of.assign(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  std::vector<std::pair<unsigned, unsigned>> queue;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (pc.class_of[x * n + y] >= 0)
        continue;
      int c = next++;
      pc.class_of[x * n + y] = c;
      std::uint64_t count = 1;
      queue.clear();
      queue.emplace_back(x, y);
      while (!queue.empty()) {
        auto [u, v] = queue.back();
        queue.pop_back();
        for (const Perm &gen : g.generators()) {
          unsigned u2 = gen[u], v2 = gen[v];
          if (pc.class_of[u2 * n + v2] < 0) {
            pc.class_of[u2 * n + v2] = c;
            ++count;
            queue.emplace_back(u2, v2);
          }
        }
      }
      pc.size.push_back(count);
    }
  }
  return pc;
}

// Grows a permutation group one novel element at a time; used to accumulate
// the search results without re-running Schreier-Sims on stale generators.
class GroupAccumulator {
public:
  explicit GroupAccumulator(unsigned degree) : group_(degree) {}

  void add(const Perm &p) {
    if (group_.contains(p))
      return;
    gens_.push_back(p);
    group_ = PermGroup(p.degree(), gens_);
  }

  PermGroup take() { return std::move(group_); }

private:
  std::vector<Perm> gens_;
  PermGroup group_;
};

class NormalizerBacktrack {
public:
  NormalizerBacktrack(const PermGroup &ambient, const PermGroup &g,
                      const SearchBudget &budget)
      : ambient_(ambient), g_(g), budget_(budget), pc_(pair_classes(g)),
        acc_(ambient.degree()) {
    n_ = ambient.degree();
    committed_.assign(n_, -1);
    class_map_.assign(pc_.size.size(), -1);
    class_map_inv_.assign(pc_.size.size(), -1);
  }

  PermGroup run() {
    descend(0, Perm(n_));
    return acc_.take();
  }

private:
  struct Undo {
    std::vector<int> classes_bound;
    unsigned point = 0;
  };

  void descend(std::size_t level, const Perm &partial) {
    const auto &levels = ambient_.bsgs().levels;
    if (level == levels.size()) {
      if (normalizes(partial, g_))
        acc_.add(partial);
      return;
    }
    const BsgsLevel &lvl = levels[level];
    unsigned b = lvl.base_point;

    // candidates sorted by committed image for deterministic exploration
    std::vector<std::pair<unsigned, std::size_t>> cands;
    cands.reserve(lvl.orbit.size());
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i)
      cands.emplace_back(partial[lvl.orbit[i]], i);
    std::sort(cands.begin(), cands.end());

    for (auto [image, idx] : cands) {
      if (++nodes_ > budget_.max_nodes)
        throw budget_error("normalizer: node budget exhausted");
      Undo undo;
      if (!commit(b, image, undo)) {
        rollback(undo);
        continue;
      }
      descend(level + 1, partial * lvl.transversal[idx]);
      rollback(undo);
    }
  }

  bool commit(unsigned x, unsigned t, Undo &undo) {
    undo.point = x;
    committed_[x] = static_cast<int>(t);
    for (unsigned p = 0; p < n_; ++p) {
      if (committed_[p] < 0)
        continue;
      unsigned tp = static_cast<unsigned>(committed_[p]);
      if (!bind(pc_.class_of[p * n_ + x], pc_.class_of[tp * n_ + t], undo))
        return false;
      if (p != x &&
          !bind(pc_.class_of[x * n_ + p], pc_.class_of[t * n_ + tp], undo))
        return false;
    }
    return true;
  }

  bool bind(int c, int c_img, Undo &undo) {
    if (class_map_[c] >= 0)
      return class_map_[c] == c_img;
    if (class_map_inv_[c_img] >= 0)
      return false; // two classes cannot share an image
    if (pc_.size[c] != pc_.size[c_img])
      return false;
    class_map_[c] = c_img;
    class_map_inv_[c_img] = c;
    undo.classes_bound.push_back(c);
    return true;
  }

  void rollback(const Undo &undo) {
    for (int c : undo.classes_bound) {
      class_map_inv_[class_map_[c]] = -1;
      class_map_[c] = -1;
    }
    committed_[undo.point] = -1;
  }

  const PermGroup &ambient_;
  const PermGroup &g_;
  SearchBudget budget_;
  PairClasses pc_;
  GroupAccumulator acc_;
  unsigned n_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<int> committed_;
  std::vector<int> class_map_, class_map_inv_;
};

} // namespace

PermGroup normalizer_exhaustive(const PermGroup &ambient, const PermGroup &g,
                                const SearchBudget &budget) {
  require_subgroup(ambient, g);
  if (ambient.order() > budget.exhaustive_limit)
    throw budget_error("normalizer_exhaustive: ambient exceeds scan limit");
  GroupAccumulator acc(ambient.degree());
  ambient.for_each_element([&](const Perm &a) {
    if (normalizes(a, g))
      acc.add(a);
  });
  return acc.take();
}

PermGroup normalizer_backtrack(const PermGroup &ambient, const PermGroup &g,
                               const SearchBudget &budget) {
  require_subgroup(ambient, g);
  return NormalizerBacktrack(ambient, g, budget).run();
}

PermGroup normalizer(const PermGroup &ambient, const PermGroup &g,
                     const SearchBudget &budget) {
  require_subgroup(ambient, g);
  if (ambient.order() <= budget.exhaustive_limit)
    return normalizer_exhaustive(ambient, g, budget);

  // when both groups split as direct products along the ambient orbits the
  // normalizer splits the same way, and the pieces are far cheaper
  OrbitClasses oc = orbit_classes(ambient);
  if (oc.points.size() > 1) {
    std::vector<PermGroup> amb_parts, g_parts;
    std::uint64_t amb_prod = 1, g_prod = 1;
    for (const auto &pts : oc.points) {
      amb_parts.push_back(restrict_to(ambient, pts));
      g_parts.push_back(restrict_to(g, pts));
      amb_prod *= amb_parts.back().order();
      g_prod *= g_parts.back().order();
    }
    if (amb_prod == ambient.order() && g_prod == g.order()) {
      std::vector<Perm> gens;
      for (std::size_t c = 0; c < oc.points.size(); ++c) {
        PermGroup nc = normalizer(amb_parts[c], g_parts[c], budget);
        PermGroup placed = nc.relocated(oc.points[c], ambient.degree());
        for (const Perm &gen : placed.generators())
          gens.push_back(gen);
      }
      return PermGroup(ambient.degree(), std::move(gens));
    }
  }

  return normalizer_backtrack(ambient, g, budget);
}

} // namespace towers
