#include "towers/block_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace towers {

namespace {

struct UnionFind {
  std::vector<unsigned> parent;
  explicit UnionFind(unsigned n) : parent(n) {
    for (unsigned i = 0; i < n; ++i)
      parent[i] = i;
  }
  unsigned find(unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns false if already joined
  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<unsigned>> classes_of(UnionFind &uf, unsigned n) {
  std::map<unsigned, std::vector<unsigned>> by_root;
  for (unsigned x = 0; x < n; ++x)
    by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<unsigned>> out;
  for (auto &[root, cls] : by_root)
    out.push_back(std::move(cls));
  return out;
}

void require_transitive(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("block computation requires a transitive group");
}

// block permutations induced on a partition; throws if some generator fails
// to permute the partition setwise
std::vector<Perm>
induced_action(const PermGroup &g,
               const std::vector<std::vector<unsigned>> &blocks) {
  std::vector<int> block_of(g.degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (unsigned x : blocks[b])
      block_of[x] = static_cast<int>(b);
  std::vector<Perm> action;
  for (const Perm &gen : g.generators()) {
    std::vector<unsigned> img(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      unsigned target = block_of[gen[blocks[b][0]]];
      for (unsigned x : blocks[b])
        if (static_cast<unsigned>(block_of[gen[x]]) != target)
          throw std::logic_error("induced_action: not a block system");
      img[b] = target;
    }
    action.push_back(Perm(std::move(img)));
  }
  return action;
}

// Atkinson: smallest G-invariant partition in which all listed seed pairs
// are joined.
UnionFind finest_partition(const PermGroup &g,
                           const std::vector<std::pair<unsigned, unsigned>> &seeds) {
  UnionFind uf(g.degree());
  std::vector<std::pair<unsigned, unsigned>> queue;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b))
      queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const Perm &gen : g.generators()) {
      unsigned x = gen[a], y = gen[b];
      if (uf.find(x) != uf.find(y)) {
        uf.unite(x, y);
        queue.emplace_back(x, y);
      }
    }
  }
  return uf;
}

} // namespace

std::vector<std::vector<unsigned>> orbits(const PermGroup &g) {
  UnionFind uf(g.degree());
  for (const Perm &gen : g.generators())
    for (unsigned x = 0; x < g.degree(); ++x)
      uf.unite(x, gen[x]);
  return classes_of(uf, g.degree());
}

BlockSystem minimal_block(const PermGroup &g, unsigned a, unsigned b) {
  require_transitive(g);
  if (a >= g.degree() || b >= g.degree())
    throw std::invalid_argument("minimal_block: point out of range");
  UnionFind uf = finest_partition(g, {{a, b}});
  BlockSystem sys;
  sys.blocks = classes_of(uf, g.degree());
  sys.generator_action = induced_action(g, sys.blocks);
  return sys;
}

std::vector<std::vector<unsigned>> blocks_through_point(const PermGroup &g,
                                                        unsigned v) {
  require_transitive(g);
  if (v >= g.degree())
    throw std::invalid_argument("blocks_through_point: point out of range");

  // generating set of the join lattice: the minimal blocks B(v, w)
  std::set<std::vector<unsigned>> found;
  found.insert({v});
  std::vector<std::vector<unsigned>> fresh;
  for (unsigned w = 0; w < g.degree(); ++w) {
    if (w == v)
      continue;
    UnionFind uf = finest_partition(g, {{v, w}});
    std::vector<unsigned> blk;
    unsigned root = uf.find(v);
    for (unsigned x = 0; x < g.degree(); ++x)
      if (uf.find(x) == root)
        blk.push_back(x);
    if (found.insert(blk).second)
      fresh.push_back(blk);
  }

  // close under pairwise joins: join(X, Y) = the block of v in the finest
  // invariant partition joining v to every point of X and Y
  std::vector<std::vector<unsigned>> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::pair<unsigned, unsigned>> seeds;
      for (unsigned x : all[i])
        seeds.emplace_back(v, x);
      for (unsigned x : all[j])
        seeds.emplace_back(v, x);
      UnionFind uf = finest_partition(g, seeds);
      std::vector<unsigned> blk;
      unsigned root = uf.find(v);
      for (unsigned x = 0; x < g.degree(); ++x)
        if (uf.find(x) == root)
          blk.push_back(x);
      if (found.insert(blk).second)
        all.push_back(std::move(blk));
    }
  }

  std::vector<std::vector<unsigned>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

std::vector<std::vector<unsigned>>
block_orbit(const PermGroup &g, const std::vector<unsigned> &block) {
  std::set<std::vector<unsigned>> seen;
  std::vector<std::vector<unsigned>> queue;
  std::vector<unsigned> start = block;
  std::sort(start.begin(), start.end());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    std::vector<unsigned> cur = std::move(queue.back());
    queue.pop_back();
    for (const Perm &gen : g.generators()) {
      std::vector<unsigned> img;
      img.reserve(cur.size());
      for (unsigned x : cur)
        img.push_back(gen[x]);
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second)
        queue.push_back(std::move(img));
    }
  }
  std::vector<std::vector<unsigned>> out(seen.begin(), seen.end());
  return out;
}

} // namespace towers
