#include "towers/normal_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace towers {

NormalTree NormalTree::from_parents(
    std::vector<std::vector<unsigned>> parents) {
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (parents[k].empty())
      throw std::invalid_argument("NormalTree: empty level");
    if (k > 0)
      for (unsigned p : parents[k])
        if (p >= parents[k - 1].size())
          throw std::invalid_argument("NormalTree: dangling parent link");
  }
  NormalTree t;
  t.parent_ = std::move(parents);
  return t;
}

std::size_t NormalTree::node_count() const {
  std::size_t n = 0;
  for (const auto &lvl : parent_)
    n += lvl.size();
  return n;
}

std::vector<unsigned> NormalTree::children_of(unsigned level,
                                              unsigned idx) const {
  std::vector<unsigned> out;
  if (level + 1 < height())
    for (unsigned i = 0; i < parent_[level + 1].size(); ++i)
      if (parent_[level + 1][i] == idx)
        out.push_back(i);
  return out;
}

std::size_t NormalTree::branch_count() const {
  if (height() == 0)
    return 0;
  std::size_t count = 0;
  for (unsigned k = 0; k < height(); ++k) {
    std::vector<bool> has_child(level_size(k), false);
    if (k + 1 < height())
      for (unsigned p : parent_[k + 1])
        has_child[p] = true;
    for (bool b : has_child)
      if (!b)
        ++count;
  }
  return count;
}

NormalTree build_normal(unsigned n) {
  std::vector<std::vector<unsigned>> parents;
  for (unsigned k = 0; k < n; ++k) {
    std::vector<unsigned> lvl(1u << k);
    for (unsigned i = 0; i < lvl.size(); ++i)
      lvl[i] = i / 2;
    parents.push_back(std::move(lvl));
  }
  return n == 0 ? NormalTree() : NormalTree::from_parents(std::move(parents));
}

NormalTree end_extend(const NormalTree &t, unsigned new_height) {
  if (new_height < t.height())
    throw std::invalid_argument("end_extend: new height below current");
  if (new_height == t.height())
    return t;
  if (t.height() == 0)
    return build_normal(new_height);
  auto parents = t.parents();
  for (unsigned k = t.height(); k < new_height; ++k) {
    std::size_t prev = parents.back().size();
    std::vector<unsigned> lvl(prev * 2);
    for (unsigned i = 0; i < lvl.size(); ++i)
      lvl[i] = i / 2;
    parents.push_back(std::move(lvl));
  }
  return NormalTree::from_parents(std::move(parents));
}

NormalVerdict validate_normal(const NormalTree &t) {
  NormalVerdict v;
  unsigned h = t.height();
  // level nonemptiness below the height and emptiness at the height are
  // guaranteed by the representation
  if (h > 0 && t.level_size(0) != 1)
    v.violations.push_back("(a): level 0 has " +
                           std::to_string(t.level_size(0)) +
                           " nodes, expected a unique root");
  for (unsigned k = 0; k + 1 < h; ++k)
    for (unsigned i = 0; i < t.level_size(k); ++i) {
      std::size_t c = t.children_of(k, i).size();
      if (c != 2) {
        v.violations.push_back("(b): node (" + std::to_string(k) + "," +
                               std::to_string(i) + ") has " +
                               std::to_string(c) + " children, expected 2");
      }
    }
  // (c): every node reaches every higher level through descendants
  for (unsigned k = 0; k + 1 < h; ++k) {
    std::vector<bool> reach(t.level_size(k), false);
    std::vector<std::vector<bool>> cur;
    // walk down marking which level-k ancestors survive to each level
    std::vector<unsigned> anc(t.level_size(k));
    for (unsigned i = 0; i < anc.size(); ++i)
      anc[i] = i;
    std::vector<unsigned> frontier = anc; // ancestor of each node at level m
    for (unsigned m = k; m + 1 < h; ++m) {
      std::vector<unsigned> next(t.level_size(m + 1));
      for (unsigned i = 0; i < t.level_size(m + 1); ++i)
        next[i] = frontier[t.parent_of(m + 1, i)];
      frontier = std::move(next);
      std::vector<bool> seen(t.level_size(k), false);
      for (unsigned a : frontier)
        seen[a] = true;
      for (unsigned i = 0; i < t.level_size(k); ++i)
        if (!seen[i])
          v.violations.push_back("(c): node (" + std::to_string(k) + "," +
                                 std::to_string(i) +
                                 ") has no extension to level " +
                                 std::to_string(m + 1));
    }
  }
  v.vacuous.push_back("(d) limit-level uniqueness: no limit levels at "
                      "finite height");
  v.vacuous.push_back("closure: the <k-closure clause has no finite "
                      "content");
  v.normal = v.violations.empty();
  return v;
}

PartialTreeIso PartialTreeIso::root_map() {
  PartialTreeIso phi;
  phi.delta = 0;
  phi.map = {{0}};
  return phi;
}

bool is_partial_iso(const NormalTree &s, const NormalTree &t,
                    const PartialTreeIso &phi) {
  if (phi.delta + 1 > s.height() || phi.delta + 1 > t.height())
    return false;
  if (phi.map.size() != phi.delta + 1)
    return false;
  for (unsigned k = 0; k <= phi.delta; ++k) {
    if (s.level_size(k) != t.level_size(k) ||
        phi.map[k].size() != s.level_size(k))
      return false;
    std::vector<bool> hit(t.level_size(k), false);
    for (unsigned i = 0; i < phi.map[k].size(); ++i) {
      unsigned img = phi.map[k][i];
      if (img >= t.level_size(k) || hit[img])
        return false;
      hit[img] = true;
      if (k > 0 &&
          phi.map[k - 1][s.parent_of(k, i)] != t.parent_of(k, img))
        return false;
    }
  }
  return true;
}

bool is_full_iso(const NormalTree &s, const NormalTree &t, const TreeIso &pi) {
  if (s.height() != t.height() || pi.size() != s.height())
    return false;
  PartialTreeIso full;
  if (s.height() == 0)
    return true;
  full.delta = s.height() - 1;
  full.map = pi;
  return is_partial_iso(s, t, full);
}

TreeIso extend_iso(const NormalTree &s, const NormalTree &t,
                   const PartialTreeIso &phi) {
  if (s.height() != t.height())
    throw std::invalid_argument("extend_iso: height mismatch");
  if (!validate_normal(s).normal || !validate_normal(t).normal)
    throw std::invalid_argument("extend_iso: trees must be normal");
  if (!is_partial_iso(s, t, phi))
    throw std::invalid_argument(
        "extend_iso: phi is not an isomorphism of restrictions");
  TreeIso pi = phi.map;
  for (unsigned k = phi.delta + 1; k < s.height(); ++k) {
    // children of matched parents, matched in positional order
    std::vector<unsigned> level(s.level_size(k));
    std::vector<std::vector<unsigned>> t_children(t.level_size(k - 1));
    for (unsigned i = 0; i < t.level_size(k); ++i)
      t_children[t.parent_of(k, i)].push_back(i);
    std::vector<unsigned> next_slot(t.level_size(k - 1), 0);
    for (unsigned i = 0; i < s.level_size(k); ++i) {
      unsigned tp = pi[k - 1][s.parent_of(k, i)];
      level[i] = t_children[tp][next_slot[tp]++];
    }
    pi.push_back(std::move(level));
  }
  return pi;
}

namespace {

void count_rec(const NormalTree &s, const NormalTree &t, TreeIso &pi,
               unsigned level, unsigned idx, std::uint64_t &count) {
  if (level == s.height()) {
    ++count;
    return;
  }
  if (idx == s.level_size(level)) {
    count_rec(s, t, pi, level + 1, 0, count);
    return;
  }
  std::vector<bool> used(t.level_size(level), false);
  for (unsigned i = 0; i < idx; ++i)
    used[pi[level][i]] = true;
  for (unsigned img = 0; img < t.level_size(level); ++img) {
    if (used[img])
      continue;
    if (level > 0 &&
        pi[level - 1][s.parent_of(level, idx)] != t.parent_of(level, img))
      continue;
    pi[level][idx] = img;
    count_rec(s, t, pi, level, idx + 1, count);
  }
}

} // namespace

std::uint64_t count_extensions(const NormalTree &s, const NormalTree &t,
                               const PartialTreeIso &phi) {
  if (s.height() != t.height())
    throw std::invalid_argument("count_extensions: height mismatch");
  if (!is_partial_iso(s, t, phi))
    throw std::invalid_argument("count_extensions: invalid phi");
  if (s.height() == 0)
    return 1;
  for (unsigned k = 0; k < s.height(); ++k)
    if (s.level_size(k) != t.level_size(k))
      return 0;
  TreeIso pi = phi.map;
  for (unsigned k = phi.delta + 1; k < s.height(); ++k)
    pi.push_back(std::vector<unsigned>(s.level_size(k), 0));
  std::uint64_t count = 0;
  count_rec(s, t, pi, phi.delta + 1, 0, count);
  return count;
}

namespace {

std::string node_code(const NormalTree &t, unsigned level, unsigned idx) {
  std::vector<std::string> child_codes;
  for (unsigned c : t.children_of(level, idx))
    child_codes.push_back(node_code(t, level + 1, c));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto &c : child_codes)
    out += c;
  return out + ")";
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::uint64_t node_aut(const NormalTree &t, unsigned level, unsigned idx) {
  std::uint64_t order = 1;
  std::map<std::string, unsigned> multiplicity;
  for (unsigned c : t.children_of(level, idx)) {
    order *= node_aut(t, level + 1, c);
    ++multiplicity[node_code(t, level + 1, c)];
  }
  for (auto &[code, m] : multiplicity)
    order *= factorial(m);
  return order;
}

} // namespace

std::string tree_code(const NormalTree &t) {
  if (t.height() == 0)
    return "()";
  std::vector<std::string> roots;
  for (unsigned i = 0; i < t.level_size(0); ++i)
    roots.push_back(node_code(t, 0, i));
  std::sort(roots.begin(), roots.end());
  std::string out = "{";
  for (const auto &r : roots)
    out += r;
  return out + "}";
}

std::uint64_t tree_aut_order(const NormalTree &t) {
  if (t.height() == 0)
    return 1;
  std::uint64_t order = 1;
  std::map<std::string, unsigned> multiplicity;
  for (unsigned i = 0; i < t.level_size(0); ++i) {
    order *= node_aut(t, 0, i);
    ++multiplicity[node_code(t, 0, i)];
  }
  for (auto &[code, m] : multiplicity)
    order *= factorial(m);
  return order;
}

} // namespace towers
