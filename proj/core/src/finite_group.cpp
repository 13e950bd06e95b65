#include "towers/finite_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "towers/errors.hpp"

namespace towers {

FiniteGroup::FiniteGroup() : n_(1), table_{{0}}, inv_{0} {}

FiniteGroup::FiniteGroup(std::vector<std::vector<unsigned>> table)
    : n_(static_cast<unsigned>(table.size())), table_(std::move(table)) {
  if (n_ == 0)
    throw std::invalid_argument("FiniteGroup: empty table");
  for (const auto &row : table_) {
    if (row.size() != n_)
      throw std::invalid_argument("FiniteGroup: table is not square");
    for (unsigned x : row)
      if (x >= n_)
        throw std::invalid_argument("FiniteGroup: entry out of range");
  }
  for (unsigned a = 0; a < n_; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("FiniteGroup: id 0 is not an identity");
  inv_.assign(n_, n_);
  for (unsigned a = 0; a < n_; ++a) {
    for (unsigned b = 0; b < n_; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] == n_)
      throw std::invalid_argument("FiniteGroup: missing inverse");
  }
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      for (unsigned c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("FiniteGroup: not associative");
}

FiniteGroup FiniteGroup::from_perm_group(const PermGroup &g,
                                         std::uint64_t max_order) {
  if (g.order() > max_order)
    throw budget_error("FiniteGroup::from_perm_group: order exceeds budget");
  std::vector<Perm> elems = g.elements(max_order);
  std::sort(elems.begin(), elems.end());
  std::map<Perm, unsigned> index;
  // identity must get id 0
  Perm id(g.degree());
  std::vector<Perm> ordered{id};
  for (const Perm &p : elems)
    if (!(p == id))
      ordered.push_back(p);
  for (unsigned i = 0; i < ordered.size(); ++i)
    index.emplace(ordered[i], i);
  unsigned n = static_cast<unsigned>(ordered.size());
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      table[a][b] = index.at(ordered[a] * ordered[b]);
  return FiniteGroup(std::move(table));
}

unsigned FiniteGroup::element_order(unsigned a) const {
  unsigned x = a, k = 1;
  while (x != 0) {
    x = table_[x][a];
    ++k;
  }
  return k;
}

std::vector<unsigned> FiniteGroup::closure(std::vector<unsigned> gens) const {
  std::vector<bool> in(n_, false);
  std::vector<unsigned> members{0};
  in[0] = true;
  for (unsigned g : gens)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  // saturate under products
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      unsigned p = table_[members[i]][members[j]];
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<unsigned> FiniteGroup::generators() const {
  std::vector<unsigned> gens;
  std::vector<unsigned> have{0};
  while (have.size() < n_) {
    // greedy: the candidate generating the largest extension, least id on
    // ties
    unsigned best = 0;
    std::size_t best_size = have.size();
    for (unsigned e = 1; e < n_; ++e) {
      if (std::binary_search(have.begin(), have.end(), e))
        continue;
      std::vector<unsigned> trial = gens;
      trial.push_back(e);
      std::size_t size = closure(trial).size();
      if (size > best_size) {
        best_size = size;
        best = e;
      }
    }
    gens.push_back(best);
    have = closure(gens);
  }
  if (gens.empty())
    gens.push_back(0);
  return gens;
}

std::vector<unsigned> center(const FiniteGroup &g) {
  std::vector<unsigned> z;
  for (unsigned a = 0; a < g.order(); ++a) {
    bool central = true;
    for (unsigned b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

bool is_centreless(const FiniteGroup &g) { return center(g).size() == 1; }

bool AutGroup::all_inner(unsigned g_order) const {
  return group.order() == g_order;
}

namespace {

// the unique homomorphism extension of gens -> images, or nullopt on
// conflict; `verify` additionally checks every product pair
std::optional<std::vector<int>>
extend_hom(const FiniteGroup &g, const std::vector<unsigned> &gens,
           const std::vector<unsigned> &images, bool verify) {
  std::vector<int> map(g.order(), -1);
  map[0] = 0;
  std::vector<unsigned> known{0};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] >= 0) {
      if (map[gens[i]] != static_cast<int>(images[i]))
        return std::nullopt;
      continue;
    }
    map[gens[i]] = static_cast<int>(images[i]);
    known.push_back(gens[i]);
  }
  for (std::size_t i = 0; i < known.size(); ++i)
    for (std::size_t j = 0; j < known.size(); ++j) {
      unsigned p = g.mul(known[i], known[j]);
      int img = static_cast<int>(
          g.mul(static_cast<unsigned>(map[known[i]]),
                static_cast<unsigned>(map[known[j]])));
      if (map[p] < 0) {
        map[p] = img;
        known.push_back(p);
      } else if (map[p] != img) {
        return std::nullopt;
      }
    }
  if (verify) {
    for (unsigned a = 0; a < g.order(); ++a)
      if (map[a] < 0)
        return std::nullopt; // gens do not generate
    std::vector<bool> hit(g.order(), false);
    for (unsigned a = 0; a < g.order(); ++a) {
      if (hit[map[a]])
        return std::nullopt;
      hit[map[a]] = true;
    }
    for (unsigned a = 0; a < g.order(); ++a)
      for (unsigned b = 0; b < g.order(); ++b)
        if (map[g.mul(a, b)] !=
            static_cast<int>(g.mul(map[a], map[b])))
          return std::nullopt;
  }
  return map;
}

struct Fingerprint {
  unsigned order;
  unsigned class_size;
  auto operator<=>(const Fingerprint &) const = default;
};

std::vector<Fingerprint> fingerprints(const FiniteGroup &g) {
  unsigned n = g.order();
  std::vector<unsigned> class_size(n, 0);
  std::vector<int> class_of(n, -1);
  for (unsigned a = 0; a < n; ++a) {
    if (class_of[a] >= 0)
      continue;
    std::vector<unsigned> cls;
    for (unsigned x = 0; x < n; ++x) {
      unsigned c = g.mul(g.mul(x, a), g.inv(x));
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(a);
        cls.push_back(c);
      }
    }
    for (unsigned c : cls)
      class_size[c] = static_cast<unsigned>(cls.size());
  }
  std::vector<Fingerprint> fp(n);
  for (unsigned a = 0; a < n; ++a)
    fp[a] = {g.element_order(a), class_size[a]};
  return fp;
}

void search_images(const FiniteGroup &g, const std::vector<unsigned> &gens,
                   const std::vector<std::vector<unsigned>> &candidates,
                   std::vector<unsigned> &picked,
                   std::vector<std::vector<unsigned>> &found) {
  std::size_t k = picked.size();
  if (k == gens.size()) {
    std::vector<unsigned> pgens(gens.begin(), gens.begin() + k);
    auto map = extend_hom(g, pgens, picked, true);
    if (map) {
      std::vector<unsigned> aut(g.order());
      for (unsigned a = 0; a < g.order(); ++a)
        aut[a] = static_cast<unsigned>((*map)[a]);
      found.push_back(std::move(aut));
    }
    return;
  }
  for (unsigned cand : candidates[k]) {
    picked.push_back(cand);
    std::vector<unsigned> pgens(gens.begin(), gens.begin() + k + 1);
    if (extend_hom(g, pgens, picked, false))
      search_images(g, gens, candidates, picked, found);
    picked.pop_back();
  }
}

} // namespace

AutGroup aut_abstract(const FiniteGroup &g, const AutBudget &budget) {
  if (g.order() > budget.max_order)
    throw budget_error("aut_abstract: group order " +
                       std::to_string(g.order()) + " exceeds bound " +
                       std::to_string(budget.max_order));

  std::vector<unsigned> gens = g.generators();
  auto fp = fingerprints(g);
  std::vector<std::vector<unsigned>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (unsigned e = 0; e < g.order(); ++e)
      if (fp[e] == fp[gens[i]])
        candidates[i].push_back(e);

  std::vector<std::vector<unsigned>> autos;
  std::vector<unsigned> picked;
  search_images(g, gens, candidates, picked, autos);

  // identity first, the rest in lexicographic order
  std::sort(autos.begin(), autos.end());
  std::vector<unsigned> identity(g.order());
  for (unsigned a = 0; a < g.order(); ++a)
    identity[a] = a;
  auto it = std::find(autos.begin(), autos.end(), identity);
  if (it == autos.end())
    throw std::logic_error("aut_abstract: identity not found");
  std::rotate(autos.begin(), it, it + 1);

  std::map<std::vector<unsigned>, unsigned> index;
  for (unsigned i = 0; i < autos.size(); ++i)
    index.emplace(autos[i], i);

  unsigned m = static_cast<unsigned>(autos.size());
  std::vector<std::vector<unsigned>> table(m, std::vector<unsigned>(m));
  std::vector<unsigned> comp(g.order());
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      for (unsigned x = 0; x < g.order(); ++x)
        comp[x] = autos[a][autos[b][x]];
      table[a][b] = index.at(comp);
    }

  AutGroup out;
  out.group = FiniteGroup(std::move(table));
  out.action = std::move(autos);
  out.inner.assign(g.order(), 0);
  std::vector<unsigned> conj(g.order());
  for (unsigned x = 0; x < g.order(); ++x) {
    for (unsigned a = 0; a < g.order(); ++a)
      conj[a] = g.mul(g.mul(x, a), g.inv(x));
    out.inner[x] = index.at(conj);
  }
  return out;
}

AutTower automorphism_tower(const FiniteGroup &g, const AutBudget &budget) {
  if (!is_centreless(g))
    throw std::invalid_argument(
        "automorphism_tower: the group has a nontrivial centre");
  AutTower t;
  t.levels.push_back(g);
  while (true) {
    const FiniteGroup &cur = t.levels.back();
    AutGroup aut = aut_abstract(cur, budget);
    if (aut.all_inner(cur.order()))
      break;
    if (!is_centreless(aut.group))
      throw std::logic_error("automorphism_tower: level lost centrelessness");
    t.embeddings.push_back(aut.inner);
    t.levels.push_back(std::move(aut.group));
  }
  t.height = t.levels.size() - 1;
  t.complete = true;
  return t;
}

namespace {

std::vector<unsigned> conj_set(const FiniteGroup &g, unsigned x,
                               const std::vector<unsigned> &s) {
  std::vector<unsigned> out;
  out.reserve(s.size());
  for (unsigned a : s)
    out.push_back(g.mul(g.mul(x, a), g.inv(x)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> normalizer_set(const FiniteGroup &g,
                                     const std::vector<unsigned> &s) {
  std::vector<unsigned> out;
  for (unsigned x = 0; x < g.order(); ++x)
    if (conj_set(g, x, s) == s)
      out.push_back(x);
  return out;
}

} // namespace

TowerComparisonReport check_tower_comparison(const FiniteGroup &g,
                                             const AutBudget &budget) {
  TowerComparisonReport r;
  AutTower tower = automorphism_tower(g, budget);
  r.aut_height = tower.height;
  const FiniteGroup &top = tower.levels.back();

  // composed embeddings: image of level i inside the terminal group
  std::vector<std::vector<unsigned>> images(tower.levels.size());
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    std::vector<unsigned> img(tower.levels[i].order());
    for (unsigned a = 0; a < img.size(); ++a)
      img[a] = a;
    for (std::size_t j = i; j + 1 < tower.levels.size(); ++j)
      for (unsigned &a : img)
        a = tower.embeddings[j][a];
    std::sort(img.begin(), img.end());
    images[i] = std::move(img);
  }
  for (const auto &img : images)
    r.level_orders.push_back(img.size());

  // normaliser tower of the base image inside the terminal group
  std::vector<std::vector<unsigned>> chain{images[0]};
  while (true) {
    auto next = normalizer_set(top, chain.back());
    if (next == chain.back())
      break;
    chain.push_back(std::move(next));
  }
  r.normaliser_height = chain.size() - 1;

  r.levels_match = chain.size() == images.size();
  if (r.levels_match)
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (chain[i] != images[i]) {
        r.levels_match = false;
        r.detail = "level " + std::to_string(i) + " differs";
        break;
      }
  if (!r.levels_match && r.detail.empty())
    r.detail = "heights differ: normaliser tower has height " +
               std::to_string(r.normaliser_height);

  r.centralizers_trivial = true;
  for (const auto &img : images) {
    std::size_t count = 0;
    for (unsigned x = 0; x < top.order(); ++x) {
      bool central = true;
      for (unsigned a : img)
        if (top.mul(x, a) != top.mul(a, x)) {
          central = false;
          break;
        }
      if (central)
        ++count;
    }
    if (count != 1)
      r.centralizers_trivial = false;
  }
  if (r.detail.empty())
    r.detail = "towers agree level by level";
  return r;
}

} // namespace towers
