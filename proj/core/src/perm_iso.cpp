#include "towers/perm_iso.hpp"

#include <algorithm>

#include "towers/errors.hpp"

namespace towers {

namespace {

// pair-orbit table, same invariant as in the normalizer search but across
// two groups: phi must map pair classes of a onto pair classes of b
struct PairClasses {
  unsigned n = 0;
  std::vector<int> class_of;
  std::vector<std::uint64_t> size;
};

PairClasses pair_classes(const PermGroup &g) {
  unsigned n = g.degree();
  PairClasses pc;
  pc.n = n;
  pc.class_of.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::pair<unsigned, unsigned>> queue;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (pc.class_of[x * n + y] >= 0)
        continue;
      int c = static_cast<int>(pc.size.size());
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

class IsoSearch {
public:
  IsoSearch(const PermGroup &a, const PermGroup &b, const SearchBudget &budget)
      : a_(a), b_(b), budget_(budget), pa_(pair_classes(a)),
        pb_(pair_classes(b)) {
    n_ = a.degree();
    image_.assign(n_, -1);
    used_.assign(n_, false);
    class_map_.assign(pa_.size.size(), -1);
    class_map_inv_.assign(pb_.size.size(), -1);
  }

  std::optional<Perm> run() {
    if (pa_.size.size() != pb_.size.size())
      return std::nullopt;
    auto sa = pa_.size, sb = pb_.size;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
    if (descend(0))
      return result_;
    return std::nullopt;
  }

private:
  bool descend(unsigned x) {
    if (x == n_) {
      std::vector<unsigned> img(n_);
      for (unsigned i = 0; i < n_; ++i)
        img[i] = static_cast<unsigned>(image_[i]);
      Perm phi(std::move(img));
      if (is_perm_iso_witness(a_, b_, phi)) {
        result_ = phi;
        return true;
      }
      return false;
    }
    for (unsigned t = 0; t < n_; ++t) {
      if (used_[t])
        continue;
      if (++nodes_ > budget_.max_nodes)
        throw budget_error("perm_iso: node budget exhausted");
      std::vector<int> bound;
      if (commit(x, t, bound)) {
        if (descend(x + 1))
          return true;
      }
      rollback(x, t, bound);
    }
    return false;
  }

  bool commit(unsigned x, unsigned t, std::vector<int> &bound) {
    image_[x] = static_cast<int>(t);
    used_[t] = true;
    for (unsigned p = 0; p <= x; ++p) {
      unsigned tp = static_cast<unsigned>(image_[p]);
      if (!bind(pa_.class_of[p * n_ + x], pb_.class_of[tp * n_ + t], bound))
        return false;
      if (p != x &&
          !bind(pa_.class_of[x * n_ + p], pb_.class_of[t * n_ + tp], bound))
        return false;
    }
    return true;
  }

  bool bind(int c, int c_img, std::vector<int> &bound) {
    if (class_map_[c] >= 0)
      return class_map_[c] == c_img;
    if (class_map_inv_[c_img] >= 0)
      return false;
    if (pa_.size[c] != pb_.size[c_img])
      return false;
    class_map_[c] = c_img;
    class_map_inv_[c_img] = c;
    bound.push_back(c);
    return true;
  }

  void rollback(unsigned x, unsigned t, const std::vector<int> &bound) {
    for (int c : bound) {
      class_map_inv_[class_map_[c]] = -1;
      class_map_[c] = -1;
    }
    image_[x] = -1;
    used_[t] = false;
  }

  const PermGroup &a_, &b_;
  SearchBudget budget_;
  PairClasses pa_, pb_;
  unsigned n_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<int> class_map_, class_map_inv_;
  Perm result_;
};

} // namespace

bool is_perm_iso_witness(const PermGroup &a, const PermGroup &b,
                         const Perm &phi) {
  if (a.degree() != b.degree() || phi.degree() != a.degree())
    return false;
  if (a.order() != b.order())
    return false;
  Perm phi_inv = phi.inverse();
  for (const Perm &g : a.generators())
    if (!b.contains(phi * g * phi_inv))
      return false;
  // equal orders make the conjugated image all of b
  return true;
}

std::optional<PermIsoWitness> perm_iso(const PermGroup &a, const PermGroup &b,
                                       const SearchBudget &budget) {
  if (a.degree() != b.degree() || a.order() != b.order())
    return std::nullopt;
  auto phi = IsoSearch(a, b, budget).run();
  if (!phi)
    return std::nullopt;
  return PermIsoWitness{*phi};
}

std::optional<PermIsoWitness> perm_iso(const LabeledAction &a,
                                       const LabeledAction &b,
                                       const SearchBudget &budget) {
  return perm_iso(a.group(), b.group(), budget);
}

} // namespace towers
