#include "towers/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "graph_internal.hpp"

namespace towers {

Graph::Graph(unsigned vertex_count,
             std::vector<std::pair<unsigned, unsigned>> edges)
    : n_(vertex_count), words_((vertex_count + 63) / 64) {
  degrees_.assign(n_, 0);
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (auto &[u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("Graph: self-loop");
    if (u >= n_ || v >= n_)
      throw std::invalid_argument("Graph: vertex out of range");
    if (v < u)
      std::swap(u, v);
    if (adjacent(u, v))
      throw std::invalid_argument("Graph: duplicate edge");
    adj_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++degrees_[u];
    ++degrees_[v];
  }
  edges_ = std::move(edges);
  std::sort(edges_.begin(), edges_.end());
  neighbors_.assign(n_, {});
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto &nb : neighbors_)
    std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::path(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned u = 0; u + 1 < n; ++u)
    e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(unsigned n) {
  if (n < 3)
    throw std::invalid_argument("Graph::cycle: need n >= 3");
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned u = 0; u < n; ++u)
    e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

Graph Graph::relabeled(const std::vector<unsigned> &relabel) const {
  if (relabel.size() != n_)
    throw std::invalid_argument("relabeled: size mismatch");
  std::vector<std::pair<unsigned, unsigned>> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_)
    e.emplace_back(relabel[u], relabel[v]);
  return Graph(n_, std::move(e));
}

std::vector<std::vector<unsigned>> connected_components(const Graph &g) {
  unsigned n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int classes = 0;
  for (unsigned s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    int c = classes++;
    std::vector<unsigned> queue{s};
    comp[s] = c;
    while (!queue.empty()) {
      unsigned u = queue.back();
      queue.pop_back();
      for (unsigned v = 0; v < n; ++v)
        if (comp[v] < 0 && g.adjacent(u, v)) {
          comp[v] = c;
          queue.push_back(v);
        }
    }
  }
  std::vector<std::vector<unsigned>> out(classes);
  for (unsigned v = 0; v < n; ++v)
    out[comp[v]].push_back(v);
  return out;
}

bool is_connected(const Graph &g) {
  return connected_components(g).size() <= 1;
}

GraphSum direct_sum(const std::vector<Graph> &parts) {
  unsigned total = 0;
  GraphSum sum;
  for (const Graph &p : parts) {
    sum.offsets.push_back(total);
    total += p.vertex_count();
  }
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto [u, v] : parts[i].edges())
      edges.emplace_back(sum.offsets[i] + u, sum.offsets[i] + v);
  sum.graph = Graph(total, std::move(edges));
  return sum;
}

namespace detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// one refinement sweep: hash of (own colour, multiset of neighbour colours);
// the neighbour sum keeps it order-free, the outer mix keeps sums from
// cancelling structure
void sweep(const Graph &g, const std::vector<unsigned> &col,
           std::vector<std::uint64_t> &hash) {
  unsigned n = g.vertex_count();
  for (unsigned v = 0; v < n; ++v) {
    std::uint64_t acc = mix(col[v] + 1);
    for (unsigned u : g.neighbors(v))
      acc += mix((static_cast<std::uint64_t>(col[u]) << 1) | 1);
    hash[v] = mix(acc);
  }
}

// Ranks of (old colour, hash) pairs. Keeping the old colour as the major
// key makes the class labels monotone across iterations, so the fixpoint
// test terminates; the pair is structure-determined, so ranks stay
// invariant under isomorphism.
void rank_keyed(const std::vector<unsigned> &col,
                const std::vector<std::uint64_t> &hash,
                std::vector<unsigned> &out, std::vector<unsigned> &scratch) {
  unsigned n = static_cast<unsigned>(hash.size());
  scratch.resize(n);
  std::iota(scratch.begin(), scratch.end(), 0u);
  auto key = [&](unsigned v) { return std::make_pair(col[v], hash[v]); };
  std::sort(scratch.begin(), scratch.end(),
            [&](unsigned a, unsigned b) { return key(a) < key(b); });
  unsigned rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (i > 0 && key(scratch[i]) != key(scratch[i - 1]))
      ++rank;
    out[scratch[i]] = rank;
  }
}

} // namespace

// Equitable colour refinement via iterated neighbourhood hashing. Colours
// are ranks of structure-determined keys, so the partition depends only on
// the isomorphism type and the initial colouring.
void refine_colors(const Graph &g, std::vector<unsigned> &col) {
  unsigned n = g.vertex_count();
  if (n == 0)
    return;
  std::vector<std::uint64_t> hash(n);
  std::vector<unsigned> next(n), scratch;
  for (;;) {
    sweep(g, col, hash);
    rank_keyed(col, hash, next, scratch);
    if (next == col)
      return;
    col.swap(next);
  }
}

// Shared refinement of two graphs: keys are ranked across both vertex sets
// so colours stay comparable. Returns false when the per-colour counts
// diverge (no isomorphism can respect the colouring).
bool joint_refine(const Graph &a, std::vector<unsigned> &ca, const Graph &b,
                  std::vector<unsigned> &cb) {
  unsigned n = a.vertex_count();
  if (b.vertex_count() != n)
    return false;
  if (n == 0)
    return true;
  std::vector<std::uint64_t> ha(n), hb(n);
  std::vector<std::pair<unsigned, std::uint64_t>> all;
  std::vector<unsigned> na(n), nb(n);
  for (;;) {
    sweep(a, ca, ha);
    sweep(b, cb, hb);
    all.clear();
    for (unsigned v = 0; v < n; ++v) {
      all.emplace_back(ca[v], ha[v]);
      all.emplace_back(cb[v], hb[v]);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto rank_of = [&](unsigned c, std::uint64_t h) {
      return static_cast<unsigned>(
          std::lower_bound(all.begin(), all.end(), std::make_pair(c, h)) -
          all.begin());
    };
    std::vector<unsigned> counta(all.size(), 0), countb(all.size(), 0);
    for (unsigned v = 0; v < n; ++v) {
      na[v] = rank_of(ca[v], ha[v]);
      nb[v] = rank_of(cb[v], hb[v]);
      ++counta[na[v]];
      ++countb[nb[v]];
    }
    if (counta != countb)
      return false;
    bool stable = (na == ca) && (nb == cb);
    ca = na;
    cb = nb;
    if (stable)
      return true;
  }
}

// Backtracking search for one edge-preserving bijection a -> b extending
// the forced pairs. Adjacency against all previously mapped vertices is
// checked exactly at every extension, so a complete map is an isomorphism.
class MappingSearch {
public:
  MappingSearch(const Graph &a, const Graph &b) : a_(a), b_(b) {
    n_ = a.vertex_count();
    map_.assign(n_, -1);
    used_.assign(n_, false);
  }

  std::optional<std::vector<unsigned>>
  run(const std::vector<std::pair<unsigned, unsigned>> &forced) {
    if (b_.vertex_count() != n_ || a_.edge_count() != b_.edge_count())
      return std::nullopt;
    for (auto [v, w] : forced) {
      if (!consistent(v, w))
        return std::nullopt;
      map_[v] = static_cast<int>(w);
      used_[w] = true;
      mapped_.emplace_back(v, w);
    }
    if (dfs())
      return finish();
    return std::nullopt;
  }

private:
  bool consistent(unsigned v, unsigned w) const {
    if (map_[v] >= 0 || used_[w])
      return false;
    for (auto [u, x] : mapped_)
      if (a_.adjacent(v, u) != b_.adjacent(w, x))
        return false;
    return true;
  }

  bool dfs() {
    if (mapped_.size() == n_)
      return true;
    std::vector<unsigned> ca(n_, 0), cb(n_, 0);
    for (unsigned i = 0; i < mapped_.size(); ++i) {
      ca[mapped_[i].first] = i + 1;
      cb[mapped_[i].second] = i + 1;
    }
    if (!joint_refine(a_, ca, b_, cb))
      return false;

    // next source: first unmapped vertex of a smallest colour class
    unsigned best = n_;
    std::size_t best_size = n_ + 1;
    for (unsigned v = 0; v < n_; ++v) {
      if (map_[v] >= 0)
        continue;
      std::size_t size = 0;
      for (unsigned u = 0; u < n_; ++u)
        if (map_[u] < 0 && ca[u] == ca[v])
          ++size;
      if (size < best_size) {
        best_size = size;
        best = v;
      }
    }
    unsigned v = best;
    for (unsigned w = 0; w < n_; ++w) {
      if (used_[w] || cb[w] != ca[v])
        continue;
      if (!consistent_unmapped(v, w))
        continue;
      map_[v] = static_cast<int>(w);
      used_[w] = true;
      mapped_.emplace_back(v, w);
      if (dfs())
        return true;
      mapped_.pop_back();
      map_[v] = -1;
      used_[w] = false;
    }
    return false;
  }

  bool consistent_unmapped(unsigned v, unsigned w) const {
    for (auto [u, x] : mapped_)
      if (a_.adjacent(v, u) != b_.adjacent(w, x))
        return false;
    return true;
  }

  std::optional<std::vector<unsigned>> finish() const {
    std::vector<unsigned> out(n_);
    for (unsigned v = 0; v < n_; ++v)
      out[v] = static_cast<unsigned>(map_[v]);
    return out;
  }

  const Graph &a_, &b_;
  unsigned n_ = 0;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<std::pair<unsigned, unsigned>> mapped_;
};

std::optional<std::vector<unsigned>>
find_mapping(const Graph &a, const Graph &b,
             const std::vector<std::pair<unsigned, unsigned>> &forced) {
  return MappingSearch(a, b).run(forced);
}

} // namespace detail

PermGroup aut_group(const Graph &g) {
  unsigned n = g.vertex_count();
  std::vector<Perm> gens;

  auto prefix_orbit = [&](unsigned b) {
    // orbit of b under the generators fixing 0..b-1 pointwise
    std::vector<bool> in(n, false);
    std::vector<unsigned> queue{b};
    in[b] = true;
    while (!queue.empty()) {
      unsigned x = queue.back();
      queue.pop_back();
      for (const Perm &p : gens) {
        bool fixes = true;
        for (unsigned j = 0; j < b && fixes; ++j)
          fixes = p[j] == j;
        if (!fixes)
          continue;
        for (unsigned y : {p[x], p.inverse()[x]})
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
      }
    }
    return in;
  };

  std::vector<std::pair<unsigned, unsigned>> forced;
  for (unsigned b = 0; b < n; ++b) {
    std::vector<unsigned> col(n, 0);
    for (unsigned j = 0; j < b; ++j)
      col[j] = j + 1;
    detail::refine_colors(g, col);

    std::vector<bool> orbit = prefix_orbit(b);
    for (unsigned w = b + 1; w < n; ++w) {
      if (orbit[w] || col[w] != col[b])
        continue;
      forced.clear();
      for (unsigned j = 0; j < b; ++j)
        forced.emplace_back(j, j);
      forced.emplace_back(b, w);
      if (auto m = detail::find_mapping(g, g, forced)) {
        gens.push_back(Perm(*m));
        orbit = prefix_orbit(b);
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<std::vector<unsigned>> is_isomorphic(const Graph &a,
                                                   const Graph &b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return std::nullopt;
  auto da = a.edges(), db = b.edges();
  std::vector<unsigned> dega, degb;
  for (unsigned v = 0; v < a.vertex_count(); ++v) {
    dega.push_back(a.degree_of(v));
    degb.push_back(b.degree_of(v));
  }
  std::sort(dega.begin(), dega.end());
  std::sort(degb.begin(), degb.end());
  if (dega != degb)
    return std::nullopt;
  return detail::find_mapping(a, b, {});
}

namespace {

std::size_t pair_bit_count(unsigned n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// bits of a placement: position pair (j, k), j < k, at index k(k-1)/2 + j
std::vector<std::uint8_t> bits_of_ordering(const Graph &g,
                                           const std::vector<unsigned> &seq) {
  unsigned n = g.vertex_count();
  std::vector<std::uint8_t> bits;
  bits.reserve(n < 2 ? 0 : pair_bit_count(n));
  for (unsigned k = 1; k < n; ++k)
    for (unsigned j = 0; j < k; ++j)
      bits.push_back(g.adjacent(seq[j], seq[k]) ? 1 : 0);
  return bits;
}

CanonicalForm canonical_exhaustive(const Graph &g) {
  unsigned n = g.vertex_count();
  std::vector<unsigned> seq(n);
  std::iota(seq.begin(), seq.end(), 0u);
  CanonicalForm best;
  best.n = n;
  bool have = false;
  std::vector<unsigned> perm = seq;
  do {
    auto bits = bits_of_ordering(g, perm);
    if (!have || bits < best.bits) {
      best.bits = std::move(bits);
      best.ordering = perm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have)
    best.ordering = seq;
  return best;
}

// Branch-and-bound canonical labelling. Branches follow the refinement:
// the next position is filled from the first non-singleton colour class,
// and a branch dies as soon as its bit prefix exceeds the best known form.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm run() {
    CanonicalForm out;
    out.n = n_;
    if (n_ == 0)
      return out;
    seq_.reserve(n_);
    bits_.reserve(pair_bit_count(n_));
    descend(false);
    out.bits = std::move(best_bits_);
    out.ordering = std::move(best_seq_);
    return out;
  }

private:
  // strictly_less: the current prefix is already lexicographically below
  // the best form, so no further comparisons can prune
  void descend(bool strictly_less) {
    if (seq_.size() == n_) {
      if (!have_best_ || strictly_less) {
        best_bits_ = bits_;
        best_seq_ = seq_;
        have_best_ = true;
      }
      return;
    }
    std::vector<unsigned> col(n_, 0);
    for (std::size_t i = 0; i < seq_.size(); ++i)
      col[seq_[i]] = static_cast<unsigned>(i + 1);
    detail::refine_colors(g_, col);

    // branch over the unplaced class of least colour rank
    std::vector<unsigned> cands;
    unsigned best_rank = 0;
    for (unsigned v = 0; v < n_; ++v) {
      if (placed(v))
        continue;
      if (cands.empty() || col[v] < best_rank) {
        best_rank = col[v];
        cands.assign(1, v);
      } else if (col[v] == best_rank) {
        cands.push_back(v);
      }
    }

    for (unsigned v : cands) {
      std::size_t base = bits_.size();
      bool less = strictly_less, worse = false;
      for (unsigned j = 0; j < seq_.size(); ++j) {
        std::uint8_t bit = g_.adjacent(seq_[j], v) ? 1 : 0;
        if (!less && have_best_) {
          std::uint8_t bb = best_bits_[bits_.size()];
          if (bit > bb) {
            worse = true;
            bits_.push_back(bit);
            break;
          }
          if (bit < bb)
            less = true;
        }
        bits_.push_back(bit);
      }
      if (!worse) {
        seq_.push_back(v);
        descend(less);
        seq_.pop_back();
      }
      bits_.resize(base);
    }
  }

  bool placed(unsigned v) const {
    return std::find(seq_.begin(), seq_.end(), v) != seq_.end();
  }

  const Graph &g_;
  unsigned n_;
  std::vector<unsigned> seq_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> best_bits_;
  std::vector<unsigned> best_seq_;
  bool have_best_ = false;
};

} // namespace

namespace detail {

CanonicalForm canonical_form_refined(const Graph &g) {
  return CanonicalSearch(g).run();
}

} // namespace detail

CanonicalForm canonical_form(const Graph &g) {
  if (g.vertex_count() <= 8)
    return canonical_exhaustive(g);
  return detail::canonical_form_refined(g);
}

Graph canonical_relabel(const Graph &g) {
  CanonicalForm f = canonical_form(g);
  std::vector<unsigned> relabel(g.vertex_count());
  for (unsigned i = 0; i < g.vertex_count(); ++i)
    relabel[f.ordering[i]] = i;
  return g.relabeled(relabel);
}

std::string CanonicalForm::hex() const {
  static const char *digits = "0123456789abcdef";
  std::string out;
  out += std::to_string(n);
  out += ':';
  unsigned acc = 0, have = 0;
  for (std::uint8_t b : bits) {
    acc = acc << 1 | b;
    if (++have == 4) {
      out += digits[acc];
      acc = 0;
      have = 0;
    }
  }
  if (have)
    out += digits[acc << (4 - have)];
  return out;
}

Graph CanonicalForm::to_graph() const {
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::size_t p = 0;
  for (unsigned k = 1; k < n; ++k)
    for (unsigned j = 0; j < k; ++j, ++p)
      if (bits[p])
        edges.emplace_back(j, k);
  return Graph(n, std::move(edges));
}

} // namespace towers
