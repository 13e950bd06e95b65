#include "towers/rigid_family.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "graph_internal.hpp"
#include "towers/errors.hpp"

namespace towers {

namespace {

// connectivity over small adjacency bitmasks
bool mask_connected(const std::vector<std::uint32_t> &adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (unsigned v = 0; v < adj.size(); ++v)
      if (frontier >> v & 1)
        next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << adj.size()) - 1;
}

// twins u, v (equal neighbourhoods outside {u, v}) admit the swap (u v) as
// an automorphism, so twin-bearing graphs are rejected before any search
bool has_twins(const std::vector<std::uint32_t> &adj) {
  unsigned n = static_cast<unsigned>(adj.size());
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) {
      std::uint32_t mask = ~((1u << u) | (1u << v));
      if ((adj[u] & mask) == (adj[v] & mask))
        return true;
    }
  return false;
}

bool refinement_discretizes(const Graph &g) {
  std::vector<unsigned> col(g.vertex_count(), 0);
  detail::refine_colors(g, col);
  std::vector<unsigned> sorted = col;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace

std::vector<Graph> rigid_graphs_of_size(unsigned n) {
  if (n < 2)
    throw std::invalid_argument("rigid_graphs_of_size: need n >= 2");
  if (n > 7)
    throw budget_error("rigid_graphs_of_size: exhaustive only through 7");

  unsigned pairs = n * (n - 1) / 2;
  std::vector<std::pair<unsigned, unsigned>> pair_of(pairs);
  {
    unsigned p = 0;
    for (unsigned u = 0; u < n; ++u)
      for (unsigned v = u + 1; v < n; ++v)
        pair_of[p++] = {u, v};
  }

  std::map<CanonicalForm, Graph> distinct;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::uint32_t> adj(n, 0);
    for (unsigned p = 0; p < pairs; ++p)
      if (mask >> p & 1) {
        adj[pair_of[p].first] |= 1u << pair_of[p].second;
        adj[pair_of[p].second] |= 1u << pair_of[p].first;
      }
    if (!mask_connected(adj) || has_twins(adj))
      continue;
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned p = 0; p < pairs; ++p)
      if (mask >> p & 1)
        edges.push_back(pair_of[p]);
    Graph g(n, std::move(edges));
    // a discrete refinement already certifies rigidity; otherwise decide
    // with the full automorphism search
    if (!refinement_discretizes(g) && aut_group(g).order() != 1)
      continue;
    CanonicalForm f = detail::canonical_form_refined(g);
    if (!distinct.count(f))
      distinct.emplace(f, f.to_graph());
  }

  // order by the public canonical form (exhaustive at these sizes)
  std::vector<std::pair<CanonicalForm, Graph>> sorted;
  for (auto &[f, g] : distinct)
    sorted.emplace_back(canonical_form(g), canonical_relabel(g));
  std::sort(sorted.begin(), sorted.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto &[f, g] : sorted)
    out.push_back(std::move(g));
  return out;
}

RigidFamily rigid_family(std::size_t k, const RigidFamilyBudget &budget) {
  if (k < 1)
    throw std::invalid_argument("rigid_family: need k >= 1");
  RigidFamily fam;
  for (unsigned n = 2; fam.members.size() < k; ++n) {
    if (n > budget.max_vertices)
      throw budget_error("rigid_family: vertex budget exhausted at k=" +
                         std::to_string(fam.members.size()));
    for (Graph &g : rigid_graphs_of_size(n)) {
      if (fam.members.size() == k)
        break;
      RigidCertificate cert;
      cert.aut_order = aut_group(g).order();
      cert.connected = is_connected(g);
      cert.form = canonical_form(g);
      fam.members.push_back(std::move(g));
      fam.certificates.push_back(std::move(cert));
    }
  }
  return fam;
}

} // namespace towers
