#include "towers/tree_coding.hpp"

#include <stdexcept>

#include "towers/rigid_family.hpp"

namespace towers {

namespace {

bool two_connected(const Graph &g) {
  unsigned n = g.vertex_count();
  if (n < 3 || !is_connected(g))
    return false;
  for (unsigned cut = 0; cut < n; ++cut) {
    // connectivity of g - cut
    std::vector<bool> seen(n, false);
    seen[cut] = true;
    unsigned start = cut == 0 ? 1 : 0;
    std::vector<unsigned> queue{start};
    seen[start] = true;
    unsigned covered = 1;
    while (!queue.empty()) {
      unsigned u = queue.back();
      queue.pop_back();
      for (unsigned v = 0; v < n; ++v)
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = true;
          ++covered;
          queue.push_back(v);
        }
    }
    if (covered != n - 1)
      return false;
  }
  return true;
}

} // namespace

std::pair<Graph, Graph> coding_gadgets() {
  static const std::pair<Graph, Graph> gadgets = [] {
    std::vector<Graph> found;
    for (unsigned n = 6; found.size() < 2 && n <= 7; ++n)
      for (Graph &g : rigid_graphs_of_size(n)) {
        if (found.size() == 2)
          break;
        if (two_connected(g))
          found.push_back(std::move(g));
      }
    if (found.size() < 2)
      throw std::logic_error("coding_gadgets: gadget supply exhausted");
    return std::make_pair(found[0], found[1]);
  }();
  return gadgets;
}

TreeCode encode_tree(const NormalTree &t) {
  if (t.height() > 0 && t.level_size(0) != 1)
    throw std::invalid_argument("encode_tree: tree must have a unique root");

  auto [node_gadget, marker_gadget] = coding_gadgets();
  unsigned gn = node_gadget.vertex_count();
  unsigned mn = marker_gadget.vertex_count();

  TreeCode code;
  std::vector<std::pair<unsigned, unsigned>> edges =
      marker_gadget.edges(); // marker occupies [0, mn)
  code.marker_anchor = 0;

  unsigned offset = mn;
  code.node_anchor.resize(t.height());
  for (unsigned k = 0; k < t.height(); ++k) {
    code.node_anchor[k].resize(t.level_size(k));
    for (unsigned i = 0; i < t.level_size(k); ++i) {
      code.node_anchor[k][i] = offset; // anchor = gadget vertex 0
      for (auto [u, v] : node_gadget.edges())
        edges.emplace_back(offset + u, offset + v);
      offset += gn;
    }
  }

  // bridges: parent-child anchors, and the marker to the root anchor
  for (unsigned k = 1; k < t.height(); ++k)
    for (unsigned i = 0; i < t.level_size(k); ++i)
      edges.emplace_back(code.node_anchor[k - 1][t.parent_of(k, i)],
                         code.node_anchor[k][i]);
  if (t.height() > 0)
    edges.emplace_back(code.marker_anchor, code.node_anchor[0][0]);

  code.graph = Graph(offset, std::move(edges));
  return code;
}

} // namespace towers
