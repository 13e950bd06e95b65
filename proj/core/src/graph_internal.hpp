#ifndef TOWERS_GRAPH_INTERNAL_HPP
#define TOWERS_GRAPH_INTERNAL_HPP

#include <optional>
#include <vector>

#include "towers/graph.hpp"

// Shared internals of the graph search machinery, used by the generation
// and coding translation units.

namespace towers::detail {

void refine_colors(const Graph &g, std::vector<unsigned> &col);

bool joint_refine(const Graph &a, std::vector<unsigned> &ca, const Graph &b,
                  std::vector<unsigned> &cb);

std::optional<std::vector<unsigned>>
find_mapping(const Graph &a, const Graph &b,
             const std::vector<std::pair<unsigned, unsigned>> &forced);

/// Refinement-guided branch-and-bound canonical labelling, valid at any
/// size; the public canonical_form dispatches to it above the exhaustive
/// range.
CanonicalForm canonical_form_refined(const Graph &g);

} // namespace towers::detail

#endif
