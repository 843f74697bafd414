#ifndef TOPODYN_SCC_HPP
#define TOPODYN_SCC_HPP

#include <cstdint>
#include <vector>

namespace topodyn {

/// Strongly connected components of a directed graph given as adjacency lists.
/// Iterative Tarjan (no recursion, safe on large graphs). Components are
/// renumbered by their smallest member vertex, so numbering is reproducible.
/// Returns the component id per vertex; `count` receives the component count.
std::vector<std::uint32_t> strongly_connected_components(
    const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t& count);

}  // namespace topodyn

#endif
