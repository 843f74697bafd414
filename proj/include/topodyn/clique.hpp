#ifndef TOPODYN_CLIQUE_HPP
#define TOPODYN_CLIQUE_HPP

#include <cstdint>
#include <vector>

namespace topodyn {

/// Exact maximum clique by branch and bound with a greedy colouring bound
/// (Tomita-style). Input is a symmetric adjacency matrix; returns the vertex
/// set of one maximum clique. Intended for graphs up to a few hundred
/// vertices; callers gate the size.
std::vector<std::uint32_t> max_clique(const std::vector<std::vector<bool>>& adj);

/// Brute-force maximum clique over all subsets, for cross-checking the branch
/// and bound on small graphs (n <= 24).
std::vector<std::uint32_t> max_clique_bruteforce(const std::vector<std::vector<bool>>& adj);

}  // namespace topodyn

#endif
