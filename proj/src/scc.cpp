#include "topodyn/scc.hpp"

#include <algorithm>
#include <limits>

namespace topodyn {

std::vector<std::uint32_t> strongly_connected_components(
    const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t& count) {
    const std::uint32_t n = std::uint32_t(adj.size());
    const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    std::vector<std::uint32_t> index(n, none), low(n, 0), comp(n, none), stack;
    std::vector<bool> on_stack(n, false);
    stack.reserve(n);
    std::uint32_t next_index = 0, ncomp = 0;

    // Explicit DFS frames: vertex + position in its adjacency list.
    struct Frame {
        std::uint32_t v;
        std::size_t edge;
    };
    std::vector<Frame> frames;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != none) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj[f.v].size()) {
                std::uint32_t w = adj[f.v][f.edge++];
                if (index[w] == none) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                std::uint32_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
            }
        }
    }

    // Renumber components by their smallest member for stable output.
    std::vector<std::uint32_t> min_member(ncomp, none);
    for (std::uint32_t v = 0; v < n; ++v) min_member[comp[v]] = std::min(min_member[comp[v]], v);
    std::vector<std::uint32_t> order(ncomp);
    for (std::uint32_t c = 0; c < ncomp; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return min_member[a] < min_member[b]; });
    std::vector<std::uint32_t> rename(ncomp);
    for (std::uint32_t pos = 0; pos < ncomp; ++pos) rename[order[pos]] = pos;
    for (std::uint32_t v = 0; v < n; ++v) comp[v] = rename[comp[v]];

    count = ncomp;
    return comp;
}

}  // namespace topodyn
