#include "topodyn/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace topodyn {

namespace {

struct Solver {
    const std::vector<std::vector<bool>>& adj;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> current;

    explicit Solver(const std::vector<std::vector<bool>>& a) : adj(a) {}

    // Greedy colouring of the candidate set; candidates come back ordered by
    // colour so the branch loop can cut off early.
    void colour(const std::vector<std::uint32_t>& cand, std::vector<std::uint32_t>& ordered,
                std::vector<std::uint32_t>& colours) {
        ordered.clear();
        colours.clear();
        std::vector<std::vector<std::uint32_t>> classes;
        for (auto v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool independent = true;
                for (auto u : cls)
                    if (adj[u][v]) {
                        independent = false;
                        break;
                    }
                if (independent) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        for (std::uint32_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c]) {
                ordered.push_back(v);
                colours.push_back(c + 1);
            }
    }

    void expand(std::vector<std::uint32_t>& cand) {
        std::vector<std::uint32_t> ordered, colours;
        colour(cand, ordered, colours);
        for (std::size_t i = ordered.size(); i-- > 0;) {
            if (current.size() + colours[i] <= best.size()) return;  // bound cut
            std::uint32_t v = ordered[i];
            current.push_back(v);
            std::vector<std::uint32_t> next;
            for (std::size_t j = 0; j < i; ++j)
                if (adj[v][ordered[j]]) next.push_back(ordered[j]);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<std::uint32_t> max_clique(const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return {};
    Solver solver(adj);
    // order vertices by degree, densest first
    std::vector<std::uint32_t> cand(n);
    for (std::uint32_t i = 0; i < n; ++i) cand[i] = i;
    std::vector<std::size_t> deg(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (adj[i][j]) ++deg[i];
    std::sort(cand.begin(), cand.end(),
              [&](std::uint32_t a, std::uint32_t b) { return deg[a] > deg[b]; });
    solver.expand(cand);
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

std::vector<std::uint32_t> max_clique_bruteforce(const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = adj.size();
    if (n > 24) throw std::invalid_argument("brute force clique capped at 24 vertices");
    std::vector<std::uint32_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) members.push_back(i);
        if (members.size() <= best.size()) continue;
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
            for (std::size_t j = 0; j < i && clique; ++j)
                if (!adj[members[i]][members[j]]) clique = false;
        if (clique) best = members;
    }
    return best;
}

}  // namespace topodyn
