#ifndef TOPODYN_TEST_HELPERS_HPP
#define TOPODYN_TEST_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "topodyn/finite_system.hpp"

namespace topodyn::testing {

/// Random planar system: points in the unit square (Euclidean metric, so the
/// triangle inequality holds by construction) with a random permutation map.
inline FiniteSystem random_planar_system(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    std::vector<double> dist;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) {
            double dx = pts[a].first - pts[b].first, dy = pts[a].second - pts[b].second;
            dist.push_back(std::sqrt(dx * dx + dy * dy));
        }
    std::vector<StateId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = StateId(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteSystem(std::move(labels), std::move(dist), std::move(perm));
}

/// n states equally spaced on a line, identity map.
inline FiniteSystem spaced_identity(std::size_t n, double gap = 1.0) {
    std::vector<double> dist;
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) dist.push_back(gap * double(a - b));
    std::vector<StateId> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = StateId(i);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return FiniteSystem(std::move(labels), std::move(dist), std::move(id));
}

inline StateSet random_subset(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
    StateSet s(n);
    std::bernoulli_distribution pick(density);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
        if (pick(rng)) {
            s.set(i);
            any = true;
        }
    if (!any) s.set(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    return s;
}

}  // namespace topodyn::testing

#endif
