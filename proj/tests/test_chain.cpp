#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "topodyn/chain.hpp"
#include "topodyn/sft.hpp"

using namespace topodyn;
using testing::random_planar_system;
using testing::spaced_identity;

namespace {

/// Brute-force oracle: all-pairs reachability by repeated relaxation, CR by
/// membership on a reachability cycle, components by mutual reachability.
struct ClosureOracle {
    std::vector<std::vector<bool>> reach;  // via at least one edge

    explicit ClosureOracle(const ChainGraph& g) {
        const std::size_t n = g.edges.size();
        reach.assign(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x)
            for (auto y : g.edges[x]) reach[x][y] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    if (reach[x][y]) continue;
                    for (std::size_t z = 0; z < n; ++z)
                        if (reach[x][z] && reach[z][y]) {
                            reach[x][y] = true;
                            changed = true;
                            break;
                        }
                }
        }
    }

    bool chain_recurrent(std::size_t x) const { return reach[x][x]; }
    bool mutual(std::size_t x, std::size_t y) const { return reach[x][y] && reach[y][x]; }
};

void check_against_oracle(const FiniteSystem& sys, double delta) {
    auto dec = chain_components(sys, delta);
    ClosureOracle oracle(chain_graph(sys, delta));
    for (StateId x = 0; x < sys.size(); ++x)
        CHECK(dec.cr.test(x) == oracle.chain_recurrent(x));
    for (StateId x = 0; x < sys.size(); ++x)
        for (StateId y = 0; y < sys.size(); ++y) {
            if (!dec.cr.test(x) || !dec.cr.test(y)) continue;
            bool same = dec.component_of(x) == dec.component_of(y);
            CHECK(same == oracle.mutual(x, y));
        }
}

}  // namespace

TEST_CASE("chain graph: delta beyond the diameter is complete") {
    auto sys = spaced_identity(4);
    auto g = chain_graph(sys, sys.diameter());
    CHECK(g.edge_count() == 16);
}

TEST_CASE("chain graph: identity with separated points keeps only self-loops") {
    auto sys = spaced_identity(5);
    auto g = chain_graph(sys, 0.5);
    CHECK(g.edge_count() == 5);
    for (StateId x = 0; x < 5; ++x) {
        REQUIRE(g.edges[x].size() == 1);
        CHECK(g.edges[x][0] == x);
    }
}

TEST_CASE("chain graph on a truncation matches the metric oracle") {
    auto sys = Sft::full_shift(2).truncation(4);
    double delta = 0.25;
    auto g = chain_graph(sys, delta);
    for (StateId x = 0; x < sys.size(); ++x) {
        std::size_t at = 0;
        for (StateId y = 0; y < sys.size(); ++y) {
            bool edge = sys.dist(sys.map(x), y) <= delta;  // exact dyadic table
            bool listed = at < g.edges[x].size() && g.edges[x][at] == y;
            CHECK(edge == listed);
            if (listed) ++at;
        }
    }
    // genuine orbit edges are always present
    for (StateId x = 0; x < sys.size(); ++x) {
        auto g0 = chain_graph(sys, 0.0);
        CHECK(std::binary_search(g0.edges[x].begin(), g0.edges[x].end(), sys.map(x)));
    }
}

TEST_CASE("chain components: two disjoint symbol cycles split at small delta") {
    auto sys = Sft::from_transitions(2, {{0, 0}, {1, 1}}).truncation(3);
    REQUIRE(sys.size() == 2);
    auto dec = chain_components(sys, 0.25);
    CHECK(dec.components.size() == 2);
    CHECK(dec.cr.count() == 2);
    // and they merge once delta reaches the gap
    CHECK(chain_components(sys, 1.0).components.size() == 1);
}

TEST_CASE("chain components: the full-shift truncation is one component at delta 1/4") {
    auto sys = Sft::full_shift(2).truncation(5);
    auto dec = chain_components(sys, 0.25);
    CHECK(dec.cr == sys.all_states());
    CHECK(dec.components.size() == 1);
    CHECK(dec.transitive[0]);
}

TEST_CASE("chain components: identity on separated points gives singletons") {
    auto sys = spaced_identity(5);
    auto dec = chain_components(sys, 0.25);
    CHECK(dec.components.size() == 5);
    for (const auto& c : dec.components) CHECK(c.size() == 1);
}

TEST_CASE("genuine orbit segments are 0-chains") {
    std::mt19937_64 rng(31);
    auto sys = random_planar_system(rng, 12);
    for (StateId x = 0; x < sys.size(); ++x) {
        FinitePseudoOrbit po;
        StateId cur = x;
        for (std::size_t k = 0; k <= sys.size(); ++k) {
            po.entries.push_back(cur);
            cur = sys.map(cur);
        }
        CHECK(is_pseudo_orbit(sys, po, 0.0));
    }
}

TEST_CASE("oracle equivalence on small random systems") {
    std::mt19937_64 rng(57);
    for (int iter = 0; iter < 25; ++iter) {
        auto sys = random_planar_system(rng, 6 + iter % 20);
        for (double delta : {0.05, 0.2, 0.5}) check_against_oracle(sys, delta);
    }
}

TEST_CASE("oracle equivalence on truncations") {
    auto sys = Sft::golden_mean().truncation(5);
    for (double delta : {0.0625, 0.125, 0.25, 0.5}) check_against_oracle(sys, delta);
}

TEST_CASE("monotonicity: CR grows and components coarsen with delta") {
    std::mt19937_64 rng(58);
    for (int iter = 0; iter < 40; ++iter) {
        auto sys = random_planar_system(rng, 5 + iter % 14);
        double d1 = std::uniform_real_distribution<double>(0.01, 0.4)(rng);
        double d2 = d1 + std::uniform_real_distribution<double>(0.0, 0.6)(rng);
        auto dec1 = chain_components(sys, d1);
        auto dec2 = chain_components(sys, d2);
        CHECK(dec2.cr.contains(dec1.cr));
        // refinement: mutually reachable at d1 implies mutually reachable at d2
        for (const auto& comp : dec1.components) {
            std::size_t target = dec2.component_of(comp.front());
            for (auto m : comp) CHECK(dec2.component_of(m) == target);
        }
    }
}

TEST_CASE("delta-restriction identity: CR(f|CR) = CR") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 30; ++iter) {
        auto sys = random_planar_system(rng, 6 + iter % 12);
        double delta = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        auto dec = chain_components(sys, delta);
        auto sub = sys.restrict(dec.cr);  // CR of a permutation is invariant
        auto dec2 = chain_components(sub, delta);
        CHECK(dec2.cr == sub.all_states());
    }
}

TEST_CASE("periodic points and cr_equals_per") {
    // permutations are all-periodic, so CR = Per at every delta
    std::mt19937_64 rng(61);
    auto sys = random_planar_system(rng, 9);
    CHECK(periodic_points(sys, Count(sys.size())) == sys.all_states());
    CHECK(cr_equals_per(sys, 0.3, Count(sys.size())));

    auto trunc = Sft::full_shift(2).truncation(4);
    for (double delta : {0.0, 0.125, 0.5}) CHECK(cr_equals_per(trunc, delta, 4));

    // two fixed "poles" with a transit cycle arranged between them: still a
    // permutation, so CR = Per = everything
    std::vector<std::string> labels{"north", "south", "t0", "t1", "t2"};
    std::vector<double> dist;
    std::vector<std::pair<double, double>> pts{{0, 1}, {0, -1}, {0.1, 0.5}, {0.1, 0}, {0.1, -0.5}};
    for (std::size_t a = 1; a < pts.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            dist.push_back(std::hypot(pts[a].first - pts[b].first, pts[a].second - pts[b].second));
    FiniteSystem ns(std::move(labels), std::move(dist), {0, 1, 3, 4, 2});
    CHECK(cr_equals_per(ns, 0.01, Count(ns.size())));
    // with a period bound below the transit cycle length, Per is smaller
    CHECK_FALSE(cr_equals_per(ns, 0.01, 1) );
}

TEST_CASE("condensation DOT and CSV render") {
    auto sys = Sft::from_transitions(2, {{0, 0}, {1, 1}}).truncation(2);
    auto dec = chain_components(sys, 0.25);
    auto dot = condensation_dot(sys, dec);
    CHECK(dot.find("digraph condensation") != std::string::npos);
    auto csv = chain_csv(sys, {0.25, 1.0});
    CHECK(csv.find("delta,cr_size,component_count,max_component_size,component_sizes") !=
          std::string::npos);
    CHECK(csv.find("\n0.25,2,2,1,1;1\n") != std::string::npos);
}

TEST_CASE("theorem_1_1_verify: all-finite families sit on the finite side") {
    // single fixed point
    FiniteSystem fixed({"p"}, {}, {0});
    auto fam = constant_family(fixed, 4, "single fixed point");
    auto rep = theorem_1_1_verify(fam, 0.5, {0.25}, 100);
    CHECK(rep.applicable);
    CHECK(rep.consistent);
    CHECK_FALSE(rep.side_sensitive);
    CHECK_FALSE(rep.side_cr_growing);
    CHECK_FALSE(rep.side_comp_growing);
    CHECK_FALSE(rep.side_cr_not_per);

    // two fixed points inside an SFT ambient
    auto two = Sft::from_transitions(2, {{0, 0}, {1, 1}}).truncation(3);
    auto fam2 = constant_family(two, 4, "two fixed points");
    auto rep2 = theorem_1_1_verify(fam2, 0.5, {0.25}, 100);
    CHECK(rep2.applicable);
    CHECK(rep2.consistent);
    CHECK_FALSE(rep2.side_sensitive);
}

TEST_CASE("theorem_1_1_verify: full-shift truncations land on the sensitive side") {
    auto fam = truncation_family(Sft::full_shift(2), 3, 6, "full 2-shift truncations");
    auto rep = theorem_1_1_verify(fam, 0.5, {0.25}, 50);
    CHECK(rep.applicable);
    CHECK(rep.consistent);
    CHECK(rep.side_sensitive);
    CHECK(rep.side_cr_growing);
    CHECK(rep.side_comp_growing);
    CHECK(rep.side_cr_not_per);
    CHECK(rep.cr_sizes == std::vector<std::size_t>{10, 22, 52, 106});
}
