#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "topodyn/finite_system.hpp"
#include "topodyn/generators.hpp"
#include "topodyn/sft.hpp"

using namespace topodyn;
using testing::random_planar_system;
using testing::random_subset;
using testing::spaced_identity;

TEST_CASE("metric axioms are enforced on construction") {
    // asymmetric-looking table is impossible by storage; triangle violations
    // and non-bijective maps must be rejected
    CHECK_THROWS_AS(FiniteSystem({"a", "b", "c"}, {1.0, 10.0, 1.0}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(FiniteSystem({"a", "b"}, {1.0}, {0, 0}), Error);
    CHECK_THROWS_AS(FiniteSystem({"a", "b"}, {-1.0}, {0, 1}), Error);
    FiniteSystem ok({"a", "b", "c"}, {1.0, 1.0, 1.0}, {1, 2, 0});
    CHECK(ok.dist(0, 1) == 1.0);
    CHECK(ok.dist(1, 0) == 1.0);
    CHECK(ok.period(0) == 3);
}

TEST_CASE("build_ball: zero radius returns the set itself") {
    auto sys = spaced_identity(5);
    for (StateId i = 0; i < 5; ++i) {
        StateSet s(5);
        s.set(i);
        CHECK(build_ball(sys, s, 0.0) == s);
    }
}

TEST_CASE("build_ball: radius beyond the diameter captures every state") {
    auto sys = spaced_identity(5);
    StateSet s(5);
    s.set(2);
    CHECK(build_ball(sys, s, sys.diameter()) == sys.all_states());
}

TEST_CASE("build_ball on the cantor fan matches the direct norm computation") {
    auto sys = cantor_fan(4, 3);
    const StateSet* lambda = sys.find_subset("lambda");
    REQUIRE(lambda != nullptr);
    StateId origin = lambda->to_vector().front();
    auto ball = build_ball(sys, *lambda, 0.5);

    // oracle: a state is in the ball iff its distance to the origin (its
    // Euclidean norm) is at most 0.5
    for (StateId i = 0; i < sys.size(); ++i)
        CHECK(ball.test(i) == leq(sys.dist(i, origin), 0.5, sys.tolerance()));

    // fibers n >= 3 lie entirely inside, fiber 2 contributes exactly its
    // fixed point at (1/2, 0)
    CHECK(ball.contains(*sys.find_subset("fiber3")));
    CHECK(ball.contains(*sys.find_subset("fiber4")));
    StateSet f2 = *sys.find_subset("fiber2");
    f2 &= ball;
    CHECK(f2.count() == 1);
}

TEST_CASE("invariant_core: invariant set at r=0 stabilizes immediately") {
    auto sys = cantor_fan(3, 2);
    auto f3 = *sys.find_subset("fiber3");
    REQUIRE(sys.is_invariant(f3));
    auto res = invariant_core(sys, f3, 0.0, Count(sys.size()));
    CHECK(res.stabilized);
    CHECK(res.core == f3);
    CHECK(res.stabilized_at == 0);
}

TEST_CASE("invariant_core keeps whole fibers of the cantor fan") {
    auto sys = cantor_fan(4, 3);
    auto res = invariant_core(sys, *sys.find_subset("lambda"), 0.5, Count(sys.size()));
    CHECK(res.stabilized);
    CHECK(res.core.contains(*sys.find_subset("fiber3")));
    CHECK(res.core.contains(*sys.find_subset("fiber4")));
    CHECK(sys.is_invariant(res.core));
}

TEST_CASE("invariant_core: an isolated fixed point is its own core") {
    // two fixed points at distance 1; r below half the gap isolates each
    FiniteSystem sys({"p", "q"}, {1.0}, {0, 1});
    StateSet s(2);
    s.set(0);
    auto res = invariant_core(sys, s, 0.4, 2);
    CHECK(res.core == s);
    CHECK(res.stabilized);
}

TEST_CASE("pseudo-orbits: genuine orbits pass at delta 0, shadowed at eps 0") {
    std::mt19937_64 rng(11);
    auto sys = random_planar_system(rng, 9);
    for (StateId x = 0; x < sys.size(); ++x) {
        FinitePseudoOrbit po;
        po.periodic = false;
        StateId cur = x;
        for (int i = 0; i < 6; ++i) {
            po.entries.push_back(cur);
            cur = sys.map(cur);
        }
        CHECK(is_pseudo_orbit(sys, po, 0.0));
        CHECK(is_shadowed_by(sys, po, x, 0.0));
    }
}

TEST_CASE("pseudo-orbit hopping between the two shift fixed points") {
    auto sys = Sft::full_shift(2).truncation(1);
    REQUIRE(sys.size() == 2);  // 0^inf and 1^inf
    FinitePseudoOrbit po;
    po.entries = {0, 1};
    po.periodic = true;
    CHECK(is_pseudo_orbit(sys, po, 1.0));
    CHECK_FALSE(is_pseudo_orbit(sys, po, 0.25));
}

TEST_CASE("accumulation_set basics") {
    auto sys = spaced_identity(5);
    CHECK(accumulation_set(sys, 0.5).count() == 0);
    CHECK(accumulation_set(sys, sys.diameter()) == sys.all_states());
    CHECK_THROWS_AS(accumulation_set(sys, 0.0), Error);
}

TEST_CASE("accumulation_set covers the circle layer at r = 2/N") {
    auto sys = circle_accumulation(6);
    auto y = accumulation_set(sys, 2.0 / 6.0);
    CHECK(y.contains(*sys.find_subset("circle")));
}

TEST_CASE("property: ball monotonicity in r and containment of S") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        auto sys = random_planar_system(rng, 4 + iter % 12);
        auto s = random_subset(rng, sys.size(), 0.4);
        std::uniform_real_distribution<double> rad(0.0, 1.2);
        double r1 = rad(rng), r2 = rad(rng);
        if (r1 > r2) std::swap(r1, r2);
        auto b1 = build_ball(sys, s, r1), b2 = build_ball(sys, s, r2);
        CHECK(b1.contains(s));
        CHECK(b2.contains(b1));
    }
}

TEST_CASE("property: core monotonicity in horizon and invariance when stabilized") {
    std::mt19937_64 rng(202);
    for (int iter = 0; iter < 100; ++iter) {
        auto sys = random_planar_system(rng, 5 + iter % 9);
        auto s = random_subset(rng, sys.size(), 0.5);
        double r = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        Count h = 1 + iter % 5;
        auto shallow = invariant_core(sys, s, r, h);
        auto deep = invariant_core(sys, s, r, h + 1);
        CHECK(shallow.core.contains(deep.core));
        auto full = invariant_core(sys, s, r, Count(sys.size()));
        CHECK(full.stabilized);
        CHECK(sys.is_invariant(full.core));
    }
}

TEST_CASE("property: the stabilized core contains every invariant subset of the ball") {
    std::mt19937_64 rng(303);
    for (int iter = 0; iter < 40; ++iter) {
        auto sys = random_planar_system(rng, 4 + iter % 9);  // <= 12 states
        auto s = random_subset(rng, sys.size(), 0.4);
        double r = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
        auto ball = build_ball(sys, s, r);
        auto core = invariant_core(sys, s, r, Count(sys.size()));
        REQUIRE(core.stabilized);
        const std::size_t n = sys.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
            StateSet sub(n);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t(1) << i)) sub.set(i);
            if (!ball.contains(sub)) continue;
            if (!sys.is_invariant(sub)) continue;
            CHECK(core.core.contains(sub));
        }
    }
}

TEST_CASE("property: accumulation_set is monotone in r") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 100; ++iter) {
        auto sys = random_planar_system(rng, 4 + iter % 10);
        double r1 = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
        double r2 = r1 + std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        CHECK(accumulation_set(sys, r2).contains(accumulation_set(sys, r1)));
    }
}

TEST_CASE("restriction to an invariant subset relabels consistently") {
    auto sys = cantor_fan(3, 2);
    auto f3 = *sys.find_subset("fiber3");
    auto sub = sys.restrict(f3);
    CHECK(sub.size() == f3.count());

    // restriction to a half orbit must be rejected
    StateSet bad(sys.size());
    for (StateId i = 0; i < sys.size(); ++i)
        if (sys.period(i) == 2) {
            bad.set(i);
            break;
        }
    REQUIRE(bad.count() == 1);
    CHECK_THROWS_AS(sys.restrict(bad), Error);
}
