#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "topodyn/clique.hpp"
#include "topodyn/entropy.hpp"
#include "topodyn/sft.hpp"

using namespace topodyn;
using testing::random_planar_system;
using testing::spaced_identity;

TEST_CASE("max clique: branch and bound equals brute force") {
    std::mt19937_64 rng(608);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t n = 4 + iter % 9;
        std::bernoulli_distribution edge(0.2 + 0.06 * double(iter % 10));
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b) adj[a][b] = adj[b][a] = edge(rng);
        auto bb = max_clique(adj);
        auto brute = max_clique_bruteforce(adj);
        CHECK(bb.size() == brute.size());
        for (std::size_t i = 0; i < bb.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) CHECK(adj[bb[i]][bb[j]]);
    }
}

TEST_CASE("separated sets: radius beyond the diameter leaves one point") {
    auto sys = spaced_identity(6);
    auto s = separated_set(sys, sys.all_states(), 3, sys.diameter() + 1, SeparatedMode::exact, 64);
    CHECK(s.s_n == 1);
}

TEST_CASE("separated sets on the full-shift truncation count prefixes") {
    auto sys = Sft::full_shift(2).truncation(6);
    auto k = sys.all_states();
    auto s1 = separated_set(sys, k, 1, 0.5, SeparatedMode::exact, 128);
    CHECK(s1.s_n == 2);
    auto s3 = separated_set(sys, k, 3, 0.5, SeparatedMode::exact, 128);
    CHECK(s3.s_n == 8);
    // greedy is a lower bound and exact dominates it
    auto g3 = separated_set(sys, k, 3, 0.5, SeparatedMode::greedy);
    CHECK(g3.s_n <= s3.s_n);
    // on this complete-multipartite separation structure greedy is exact
    CHECK(g3.s_n == 8);
    // the exact cap is enforced
    CHECK_THROWS_AS(separated_set(sys, k, 3, 0.5, SeparatedMode::exact, 64), Error);
}

TEST_CASE("entropy estimate: a fixed point is degenerate zero") {
    FiniteSystem sys({"p"}, {}, {0});
    StateSet k(1);
    k.set(0);
    auto rep = entropy_estimate(sys, k, {0.5}, 6);
    CHECK(rep.degenerate);
    CHECK(rep.estimate == 0.0);
}

TEST_CASE("entropy estimate: pure doubling window gives exactly log 2") {
    // s_n(r = 1/2) = 2^n for n <= P on the period-<=P truncation, so the fit
    // window [3, 6] lies on a perfect line of slope log 2
    auto sys = Sft::full_shift(2).truncation(6);
    auto rep = entropy_estimate(sys, sys.all_states(), {0.5}, 6, 128);
    CHECK(rep.estimate == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(rep.per_r.front().residual < 1e-9);
}

TEST_CASE("entropy estimate: golden-mean truncation tracks log phi") {
    auto sys = Sft::golden_mean().truncation(12);
    auto rep = entropy_estimate(sys, sys.all_states(), {0.5}, 10, 4);  // greedy above cap
    double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(rep.estimate == doctest::Approx(phi).epsilon(0.05));
}

TEST_CASE("sft entropy rejects the empty subshift") {
    auto dead = Sft::from_transitions(2, {{0, 1}});  // prunes to nothing
    REQUIRE(dead.empty());
    CHECK_THROWS_AS(dead.spectral_entropy(), Error);
    CHECK_THROWS_AS(dead.word_count_entropy(10), Error);
}

TEST_CASE("sft entropy: exact spectral values") {
    CHECK(Sft::full_shift(2).spectral_entropy() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(Sft::golden_mean().spectral_entropy() == doctest::Approx(phi).epsilon(1e-10));
    CHECK(Sft::from_transitions(1, {{0, 0}}).spectral_entropy() == doctest::Approx(0.0));
    // two-symbol cycle: zero entropy
    CHECK(Sft::from_transitions(2, {{0, 1}, {1, 0}}).spectral_entropy() ==
          doctest::Approx(0.0));
}

TEST_CASE("word-count slope agrees with the spectral value") {
    CHECK(Sft::full_shift(2).word_count_entropy(20) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    auto gm = Sft::golden_mean();
    CHECK(std::abs(gm.word_count_entropy(25) - gm.spectral_entropy()) < 1e-3);
}

TEST_CASE("conjugacy invariance: recoding does not move the spectral value") {
    auto gm = Sft::golden_mean();
    auto recoded = Sft::from_words(2, 4, gm.words(4));
    CHECK(std::abs(gm.spectral_entropy() - recoded.spectral_entropy()) < 1e-9);
    auto full = Sft::full_shift(2);
    auto full5 = Sft::from_words(2, 5, full.words(5));
    CHECK(std::abs(full.spectral_entropy() - full5.spectral_entropy()) < 1e-9);
}

TEST_CASE("property: s_n is antitone in r and monotone in K") {
    std::mt19937_64 rng(707);
    for (int iter = 0; iter < 100; ++iter) {
        auto sys = random_planar_system(rng, 6 + iter % 10);
        auto k2 = sys.all_states();
        // random invariant-free subset is fine for separated sets
        StateSet k1(sys.size());
        for (StateId i = 0; i < sys.size(); ++i)
            if (i % 2 == 0) k1.set(i);
        Count n = 1 + iter % 5;
        double r1 = std::uniform_real_distribution<double>(0.02, 0.4)(rng);
        double r2 = r1 + std::uniform_real_distribution<double>(0.0, 0.6)(rng);
        auto a = separated_set(sys, k2, n, r1, SeparatedMode::exact, 64);
        auto b = separated_set(sys, k2, n, r2, SeparatedMode::exact, 64);
        CHECK(a.s_n >= b.s_n);  // antitone in r
        auto c = separated_set(sys, k1, n, r1, SeparatedMode::exact, 64);
        CHECK(c.s_n <= a.s_n);  // monotone in K
        auto g = separated_set(sys, k2, n, r1, SeparatedMode::greedy);
        CHECK(g.s_n <= a.s_n);  // greedy lower-bounds exact
    }
}

TEST_CASE("default r schedule clamps to realized distances") {
    auto sys = Sft::full_shift(2).truncation(4);
    auto rs = default_r_schedule(sys, sys.all_states());
    REQUIRE(!rs.empty());
    for (double r : rs) {
        CHECK(r > 0);
        CHECK(r <= sys.diameter());
    }
    // descending order
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i] < rs[i - 1]);
}

TEST_CASE("entropy report CSV carries the required columns") {
    auto sys = Sft::full_shift(2).truncation(4);
    auto rep = entropy_estimate(sys, sys.all_states(), {0.5, 0.25}, 4, 64);
    auto csv = rep.csv();
    CHECK(csv.rfind("r,n,s_n,mode\n", 0) == 0);
    CHECK(csv.find("0.5,1,2,exact") != std::string::npos);
}
