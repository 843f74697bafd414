#include <doctest.h>

#include <cmath>

#include "topodyn/generators.hpp"
#include "topodyn/chain.hpp"
#include "topodyn/modelbuild.hpp"

using namespace topodyn;

TEST_CASE("clopen partition: symbol cylinders at e = 3/4") {
    auto full = Sft::full_shift(2);
    auto part = clopen_partition(full, 0.75);
    CHECK(part.half_width == 0);
    CHECK(part.cells.size() == 2);
    CHECK(part.cell_diameter == 0.5);

    // a singleton subshift partitions into one cell
    auto point = Sft::from_transitions(2, {{0, 0}});
    CHECK(clopen_partition(point, 0.75).cells.size() == 1);

    // the period-2 orbit: two singleton-cylinder cells
    auto orbit = Sft::from_words(2, 2, {{0, 1}, {1, 0}});
    CHECK(clopen_partition(orbit, 0.75).cells.size() == 2);

    // finer e needs longer cylinders
    CHECK(clopen_partition(full, 0.3).half_width == 1);
}

TEST_CASE("model: the golden mean inside the full shift") {
    auto full = Sft::full_shift(2);
    auto gm = Sft::golden_mean();
    auto part = clopen_partition(gm, 0.75);
    auto model = build_sft_model(full, gm, part, 1);
    CHECK(model.c == 0.5);

    // W = length-3 words with no 11
    std::vector<Word> expect{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
    CHECK(model.word_set == expect);
    CHECK(model.xi.equals(gm));
    CHECK(model.gamma.equals(gm));
    CHECK(model.sigma_in_xi);
    CHECK(model.sandwich);
    CHECK(model.conjugacy_checked);
    CHECK(is_locally_maximal(full, model.gamma, 6).locally_maximal);
    CHECK(model.xi.spectral_entropy() ==
          doctest::Approx(std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-9));

    // shadowing heredity: the envelope, an SFT conjugate, shadows its own
    // pseudo-orbits constructively
    auto base = SymbolicPoint::periodic({0, 0, 1});
    REQUIRE(model.gamma.member(base));
    SymbolicPseudoOrbit po;
    po.periodic = true;
    for (Count i = 0; i < 3; ++i) po.entries.push_back(base.shifted(i));
    auto shadow = constructive_shadow(model.gamma, po, 0.125);
    CHECK(shadow.point == base);

    // entropy comparison: h(Gamma_c) <= h(Lambda_eps) at eps = c
    auto core = invariant_core_sft(full, gm, model.c);
    CHECK(model.gamma.spectral_entropy() <= core.spectral_entropy() + 1e-9);
}

TEST_CASE("model: the whole shift is its own envelope") {
    auto full = Sft::full_shift(2);
    auto part = clopen_partition(full, 0.75);
    auto model = build_sft_model(full, full, part, 1);
    CHECK(model.word_set.size() == 8);
    CHECK(model.xi.equals(full));
    CHECK(model.gamma.equals(full));
    CHECK(model.sandwich);
}

TEST_CASE("model: the period-2 orbit collapses to itself with zero entropy") {
    auto full = Sft::full_shift(2);
    auto orbit = Sft::from_words(2, 2, {{0, 1}, {1, 0}});
    auto part = clopen_partition(orbit, 0.75);
    auto model = build_sft_model(full, orbit, part, 1);
    std::vector<Word> expect{{0, 1, 0}, {1, 0, 1}};
    CHECK(model.word_set == expect);
    CHECK(model.xi.spectral_entropy() == doctest::Approx(0.0));
    CHECK(model.gamma.equals(orbit));
    CHECK(model.sandwich);
}

TEST_CASE("model rejects a c that cannot keep the thickened cells apart") {
    auto full = Sft::full_shift(2);
    auto gm = Sft::golden_mean();
    auto part = clopen_partition(gm, 0.75);
    CHECK_THROWS_AS(build_sft_model(full, gm, part, 1, 1.0), Error);
    // partition scale below the presentation's realized scale
    CHECK_THROWS_AS(clopen_partition(gm, 1e-15), Error);
    // degenerate family inputs
    CHECK_THROWS_AS(theorem_1_1_verify(RefinementFamily{}, 0.5, {0.25}, 10), Error);
}

TEST_CASE("finite model: the cantor-fan origin builds a one-cell envelope") {
    auto sys = cantor_fan(4, 3);
    auto lambda = *sys.find_subset("lambda");
    auto cells = clopen_partition(sys, lambda, 0.75);
    REQUIRE(cells.size() == 1);
    auto model = build_sft_model(sys, lambda, cells, 1, 0.2, 0.75, 4);
    CHECK(model.gamma == lambda);
    CHECK(model.sandwich);
    CHECK(model.conjugacy_checked);
    CHECK(model.xi.block_count() == 1);
}

TEST_CASE("theorem_1_2_verify (symbolic): golden mean in the full shift is consistent") {
    auto rep = theorem_1_2_verify(Sft::full_shift(2), Sft::golden_mean(),
                                  Thm12Schedule::defaults_for_symbolic());
    CHECK(rep.hyp_shadowing);
    CHECK(rep.hyp_expansive);
    CHECK_FALSE(rep.cond1);  // sensitive
    CHECK_FALSE(rep.cond2);  // entropy positive at every eps
    CHECK_FALSE(rep.cond3);  // envelopes exist but carry entropy
    CHECK(rep.verdict == Thm12Report::Verdict::consistent);
    CHECK(rep.exit_code() == 0);
    // at eps = 1/2 the neighborhood core is the whole shift; below that it
    // collapses to the golden mean exactly
    double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    for (auto& [eps, h] : rep.cond2_estimates) {
        if (eps >= 0.5) CHECK(h == doctest::Approx(std::log(2.0)).epsilon(1e-9));
        else CHECK(h == doctest::Approx(phi).epsilon(1e-9));
    }
}

TEST_CASE("theorem_1_2_verify (symbolic): an isolated fixed point is consistent on the zero side") {
    auto ambient = Sft::from_transitions(2, {{0, 0}, {1, 1}});
    auto lambda = Sft::from_transitions(2, {{0, 0}});
    auto rep = theorem_1_2_verify(ambient, lambda, Thm12Schedule::defaults_for_symbolic());
    CHECK(rep.hyp_shadowing);
    CHECK(rep.hyp_expansive);
    CHECK(rep.cond1);
    CHECK(rep.cond2);
    CHECK(rep.cond3);
    CHECK(rep.verdict == Thm12Report::Verdict::consistent);
}

TEST_CASE("theorem_1_2_verify (finite): the cantor fan refutes expansiveness with fiber witnesses") {
    auto sys = cantor_fan(4, 3);
    auto lambda = *sys.find_subset("lambda");
    auto rep = theorem_1_2_verify(sys, lambda, Thm12Schedule::defaults_for(sys));
    CHECK(rep.hyp_shadowing);
    CHECK_FALSE(rep.hyp_expansive);
    CHECK(rep.hyp_expansive_note.find("witness pair") != std::string::npos);
    CHECK(rep.cond1);        // the singleton restriction is never sensitive
    CHECK_FALSE(rep.cond2);  // the fibers force positive entropy at every scheduled eps
    CHECK(rep.verdict == Thm12Report::Verdict::no_verdict);
    CHECK(rep.exit_code() == 2);
}
