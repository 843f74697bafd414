#include <doctest.h>

#include "topodyn/chaos.hpp"
#include "topodyn/generators.hpp"
#include "topodyn/io.hpp"
#include "topodyn/sft.hpp"

using namespace topodyn;

TEST_CASE("cantor fan: the smallest instance has three fixed points") {
    auto sys = cantor_fan(2, 1);
    CHECK(sys.size() == 3);  // origin + the two fiber-2 fixed points
    for (StateId i = 0; i < sys.size(); ++i) CHECK(sys.map(i) == i);
}

TEST_CASE("cantor fan: fibers are invariant and conjugate to the shift truncation") {
    auto sys = cantor_fan(4, 3);
    auto trunc = Sft::full_shift(2).truncation(3);
    REQUIRE(sys.find_subset("lambda") != nullptr);
    CHECK(sys.size() == 1 + 3 * trunc.size());

    for (Count n = 2; n <= 4; ++n) {
        auto fiber = *sys.find_subset("fiber" + std::to_string(n));
        CHECK(fiber.count() == trunc.size());
        CHECK(sys.is_invariant(fiber));
        // orbit comparison: the fiber states list in the same deterministic
        // order as the truncation's periodic points, and the map matches
        auto ids = fiber.to_vector();
        for (StateId i = 0; i < trunc.size(); ++i) {
            StateId expect = ids[trunc.map(i)];
            CHECK(sys.map(ids[i]) == expect);
        }
    }
}

TEST_CASE("cantor fan: lambda is a fixed singleton with no sensitivity") {
    auto sys = cantor_fan(3, 2);
    auto lambda = *sys.find_subset("lambda");
    CHECK(lambda.count() == 1);
    CHECK(sys.is_invariant(lambda));
    for (double a : {0.1, 0.5, 2.0})
        CHECK(sensitive_points(sys, lambda, a).sensitive.count() == 0);
}

TEST_CASE("cantor fan labels carry the exact rational coordinates") {
    auto sys = cantor_fan(2, 1);
    bool found = false;
    for (StateId i = 0; i < sys.size(); ++i)
        if (sys.label(i).find("z(1/2,1/1/2)") != std::string::npos) found = true;
    CHECK(found);  // the fiber-2 image of 1^inf sits at (1/2, 1/2)
}

TEST_CASE("circle accumulation: the construction enumerated directly") {
    auto sys = circle_accumulation(2);
    // 2 circle samples + z_{1,0} + z_{2,0} + z_{2,1}
    CHECK(sys.size() == 5);
    // X = Per(f): every state returns to itself
    for (StateId i = 0; i < sys.size(); ++i) CHECK(sys.iterate(i, sys.period(i)) == i);

    auto big = circle_accumulation(6);
    CHECK(big.size() == 32 + 1 + 2 + 4 + 8 + 16 + 32);
    // ring n is one cyclic orbit of length 2^{n-1}
    for (Count n = 1; n <= 6; ++n) {
        auto ring = *big.find_subset("ring" + std::to_string(n));
        CHECK(ring.count() == std::size_t(1) << (n - 1));
        for (auto id : ring.to_vector()) CHECK(big.period(id) == Count(1) << (n - 1));
    }
    // the circle layer is fixed pointwise
    for (auto id : big.find_subset("circle")->to_vector()) CHECK(big.map(id) == id);
}

TEST_CASE("generators are deterministic: identical parameters, identical bytes") {
    CHECK(serialize_system(cantor_fan(4, 3)) == serialize_system(cantor_fan(4, 3)));
    CHECK(serialize_system(circle_accumulation(5)) == serialize_system(circle_accumulation(5)));
}
