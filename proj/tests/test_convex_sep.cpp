#include <doctest.h>

#include "conedual/convex_sep.hpp"
#include "conedual/errors.hpp"
#include "conedual/sampling.hpp"
#include "oracles.hpp"

using namespace conedual;

namespace {
const ExtReal kInf = ExtReal::infinity();
}

TEST_SUITE("convex_sep") {

TEST_CASE("membership in V is strict")
{
    CHECK(inV(ExtVec{2, ExtReal(3, 2)}));
    CHECK_FALSE(inV(ExtVec{2, 1}));
    CHECK(inV(ExtVec{kInf, kInf}));
    CHECK_FALSE(inV(ExtVec{0, kInf}));
}

TEST_CASE("two axis points below V are separated by the midpoint weights")
{
    const std::vector<ExtVec> gens{ExtVec{2, 0}, ExtVec{0, 2}};
    const auto out = separate(gens, 2);
    REQUIRE(std::holds_alternative<Separated>(out));
    const auto& w = std::get<Separated>(out).weights;
    CHECK(w.a == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(verifySeparator(gens, w));
    CHECK(hullDisjointFromV(gens, 2));
}

TEST_CASE("hull through V yields the midpoint witness")
{
    const std::vector<ExtVec> gens{ExtVec{3, 0}, ExtVec{0, 3}};
    const auto out = separate(gens, 2);
    REQUIRE(std::holds_alternative<MeetsV>(out));
    const auto& witness = std::get<MeetsV>(out).witness;
    CHECK(verifyWitness(gens, witness));
    CHECK(combine(gens, witness) == ExtVec{ExtReal(3, 2), ExtReal(3, 2)});
    CHECK_FALSE(hullDisjointFromV(gens, 2));
    // The brute-force oracle agrees.
    CHECK(oracle::dyadicHullPointInV(gens, 32).has_value());
}

TEST_CASE("infinite coordinates get weight zero")
{
    const std::vector<ExtVec> gens{ExtVec{kInf, 0}};
    const auto out = separate(gens, 2);
    REQUIRE(std::holds_alternative<Separated>(out));
    CHECK(std::get<Separated>(out).weights.a == std::vector<Rational>{0, 1});
}

TEST_CASE("every coordinate carried by infinity")
{
    const std::vector<ExtVec> gens{ExtVec{kInf, 0}, ExtVec{0, kInf}};
    const auto out = separate(gens, 2);
    REQUIRE(std::holds_alternative<MeetsV>(out));
    CHECK(inV(combine(gens, std::get<MeetsV>(out).witness)));
}

TEST_CASE("infinite carriers mixed into a finite witness")
{
    // Coordinate 0 is only large through the infinite generator.
    const std::vector<ExtVec> gens{ExtVec{kInf, 0}, ExtVec{0, 4}};
    const auto out = separate(gens, 2);
    REQUIRE(std::holds_alternative<MeetsV>(out));
    CHECK(verifyWitness(gens, std::get<MeetsV>(out).witness));
}

TEST_CASE("single points on the boundary")
{
    CHECK(hullDisjointFromV({ExtVec{1, 1}}, 2));
    CHECK_FALSE(hullDisjointFromV({ExtVec{ExtReal(101, 100), 5}}, 2));
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(separate({}, 2), EmptyList);
    CHECK_THROWS_AS(separate({ExtVec{1, 2}}, 3), DimensionMismatch);
    CHECK_THROWS_AS(separate({ExtVec{}}, 0), DimensionMismatch);
}

TEST_CASE("thin intersections are found exactly even off the dyadic grid")
{
    const auto p = [](const char* a, const char* b, const char* c) {
        return ExtVec{ExtReal::parse(a), ExtReal::parse(b), ExtReal::parse(c)};
    };
    const std::vector<ExtVec> gens{p("7/10", "7/9", "4/15"), p("0", "0", "3/4"),  p("1/4", "3/2", "1/3"),
                                   p("1/3", "6/5", "2"),     p("25/16", "2", "2/11"), p("1", "0", "5/9")};
    const auto out = separate(gens, 3);
    REQUIRE(std::holds_alternative<MeetsV>(out));
    CHECK(verifyWitness(gens, std::get<MeetsV>(out).witness));
    CHECK_FALSE(oracle::dyadicHullPointInV(gens, 32).has_value());
    CHECK(oracle::dyadicHullPointInV(gens, 64).has_value());
}

TEST_CASE("random instances agree with the brute-force oracle")
{
    Sampler s(5);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(s.uniform(1, 2));
        const auto g = static_cast<std::size_t>(s.uniform(1, 4));
        std::vector<ExtVec> gens;
        for (std::size_t i = 0; i < g; ++i)
            gens.push_back(s.point(n, 3, 1, 1, 10));
        const auto out = separate(gens, n);
        const bool meets = std::holds_alternative<MeetsV>(out);
        if (meets)
            REQUIRE(verifyWitness(gens, std::get<MeetsV>(out).witness));
        else
            REQUIRE(verifySeparator(gens, std::get<Separated>(out).weights));
        // Small integer entries keep any intersection with V wide enough for the 1/32 grid.
        REQUIRE(oracle::dyadicHullPointInV(gens, 32).has_value() == meets);
    }
}

}
