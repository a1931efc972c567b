#include <doctest.h>

#include "conedual/errors.hpp"
#include "conedual/finspace.hpp"
#include "oracles.hpp"

using namespace conedual;

namespace {

const ExtReal kInf = ExtReal::infinity();

std::vector<ExtReal> vals(std::initializer_list<ExtReal> v) { return v; }

}   // namespace

TEST_SUITE("finspace") {

TEST_CASE("poset validation")
{
    const FinitePoset sierpinski = FinitePoset::fromTable({{true, true}, {false, true}});
    CHECK(sierpinski == FinitePoset::chain(2));
    CHECK(FinitePoset::fromTable({{true, false}, {false, true}}) == FinitePoset::antichain(2));

    try {
        FinitePoset::fromTable({{true, true}, {true, true}});
        FAIL("expected InvalidPoset");
    } catch (const InvalidPoset& e) {
        CHECK(e.kind() == "not_antisymmetric");
        CHECK(e.witness() == std::vector<int>{0, 1});
    }
    try {
        FinitePoset::fromTable({{false, true}, {false, true}});
        FAIL("expected InvalidPoset");
    } catch (const InvalidPoset& e) {
        CHECK(e.kind() == "not_reflexive");
    }
    try {
        FinitePoset::fromTable({{true, true, false}, {false, true, true}, {false, false, true}});
        FAIL("expected InvalidPoset");
    } catch (const InvalidPoset& e) {
        CHECK(e.kind() == "not_transitive");
        CHECK(e.witness() == std::vector<int>{0, 1, 2});
    }

    // Pairs are closed under reflexivity and transitivity.
    const FinitePoset closed = FinitePoset::fromPairs(3, {{0, 1}, {1, 2}});
    CHECK(closed == FinitePoset::chain(3));
    CHECK_THROWS_AS(FinitePoset::fromPairs(2, {{0, 1}, {1, 0}}), InvalidPoset);
}

TEST_CASE("monotonicity is lower semicontinuity")
{
    const FinitePoset s = FinitePoset::chain(2);
    CHECK(isLsc(vals({1, 2}), s).lsc);
    const LscCheck bad = isLsc(vals({2, 1}), s);
    CHECK_FALSE(bad.lsc);
    CHECK(bad.violation == std::optional<std::pair<int, int>>{{0, 1}});
    CHECK(isLsc(vals({3, 3, 3}), FinitePoset::chain(3)).lsc);
    CHECK(isLsc(vals({kInf, 0}), FinitePoset::antichain(2)).lsc);
    CHECK_THROWS_AS(LSCFun(s, vals({2, 1})), NotLSC);
}

TEST_CASE("open sets")
{
    CHECK(allOpens(FinitePoset::chain(2)) == std::vector<OpenSet>{{0}, {2}, {3}});
    CHECK(allOpens(FinitePoset::antichain(2)).size() == 4);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(allOpens(FinitePoset::antichain(n)).size() == (std::size_t{1} << n));
    CHECK(allOpens(FinitePoset::chain(5)).size() == 6);
    CHECK_THROWS_AS(makeOpen(FinitePoset::chain(2), 1), NotUpSet);
    CHECK_THROWS_AS(allOpens(FinitePoset::antichain(13)), TooLarge);
}

TEST_CASE("steps")
{
    const FinitePoset s = FinitePoset::chain(2);
    CHECK(step(s, 2, 2).values() == vals({0, 2}));
    const auto steps = toSteps(LSCFun(s, vals({0, 2})));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].first == ExtReal(2));
    CHECK(steps[0].second == OpenSet{2});
    CHECK(toSteps(LSCFun::zero(s)).empty());

    // The sup of the steps reproduces f.
    const LSCFun f(FinitePoset::chain(3), vals({1, 3, kInf}));
    std::vector<LSCFun> parts;
    for (const auto& [r, u] : toSteps(f))
        parts.push_back(step(f.poset(), r, u.mask));
    CHECK(sup(parts) == f);
}

TEST_CASE("cone operations")
{
    const FinitePoset s = FinitePoset::chain(2);
    CHECK((LSCFun(s, vals({1, 2})) + LSCFun(s, vals({0, 1}))).values() == vals({1, 3}));
    CHECK((ExtReal(0) * LSCFun(s, vals({kInf, kInf}))).values() == vals({0, 0}));
    const std::vector<LSCFun> family{LSCFun(s, vals({0, 1})), LSCFun(s, vals({1, 1}))};
    CHECK(sup(family).values() == vals({1, 1}));
    CHECK(inf(family).values() == vals({0, 1}));
    CHECK(pointwiseLeq(family[0], family[1]));
    CHECK_THROWS_AS(sup(std::vector<LSCFun>{}), EmptyList);
    CHECK_THROWS_AS(LSCFun(s, vals({1, 2})) + LSCFun::zero(FinitePoset::antichain(2)), PosetMismatch);
}

TEST_CASE("posets up to isomorphism")
{
    const std::vector<std::size_t> expected{1, 2, 5, 16, 63, 318};
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto all = posetsUpToIsomorphism(n);
        CHECK(all.size() == expected[n - 1]);
        for (const auto& p : all)
            CHECK(p.isTopologicallySorted());
    }
    CHECK_THROWS_AS(posetsUpToIsomorphism(7), TooLarge);
}

TEST_CASE("monotone iff every strict superlevel set is open")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& poset : posetsUpToIsomorphism(n)) {
            std::vector<long> digits(n, 0);
            for (bool more = true; more;) {
                std::vector<ExtReal> f;
                for (long d : digits)
                    f.push_back(d == 2 ? kInf : ExtReal(d));
                REQUIRE(isLsc(f, poset).lsc == oracle::lscByPreimages(f, poset));
                more = false;
                for (auto& d : digits) {
                    if (++d <= 2) {
                        more = true;
                        break;
                    }
                    d = 0;
                }
            }
        }
}

}
