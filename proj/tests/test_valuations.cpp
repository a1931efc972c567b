#include <doctest.h>

#include "conedual/errors.hpp"
#include "conedual/valuations.hpp"

using namespace conedual;

namespace {

const ExtReal kInf = ExtReal::infinity();
const FinitePoset kSigma = FinitePoset::chain(2);

SimpleValuation weighted(const FinitePoset& p, std::vector<ExtReal> w) { return SimpleValuation{p, std::move(w)}; }

}   // namespace

TEST_SUITE("valuations") {

TEST_CASE("evaluation")
{
    const LSCFun f(kSigma, {1, 2});
    CHECK(evalValuation(SimpleValuation::dirac(kSigma, 1), f) == ExtReal(2));
    CHECK(evalValuation(weighted(kSigma, {3, 2}), f) == ExtReal(7));
    CHECK(evalValuation(weighted(kSigma, {kInf, 1}), LSCFun(kSigma, {0, 2})) == ExtReal(2));
    CHECK(evalDual(DualFunctionalRep{{1, 2}}, weighted(kSigma, {3, 2})) == ExtReal(7));
    CHECK_THROWS_AS(evalValuation(SimpleValuation::zero(FinitePoset::antichain(2)), f), PosetMismatch);
}

TEST_CASE("Moebius inversion on the two-point chain")
{
    const ValuationOnOpens nu{kSigma, {{OpenSet{0}, 0}, {OpenSet{2}, 2}, {OpenSet{3}, 5}}};
    CHECK(fromOpens(nu).weights == std::vector<ExtReal>{3, 2});
    CHECK(toOpens(fromOpens(nu)).table == nu.table);

    const ValuationOnOpens infinite{kSigma, {{OpenSet{0}, 0}, {OpenSet{2}, kInf}, {OpenSet{3}, kInf}}};
    CHECK_THROWS_AS(fromOpens(infinite), UndefinedDifference);

    const ValuationOnOpens decreasing{kSigma, {{OpenSet{0}, 0}, {OpenSet{2}, 3}, {OpenSet{3}, 1}}};
    CHECK_THROWS_AS(fromOpens(decreasing), NotAValuation);
    const ValuationOnOpens missing{kSigma, {{OpenSet{0}, 0}, {OpenSet{3}, 1}}};
    CHECK_THROWS_AS(fromOpens(missing), NotAValuation);
    const ValuationOnOpens emptyMass{kSigma, {{OpenSet{0}, 1}, {OpenSet{2}, 2}, {OpenSet{3}, 3}}};
    CHECK_THROWS_AS(fromOpens(emptyMass), NotAValuation);

    // Not modular: the antichain {0}, {1} with nu({0,1}) != nu({0}) + nu({1}).
    const FinitePoset two = FinitePoset::antichain(2);
    const ValuationOnOpens notModular{two, {{OpenSet{0}, 0}, {OpenSet{1}, 1}, {OpenSet{2}, 1}, {OpenSet{3}, 3}}};
    CHECK_THROWS_AS(fromOpens(notModular), NotAValuation);
}

TEST_CASE("Dirac valuations are indicator tables")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& poset : posetsUpToIsomorphism(n))
            for (std::size_t x = 0; x < n; ++x) {
                const ValuationOnOpens nu = toOpens(SimpleValuation::dirac(poset, x));
                for (const auto& [u, v] : nu.table)
                    REQUIRE(v == ExtReal(u.contains(x) ? 1 : 0));
            }
}

TEST_CASE("weak-star upper opens")
{
    const LSCFun f(kSigma, {0, 2});
    CHECK(weakstarMember(SimpleValuation::dirac(kSigma, 1), f));
    CHECK_FALSE(weakstarMember(SimpleValuation::dirac(kSigma, 0), f));
    CHECK_FALSE(weakstarMember(SimpleValuation::zero(kSigma), LSCFun(kSigma, {kInf, kInf})));
}

TEST_CASE("recovering the representing function")
{
    const DualFunctionalRep phi{{1, 2}};
    const LSCFun f = ssRecover(phi, kSigma);
    CHECK(f.values() == std::vector<ExtReal>{1, 2});
    CHECK(evalDual(phi, weighted(kSigma, {3, 2})) == ExtReal(7));
    CHECK(evalValuation(weighted(kSigma, {3, 2}), f) == ExtReal(7));

    try {
        ssRecover(DualFunctionalRep{{2, 1}}, kSigma);
        FAIL("expected NotLSC");
    } catch (const NotLSC& e) {
        CHECK(e.lower() == 0);
        CHECK(e.upper() == 1);
    }

    const LSCFun zero = ssRecover(DualFunctionalRep{{0, 0}}, kSigma);
    CHECK(zero == LSCFun::zero(kSigma));

    Sampler s(23);
    const FinitePoset diamond = FinitePoset::fromPairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const DualFunctionalRep psi{{1, 2, ExtReal(5, 2), kInf}};
    const LSCFun g = ssRecover(psi, diamond);
    for (int k = 0; k < 200; ++k) {
        const SimpleValuation mu = randomValuation(diamond, s);
        REQUIRE(evalDual(psi, mu) == evalValuation(mu, g));
    }
}

TEST_CASE("directedness on a grid")
{
    const auto r = lemma1DirectednessCheck(DualFunctionalRep{{1, 2}}, kSigma, 1, 2);
    CHECK(r.directed);
    // Monotone functions on {0,1,2} below (1,2): (0,0),(0,1),(0,2),(1,1),(1,2).
    CHECK(r.admissible == 5);
    CHECK(r.candidates == 6);

    const FinitePoset one = FinitePoset::chain(1);
    CHECK(lemma1DirectednessCheck(DualFunctionalRep{{ExtReal(3, 2)}}, one, 2, 2).directed);
    CHECK(lemma1DirectednessCheck(DualFunctionalRep{{2, 1}}, kSigma, 2, 2).directed);
    CHECK_THROWS_AS(lemma1DirectednessCheck(DualFunctionalRep{{1, 2}}, kSigma, 2, kInf), GridTooLarge);
    CHECK_THROWS_AS(lemma1DirectednessCheck(DualFunctionalRep{{1, 1, 1, 1, 1, 1}}, FinitePoset::antichain(6), 8, 8, 1, 10, 1000),
                    GridTooLarge);
}

TEST_CASE("sup representations")
{
    const DualFunctionalRep phi{{1, 2}};
    const LSCFun f = ssRecover(phi, kSigma);
    const auto single = lemma2SupCheck(phi, kSigma, {f});
    CHECK(single.bounded);
    CHECK(single.equal);

    // Raw steps of (1,2) are 1 on X and 2 on {1}; under 3d0 + 2d1 they give 5 and 4 < 7,
    // while the increasing partial sups reach f itself.
    std::vector<LSCFun> raw, partial;
    for (const auto& [r, u] : toSteps(f)) {
        raw.push_back(step(kSigma, r, u.mask));
        partial.push_back(partial.empty() ? raw.back() : sup(std::vector<LSCFun>{partial.back(), raw.back()}));
    }
    CHECK(lemma2SupCheck(phi, kSigma, partial).equal);
    const auto rawReport = lemma2SupCheck(phi, kSigma, raw);
    CHECK(rawReport.bounded);
    CHECK_FALSE(rawReport.equal);

    const auto zero = lemma2SupCheck(phi, kSigma, {LSCFun::zero(kSigma)});
    CHECK(zero.bounded);
    CHECK_FALSE(zero.equal);
    CHECK(zero.witness.has_value());
}

}
