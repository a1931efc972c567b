#include <doctest.h>

#include "conedual/errors.hpp"
#include "conedual/interpolate.hpp"
#include "conedual/sampling.hpp"
#include "oracles.hpp"

using namespace conedual;

namespace {

const LinFun kDiag{{1, 1}};
const std::vector<LinFun> kAxes{LinFun{{2, 0}}, LinFun{{0, 2}}};

/// Sandwich min <= x <= phi on a dyadic grid.
bool sandwichOnGrid(const std::vector<LinFun>& clause, const LinFun& x, const SublinFun& phi)
{
    return !oracle::gridViolation(SuperlinFun{clause}, x, 2, 6).has_value()
        && !oracle::gridViolation(x, phi, 2, 6).has_value();
}

}   // namespace

TEST_SUITE("interpolate") {

TEST_CASE("minimum below maximum")
{
    CHECK(checkMinBelow(SuperlinFun{kAxes}, SublinFun{{kDiag}}).holds);

    const MinBelowCheck fails = checkMinBelow(SuperlinFun{{LinFun{{3, 3}}}}, SublinFun{{kDiag}});
    CHECK_FALSE(fails.holds);
    REQUIRE(fails.violation.has_value());
    CHECK(eval(LinFun{{3, 3}}, *fails.violation) > eval(kDiag, *fails.violation));

    const LinFun g{{1, 2, 3}};
    CHECK(checkMinBelow(SuperlinFun{{g}}, SublinFun{{g}}).holds);
}

TEST_CASE("interpolating the two axis functionals under the diagonal")
{
    const SublinFun phi{{kDiag}};
    const InterpolationResult r = interpolate(kAxes, phi);
    CHECK(r.a == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(r.lambda == std::vector<Rational>{1});
    CHECK(verifyInterpolation(kAxes, phi, r));
    CHECK(combination(kAxes, r.a) == kDiag);
    CHECK(sandwichOnGrid(kAxes, kDiag, phi));
}

TEST_CASE("singleton clause")
{
    const LinFun g{{1, 0, 2}};
    const InterpolationResult r = interpolate({g}, SublinFun{{g}});
    CHECK(r.a == std::vector<Rational>{1});
    CHECK(r.lambda == std::vector<Rational>{1});
}

TEST_CASE("every convex combination fits under a large bound")
{
    const SublinFun phi{{LinFun{{2, 2}}}};
    const InterpolationResult r = interpolate(kAxes, phi);
    CHECK(r.a[0] + r.a[1] == 1);
    CHECK(r.lambda == std::vector<Rational>{1});
    CHECK(verifyInterpolation(kAxes, phi, r));
    CHECK(sandwichOnGrid(kAxes, combination(kAxes, r.a), phi));
}

TEST_CASE("violated hypothesis")
{
    try {
        interpolate({LinFun{{3, 3}}}, SublinFun{{kDiag}});
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        CHECK(eval(LinFun{{3, 3}}, e.point()) > eval(kDiag, e.point()));
        CHECK(e.kind() == "precondition_violated");
    }
}

TEST_CASE("certificate checker rejects bad weights")
{
    const SublinFun phi{{kDiag}};
    CHECK_FALSE(verifyInterpolation(kAxes, phi, {{1, 0}, {1}}));
    CHECK_FALSE(verifyInterpolation(kAxes, phi, {{Rational(1, 2), Rational(1, 3)}, {1}}));
    CHECK_FALSE(verifyInterpolation(kAxes, phi, {{Rational(1, 2), Rational(1, 2)}, {2}}));
}

TEST_CASE("witnesses for clauses of cone generators")
{
    const std::vector<LinFun> gens{LinFun{{2, 0}}, LinFun{{0, 2}}, kDiag};
    const SublinFun phi{{kDiag}};

    const auto one = theoremMainWitnesses({{0, 1}}, gens, phi);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == kDiag);

    const auto two = theoremMainWitnesses({{0, 1}, {2}}, gens, phi);
    REQUIRE(two.size() == 2);
    CHECK(two[0].x == kDiag);
    CHECK(two[1].x == kDiag);

    const LinFun g{{3, 1}};
    CHECK(theoremMainWitnesses({{0}}, {g}, SublinFun{{g}})[0].x == g);

    CHECK_THROWS_AS(theoremMainWitnesses({{5}}, gens, phi), std::out_of_range);
    CHECK_THROWS_AS(theoremMainWitnesses({{0}}, gens, SublinFun{{LinFun{{1, 1}}}}), PreconditionViolated);
}

TEST_CASE("random instances built to satisfy the hypothesis")
{
    Sampler s(17);
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = static_cast<std::size_t>(s.uniform(1, 4));
        const auto n = static_cast<std::size_t>(s.uniform(1, 3));
        std::vector<LinFun> clause;
        for (std::size_t i = 0; i < n; ++i)
            clause.push_back(LinFun{s.finitePoint(m, 6, 3)});
        // A branch above the clause average keeps the hypothesis true.
        std::vector<Rational> even(n, Rational(1, static_cast<long>(n)));
        LinFun top = combination(clause, even);
        const SublinFun phi{{top, LinFun{s.finitePoint(m, 6, 3)}}};
        const InterpolationResult r = interpolate(clause, phi);
        REQUIRE(verifyInterpolation(clause, phi, r));
        const LinFun x = combination(clause, r.a);
        for (int k = 0; k < 100; ++k) {
            const ExtVec y = s.point(m, 6, 3, 1, 6);
            REQUIRE(eval(SuperlinFun{clause}, y) <= eval(x, y));
            REQUIRE(eval(x, y) <= eval(phi, y));
        }
    }
}

}
