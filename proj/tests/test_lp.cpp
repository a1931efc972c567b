#include <doctest.h>

#include <functional>

#include "conedual/lp.hpp"
#include "conedual/sampling.hpp"

using namespace conedual;
using namespace conedual::lp;

namespace {

Constraint row(std::vector<Rational> coeffs, Relation r, Rational rhs)
{
    return Constraint{std::move(coeffs), r, std::move(rhs)};
}

}   // namespace

TEST_SUITE("lp") {

TEST_CASE("unique feasible point")
{
    Problem p;
    p.variableCount = 2;
    p.objective = {0, 0};
    p.constraints = {row({1, 1}, Relation::Equal, 1), row({2, 0}, Relation::LessEqual, 1),
                     row({0, 2}, Relation::LessEqual, 1)};
    const Result r = solve(p);
    REQUIRE(std::holds_alternative<Optimal>(r));
    const auto& opt = std::get<Optimal>(r);
    CHECK(opt.point == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(opt.value == 0);
    CHECK(isFeasible(p, opt.point));
}

TEST_CASE("contradictory constraints give a Farkas certificate")
{
    Problem p;
    p.variableCount = 1;
    p.objective = {0};
    p.constraints = {row({1}, Relation::Equal, 1), row({1}, Relation::LessEqual, 0)};
    const Result r = solve(p);
    REQUIRE(std::holds_alternative<Infeasible>(r));
    CHECK(verifyFarkas(p, std::get<Infeasible>(r)));
}

TEST_CASE("unbounded direction")
{
    Problem p;
    p.variableCount = 1;
    p.objective = {1};
    p.constraints = {row({1}, Relation::GreaterEqual, 0)};
    const Result r = solve(p);
    REQUIRE(std::holds_alternative<Unbounded>(r));
    const auto& u = std::get<Unbounded>(r);
    CHECK(verifyRay(p, u));
    CHECK(u.ray[0] > 0);
}

TEST_CASE("minimisation with free variables and negative right-hand sides")
{
    // min x - y  s.t.  x >= -3, y <= 2, x + y = -1, x free, y free
    Problem p;
    p.variableCount = 2;
    p.sense = Sense::Minimize;
    p.objective = {1, -1};
    p.freeVariables = {true, true};
    p.constraints = {row({1, 0}, Relation::GreaterEqual, -3), row({0, 1}, Relation::LessEqual, 2),
                     row({1, 1}, Relation::Equal, -1)};
    const Result r = solve(p);
    REQUIRE(std::holds_alternative<Optimal>(r));
    const auto& opt = std::get<Optimal>(r);
    CHECK(opt.point == std::vector<Rational>{-3, 2});
    CHECK(opt.value == -5);
}

TEST_CASE("redundant equalities")
{
    Problem p;
    p.variableCount = 2;
    p.objective = {1, 2};
    p.constraints = {row({1, 1}, Relation::Equal, 1), row({2, 2}, Relation::Equal, 2)};
    const Result r = solve(p);
    REQUIRE(std::holds_alternative<Optimal>(r));
    CHECK(std::get<Optimal>(r).value == 2);
}

TEST_CASE("random small programs: certificates always check")
{
    // Optimality is cross-checked by weak duality against a brute-force grid search.
    Sampler s(11);
    for (int trial = 0; trial < 300; ++trial) {
        Problem p;
        p.variableCount = static_cast<std::size_t>(s.uniform(1, 3));
        for (std::size_t j = 0; j < p.variableCount; ++j)
            p.objective.push_back(Rational(s.uniform(-3, 3)));
        const long rows = s.uniform(1, 4);
        for (long i = 0; i < rows; ++i) {
            Constraint c;
            for (std::size_t j = 0; j < p.variableCount; ++j)
                c.coeffs.push_back(Rational(s.uniform(-3, 3)));
            c.relation = static_cast<Relation>(s.uniform(0, 2));
            c.rhs = Rational(s.uniform(-4, 6));
            p.constraints.push_back(c);
        }
        // Bounding box keeps optimal programs bounded half of the time.
        if (trial % 2 == 0)
            for (std::size_t j = 0; j < p.variableCount; ++j) {
                std::vector<Rational> e(p.variableCount, 0);
                e[j] = 1;
                p.constraints.push_back(row(e, Relation::LessEqual, 4));
            }
        const Result r = solve(p);
        if (const auto* opt = std::get_if<Optimal>(&r)) {
            REQUIRE(isFeasible(p, opt->point));
            REQUIRE(dot(p.objective, opt->point) == opt->value);
            // No grid point of the box beats the optimum.
            if (trial % 2 == 0) {
                std::vector<Rational> x(p.variableCount, 0);
                std::function<void(std::size_t)> scan = [&](std::size_t j) {
                    if (j == p.variableCount) {
                        if (isFeasible(p, x))
                            REQUIRE(dot(p.objective, x) <= opt->value);
                        return;
                    }
                    for (int k = 0; k <= 8; ++k) {
                        x[j] = Rational(k, 2);
                        scan(j + 1);
                    }
                };
                scan(0);
            }
        } else if (const auto* inf = std::get_if<Infeasible>(&r)) {
            REQUIRE(verifyFarkas(p, *inf));
        } else {
            REQUIRE(verifyRay(p, std::get<Unbounded>(r)));
        }
    }
}

}
