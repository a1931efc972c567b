#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "conedual/extreal.hpp"

namespace conedual::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };

struct Constraint
{
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/**
 * A linear program over exact rationals. Variables are nonnegative unless
 * flagged free in `freeVariables`.
 */
struct Problem
{
    std::size_t variableCount = 0;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective;
    Sense sense = Sense::Maximize;
    std::vector<bool> freeVariables;     // empty means all nonnegative

    bool isFree(std::size_t j) const { return j < freeVariables.size() && freeVariables[j]; }
};

struct Optimal
{
    std::vector<Rational> point;
    Rational value;
};

/**
 * Farkas multipliers y, one per constraint, with y_i >= 0 on <= rows,
 * y_i <= 0 on >= rows, y_i free on = rows, such that y^T A >= 0 on
 * nonnegative variables, y^T A = 0 on free variables and y^T b < 0.
 */
struct Infeasible
{
    std::vector<Rational> multipliers;
};

/// A feasible point together with a direction of unbounded improvement.
struct Unbounded
{
    std::vector<Rational> point;
    std::vector<Rational> ray;
};

using Result = std::variant<Optimal, Infeasible, Unbounded>;

/**
 * Two-phase dense tableau simplex with Bland's rule. Deterministic; never
 * cycles. Throws MalformedProblem when coefficient vectors do not match
 * `variableCount`.
 */
Result solve(const Problem& problem);

/// Independent checkers for the three outcomes; they never call the solver.
bool isFeasible(const Problem& problem, const std::vector<Rational>& point);
bool verifyFarkas(const Problem& problem, const Infeasible& certificate);
bool verifyRay(const Problem& problem, const Unbounded& result);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}   // namespace conedual::lp
