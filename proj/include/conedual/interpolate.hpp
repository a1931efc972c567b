#pragma once

#include <optional>
#include <vector>

#include "conedual/errors.hpp"
#include "conedual/functionals.hpp"

namespace conedual {

/// The hypothesis min_i g_i <= phi fails; `point` is a y with min_i g_i(y) > phi(y).
class PreconditionViolated : public Error
{
    public:
        PreconditionViolated(const std::string& what, ExtVec point)
            : Error("precondition_violated", what), point_(std::move(point)) {}

        const ExtVec& point() const noexcept { return point_; }

    private:
        ExtVec point_;
};

struct MinBelowCheck
{
    bool holds = false;
    std::optional<ExtVec> violation;
};

/**
 * Decides min_i g_i(y) <= max_k h_k(y) for every y of the orthant. Finite
 * coefficients only; checking the simplex suffices by homogeneity.
 */
MinBelowCheck checkMinBelow(const SuperlinFun& clause, const SublinFun& phi);

struct InterpolationResult
{
    /// Convex weights on the clause functionals.
    std::vector<Rational> a;
    /// Convex weights on the branches of phi with sum a_i g_i <= sum lambda_k h_k.
    std::vector<Rational> lambda;
};

/**
 * Finds a convex combination sum_i a_i g_i of the clause functionals lying
 * between the clause minimum and phi, with a coordinatewise certificate.
 * Throws PreconditionViolated if the clause minimum is not below phi.
 */
InterpolationResult interpolate(const std::vector<LinFun>& clause, const SublinFun& phi);

/// sum_i a_i g_i as a linear functional.
LinFun combination(const std::vector<LinFun>& clause, const std::vector<Rational>& a);

/// Checks the weights and the coordinatewise certificate exactly.
bool verifyInterpolation(const std::vector<LinFun>& clause, const SublinFun& phi,
                         const InterpolationResult& result);

struct ClauseWitness
{
    LinFun x;                     // element of the cone, convex in the clause generators
    InterpolationResult weights;
};

/**
 * For every clause (indices into the cone generators) returns an element x
 * of the cone with clause-min <= x <= phi. Processes clauses in order.
 */
std::vector<ClauseWitness> theoremMainWitnesses(const std::vector<std::vector<std::size_t>>& clauses,
                                                const std::vector<LinFun>& coneGenerators,
                                                const SublinFun& phi);

}   // namespace conedual
