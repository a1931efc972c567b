#include "conedual/interpolate.hpp"

#include <stdexcept>

#include "conedual/lp.hpp"

namespace conedual {

MinBelowCheck checkMinBelow(const SuperlinFun& clause, const SublinFun& phi)
{
    const Margin margin = simplexMargin(clause.branches, phi.branches);
    if (margin.value <= 0)
        return {true, std::nullopt};
    return {false, margin.point};
}

LinFun combination(const std::vector<LinFun>& clause, const std::vector<Rational>& a)
{
    if (clause.empty())
        throw EmptyList("empty clause");
    if (a.size() != clause.size())
        throw DimensionMismatch("weights do not match the clause size");
    ExtVec coeffs(clause.front().dim());
    for (std::size_t i = 0; i < clause.size(); ++i)
        coeffs = coeffs + ExtReal(a[i]) * clause[i].coeffs;
    return LinFun{std::move(coeffs)};
}

InterpolationResult interpolate(const std::vector<LinFun>& clause, const SublinFun& phi)
{
    if (clause.empty() || phi.branches.empty())
        throw EmptyList("interpolation needs a nonempty clause and phi");
    const std::size_t m = clause.front().dim();
    for (const auto& g : clause)
        requireDim(g.coeffs, m, "clause functional");
    for (const auto& h : phi.branches)
        requireDim(h.coeffs, m, "phi branch");

    const MinBelowCheck check = checkMinBelow(SuperlinFun{clause}, phi);
    if (!check.holds)
        throw PreconditionViolated("clause minimum exceeds phi at " + check.violation->toString(),
                                   *check.violation);

    if (clause.size() == 1) {
        const Domination d = dominatedByMax(clause.front(), phi);
        if (!d.dominated)
            throw std::logic_error("single clause passed the margin test but is not dominated");
        return {{Rational(1)}, *d.lambda};
    }

    const std::size_t n = clause.size();
    const std::size_t k = phi.branches.size();
    std::vector<std::vector<Rational>> gs, hs;
    for (const auto& g : clause)
        gs.push_back(toRationals(g.coeffs, "interpolate"));
    for (const auto& h : phi.branches)
        hs.push_back(toRationals(h.coeffs, "interpolate"));

    lp::Problem problem;
    problem.variableCount = n + k;
    problem.objective.assign(n + k, Rational(0));
    std::vector<Rational> sumA(n + k, Rational(0)), sumLambda(n + k, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        sumA[i] = 1;
    for (std::size_t b = 0; b < k; ++b)
        sumLambda[n + b] = 1;
    problem.constraints.push_back({sumA, lp::Relation::Equal, 1});
    problem.constraints.push_back({sumLambda, lp::Relation::Equal, 1});
    for (std::size_t j = 0; j < m; ++j) {
        lp::Constraint row{std::vector<Rational>(n + k), lp::Relation::LessEqual, 0};
        for (std::size_t i = 0; i < n; ++i)
            row.coeffs[i] = gs[i][j];
        for (std::size_t b = 0; b < k; ++b)
            row.coeffs[n + b] = -hs[b][j];
        problem.constraints.push_back(std::move(row));
    }
    const auto result = lp::solve(problem);
    const auto* opt = std::get_if<lp::Optimal>(&result);
    if (opt == nullptr)
        throw std::logic_error("interpolation LP infeasible although the hypothesis holds");
    InterpolationResult out;
    out.a.assign(opt->point.begin(), opt->point.begin() + static_cast<std::ptrdiff_t>(n));
    out.lambda.assign(opt->point.begin() + static_cast<std::ptrdiff_t>(n), opt->point.end());
    return out;
}

bool verifyInterpolation(const std::vector<LinFun>& clause, const SublinFun& phi,
                         const InterpolationResult& result)
{
    if (clause.empty() || result.a.size() != clause.size())
        return false;
    Rational total = 0;
    for (const auto& a : result.a) {
        if (a < 0)
            return false;
        total += a;
    }
    if (total != 1)
        return false;
    return verifyDomination(combination(clause, result.a), phi, result.lambda);
}

std::vector<ClauseWitness> theoremMainWitnesses(const std::vector<std::vector<std::size_t>>& clauses,
                                                const std::vector<LinFun>& coneGenerators,
                                                const SublinFun& phi)
{
    std::vector<ClauseWitness> out;
    out.reserve(clauses.size());
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        std::vector<LinFun> clause;
        for (std::size_t idx : clauses[c]) {
            if (idx >= coneGenerators.size())
                throw std::out_of_range("clause " + std::to_string(c) + " refers to generator "
                                        + std::to_string(idx));
            clause.push_back(coneGenerators[idx]);
        }
        InterpolationResult weights;
        try {
            weights = interpolate(clause, phi);
        } catch (const PreconditionViolated& e) {
            throw PreconditionViolated("clause " + std::to_string(c) + ": " + e.what(), e.point());
        }
        LinFun x = combination(clause, weights.a);
        if (!dominatedByMax(x, phi).dominated)
            throw std::logic_error("interpolated functional is not below phi");
        out.push_back({std::move(x), std::move(weights)});
    }
    return out;
}

}   // namespace conedual
