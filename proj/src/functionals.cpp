#include "conedual/functionals.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "conedual/errors.hpp"
#include "conedual/lp.hpp"
#include "conedual/sampling.hpp"

namespace conedual {

namespace {

template <typename Fold>
ExtReal foldBranches(const std::vector<LinFun>& branches, const ExtVec& y, const char* what, Fold better)
{
    if (branches.empty())
        throw EmptyList(std::string(what) + " with no branches");
    ExtReal best = eval(branches.front(), y);
    for (std::size_t k = 1; k < branches.size(); ++k) {
        ExtReal v = eval(branches[k], y);
        if (better(v, best))
            best = std::move(v);
    }
    return best;
}

std::vector<LinFun> branchesOf(const Functional& f)
{
    if (const auto* lin = std::get_if<LinFun>(&f))
        return {*lin};
    if (const auto* sub = std::get_if<SublinFun>(&f))
        return sub->branches;
    return std::get<SuperlinFun>(f).branches;
}

bool allFinite(const std::vector<LinFun>& branches)
{
    return std::all_of(branches.begin(), branches.end(),
                       [](const LinFun& b) { return b.coeffs.isFinite(); });
}

}   // namespace

std::size_t dim(const Functional& f)
{
    const auto branches = branchesOf(f);
    if (branches.empty())
        throw EmptyList("functional with no branches");
    return branches.front().dim();
}

ExtReal eval(const LinFun& f, const ExtVec& y)
{
    requireDim(y, f.dim(), "evaluation point");
    return pairing(f.coeffs, y);
}

ExtReal eval(const SublinFun& f, const ExtVec& y)
{
    return foldBranches(f.branches, y, "max", [](const ExtReal& a, const ExtReal& b) { return a > b; });
}

ExtReal eval(const SuperlinFun& f, const ExtVec& y)
{
    return foldBranches(f.branches, y, "min", [](const ExtReal& a, const ExtReal& b) { return a < b; });
}

ExtReal eval(const Functional& f, const ExtVec& y)
{
    return std::visit([&](const auto& g) { return eval(g, y); }, f);
}

bool memberU(const Functional& f, const ExtVec& y) { return eval(f, y) > ExtReal(1); }

bool memberA(const Functional& f, const ExtVec& y) { return !memberU(f, y); }

bool memberU(const OpenSetRep& u, const ExtVec& y)
{
    return std::any_of(u.blocks.begin(), u.blocks.end(), [&](const std::vector<LinFun>& block) {
        return memberU(Functional(SuperlinFun{block}), y);
    });
}

ExtReal minkowski(const OpenSetRep& u, const ExtVec& y)
{
    if (u.blocks.empty())
        throw EmptyList("open set with no blocks");
    ExtReal best;
    for (const auto& block : u.blocks) {
        ExtReal v = eval(SuperlinFun{block}, y);
        if (v > best)
            best = std::move(v);
    }
    return best;
}

Domination dominatedByMax(const LinFun& f, const SublinFun& phi)
{
    if (phi.branches.empty())
        throw EmptyList("max with no branches");
    const std::size_t m = f.dim();
    for (const auto& h : phi.branches)
        requireDim(h.coeffs, m, "branch");
    const auto target = toRationals(f.coeffs, "dominated_by_max");
    std::vector<std::vector<Rational>> hs;
    for (const auto& h : phi.branches)
        hs.push_back(toRationals(h.coeffs, "dominated_by_max"));

    const std::size_t k = hs.size();
    lp::Problem problem;
    problem.variableCount = k;
    problem.objective.assign(k, Rational(0));
    problem.constraints.push_back({std::vector<Rational>(k, Rational(1)), lp::Relation::Equal, 1});
    for (std::size_t j = 0; j < m; ++j) {
        lp::Constraint row{std::vector<Rational>(k), lp::Relation::GreaterEqual, target[j]};
        for (std::size_t b = 0; b < k; ++b)
            row.coeffs[b] = hs[b][j];
        problem.constraints.push_back(std::move(row));
    }
    const auto result = lp::solve(problem);
    if (const auto* opt = std::get_if<lp::Optimal>(&result))
        return {true, opt->point};
    return {false, std::nullopt};
}

Margin simplexMargin(const std::vector<LinFun>& lower, const std::vector<LinFun>& upper)
{
    if (lower.empty() || upper.empty())
        throw EmptyList("margin needs nonempty families");
    const std::size_t m = lower.front().dim();
    std::vector<std::vector<Rational>> gs, hs;
    for (const auto& g : lower) {
        requireDim(g.coeffs, m, "lower functional");
        gs.push_back(toRationals(g.coeffs, "check_min_below"));
    }
    for (const auto& h : upper) {
        requireDim(h.coeffs, m, "upper functional");
        hs.push_back(toRationals(h.coeffs, "check_min_below"));
    }

    // Variables y_0..y_{m-1} >= 0 and a free margin t in the last slot.
    lp::Problem problem;
    problem.variableCount = m + 1;
    problem.freeVariables.assign(m + 1, false);
    problem.freeVariables[m] = true;
    problem.objective.assign(m + 1, Rational(0));
    problem.objective[m] = 1;
    std::vector<Rational> simplex(m + 1, Rational(1));
    simplex[m] = 0;
    problem.constraints.push_back({simplex, lp::Relation::Equal, 1});
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            lp::Constraint row{std::vector<Rational>(m + 1), lp::Relation::GreaterEqual, 0};
            for (std::size_t j = 0; j < m; ++j)
                row.coeffs[j] = g[j] - h[j];
            row.coeffs[m] = -1;
            problem.constraints.push_back(std::move(row));
        }
    }
    const auto result = lp::solve(problem);
    const auto* opt = std::get_if<lp::Optimal>(&result);
    if (opt == nullptr)
        throw std::logic_error("margin LP over the simplex must have an optimum");
    Margin margin;
    margin.value = opt->point[m];
    margin.point = fromRationals(std::vector<Rational>(opt->point.begin(), opt->point.begin() + m));
    return margin;
}

bool verifyDomination(const LinFun& f, const SublinFun& phi, const std::vector<Rational>& lambda)
{
    if (lambda.size() != phi.branches.size())
        return false;
    Rational total = 0;
    ExtVec combo(f.dim());
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] < 0 || phi.branches[k].dim() != f.dim())
            return false;
        total += lambda[k];
        combo = combo + ExtReal(lambda[k]) * phi.branches[k].coeffs;
    }
    return total == 1 && coordinatewiseLeq(f.coeffs, combo);
}

std::optional<std::size_t> specOrderViolation(const ExtVec& y, const ExtVec& yPrime,
                                              const std::vector<LinFun>& coneGenerators)
{
    requireDim(yPrime, y.dim(), "spec_leq");
    for (std::size_t g = 0; g < coneGenerators.size(); ++g) {
        requireDim(coneGenerators[g].coeffs, y.dim(), "cone generator");
        if (eval(coneGenerators[g], y) > eval(coneGenerators[g], yPrime))
            return g;
    }
    return std::nullopt;
}

bool specLeq(const ExtVec& y, const ExtVec& yPrime, const std::vector<LinFun>& coneGenerators)
{
    return !specOrderViolation(y, yPrime, coneGenerators).has_value();
}

LeqDecision leqFunctional(const Functional& phi, const Functional& psi,
                          std::size_t sampleBudget, std::uint64_t seed)
{
    const std::size_t m = dim(phi);
    if (dim(psi) != m)
        throw DimensionMismatch("functionals of different dimensions");

    const bool maxLike = !std::holds_alternative<SuperlinFun>(phi)
                      && !std::holds_alternative<SuperlinFun>(psi);
    const auto lower = branchesOf(phi);
    const auto upper = branchesOf(psi);
    if (maxLike && allFinite(lower) && allFinite(upper)) {
        const SublinFun bound{upper};
        for (const auto& branch : lower) {
            if (dominatedByMax(branch, bound).dominated)
                continue;
            return {false, true, simplexMargin({branch}, upper).point};
        }
        return {true, true, std::nullopt};
    }

    auto violates = [&](const ExtVec& y) { return eval(phi, y) > eval(psi, y); };

    // Deterministic grid over {0, 1, 2, inf}^m first, then seeded random points.
    static const std::array<ExtReal, 4> grid{ExtReal(0), ExtReal(1), ExtReal(2), ExtReal::infinity()};
    std::size_t used = 0;
    std::vector<std::size_t> digits(m, 0);
    for (bool more = true; more && used < sampleBudget / 2; ++used) {
        ExtVec y(m);
        for (std::size_t i = 0; i < m; ++i)
            y[i] = grid[digits[i]];
        if (violates(y))
            return {false, false, y};
        more = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (++digits[i] < grid.size()) {
                more = true;
                break;
            }
            digits[i] = 0;
        }
    }
    Sampler sampler(seed);
    for (; used < sampleBudget; ++used) {
        ExtVec y = sampler.point(m, 8, 4, 1, 10);
        if (violates(y))
            return {false, false, y};
    }
    return {true, false, std::nullopt};
}

}   // namespace conedual
