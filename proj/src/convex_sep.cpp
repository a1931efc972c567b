#include "conedual/convex_sep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conedual/errors.hpp"
#include "conedual/lp.hpp"

namespace conedual {

namespace {

void validateGenerators(const std::vector<ExtVec>& generators, std::size_t dim)
{
    if (dim == 0)
        throw DimensionMismatch("separation needs a positive dimension");
    if (generators.empty())
        throw EmptyList("separation needs at least one generator");
    for (const auto& g : generators)
        requireDim(g, dim, "generator");
}

std::vector<WitnessTerm> toTerms(const std::map<std::size_t, Rational>& weights)
{
    std::vector<WitnessTerm> terms;
    for (const auto& [index, coefficient] : weights)
        if (coefficient != 0)
            terms.push_back({index, coefficient});
    return terms;
}

}   // namespace

bool inV(const ExtVec& x)
{
    const ExtReal one(1);
    return std::all_of(x.begin(), x.end(), [&](const ExtReal& r) { return r > one; });
}

SeparationOutcome separate(const std::vector<ExtVec>& generators, std::size_t dim)
{
    validateGenerators(generators, dim);

    // Coordinates carrying an infinite generator entry must get weight zero;
    // remember one such generator per coordinate for the witness.
    std::vector<std::size_t> finiteCoords;
    std::vector<std::size_t> infiniteCarriers;
    for (std::size_t i = 0; i < dim; ++i) {
        auto carrier = std::find_if(generators.begin(), generators.end(),
                                    [&](const ExtVec& g) { return g[i].isInfinite(); });
        if (carrier == generators.end())
            finiteCoords.push_back(i);
        else
            infiniteCarriers.push_back(static_cast<std::size_t>(carrier - generators.begin()));
    }
    std::sort(infiniteCarriers.begin(), infiniteCarriers.end());
    infiniteCarriers.erase(std::unique(infiniteCarriers.begin(), infiniteCarriers.end()),
                           infiniteCarriers.end());

    if (finiteCoords.empty()) {
        std::map<std::size_t, Rational> weights;
        const Rational share(1, static_cast<long>(infiniteCarriers.size()));
        for (std::size_t g : infiniteCarriers)
            weights[g] += share;
        return MeetsV{toTerms(weights)};
    }

    const std::size_t k = finiteCoords.size();
    lp::Problem problem;
    problem.variableCount = k;
    problem.objective.assign(k, Rational(0));
    problem.constraints.push_back({std::vector<Rational>(k, Rational(1)), lp::Relation::Equal, 1});
    for (const auto& g : generators) {
        lp::Constraint row{std::vector<Rational>(k), lp::Relation::LessEqual, 1};
        for (std::size_t r = 0; r < k; ++r)
            row.coeffs[r] = g[finiteCoords[r]].rational();
        problem.constraints.push_back(std::move(row));
    }

    const lp::Result result = lp::solve(problem);
    if (const auto* opt = std::get_if<lp::Optimal>(&result)) {
        SeparationWeights w{std::vector<Rational>(dim, Rational(0))};
        for (std::size_t r = 0; r < k; ++r)
            w.a[finiteCoords[r]] = opt->point[r];
        return Separated{std::move(w)};
    }
    const auto* farkas = std::get_if<lp::Infeasible>(&result);
    if (farkas == nullptr)
        throw std::logic_error("separation LP cannot be unbounded");

    // y_0 + sum_p y_p p_r >= 0 on every finite coordinate and y_0 + sum_p y_p < 0,
    // so the normalised multipliers give a combination with every coordinate > 1.
    Rational total = 0;
    for (std::size_t p = 0; p < generators.size(); ++p)
        total += farkas->multipliers[p + 1];
    std::map<std::size_t, Rational> weights;
    for (std::size_t p = 0; p < generators.size(); ++p)
        if (farkas->multipliers[p + 1] != 0)
            weights[p] = farkas->multipliers[p + 1] / total;

    if (!infiniteCarriers.empty()) {
        Rational smallest;
        bool first = true;
        for (std::size_t r : finiteCoords) {
            Rational coord = 0;
            for (const auto& [p, c] : weights)
                coord += c * generators[p][r].rational();
            if (first || coord < smallest)
                smallest = coord;
            first = false;
        }
        // Mix in the infinite carriers with weight eps; (1 - eps) * smallest > 1.
        const Rational eps = (1 - 1 / smallest) / 2;
        for (auto& [p, c] : weights)
            c *= (1 - eps);
        const Rational share = eps / static_cast<long>(infiniteCarriers.size());
        for (std::size_t g : infiniteCarriers)
            weights[g] += share;
    }

    MeetsV outcome{toTerms(weights)};
    if (!verifyWitness(generators, outcome.witness))
        throw std::logic_error("separation produced an invalid witness");
    return outcome;
}

bool hullDisjointFromV(const std::vector<ExtVec>& generators, std::size_t dim)
{
    return std::holds_alternative<Separated>(separate(generators, dim));
}

ExtVec combine(const std::vector<ExtVec>& generators, const std::vector<WitnessTerm>& witness)
{
    if (generators.empty())
        throw EmptyList("no generators to combine");
    ExtVec point(generators.front().dim());
    for (const auto& term : witness) {
        if (term.generator >= generators.size())
            throw std::out_of_range("witness refers to a missing generator");
        point = point + ExtReal(term.coefficient) * generators[term.generator];
    }
    return point;
}

bool verifySeparator(const std::vector<ExtVec>& generators, const SeparationWeights& weights)
{
    Rational total = 0;
    for (const auto& a : weights.a) {
        if (a < 0)
            return false;
        total += a;
    }
    if (total != 1)
        return false;
    const ExtVec a = fromRationals(weights.a);
    const ExtReal one(1);
    for (const auto& g : generators) {
        if (g.dim() != a.dim() || pairing(a, g) > one)
            return false;
    }
    return true;
}

bool verifyWitness(const std::vector<ExtVec>& generators, const std::vector<WitnessTerm>& witness)
{
    if (witness.empty())
        return false;
    Rational total = 0;
    for (const auto& term : witness) {
        if (term.coefficient < 0 || term.generator >= generators.size())
            return false;
        total += term.coefficient;
    }
    return total == 1 && inV(combine(generators, witness));
}

}   // namespace conedual
