#include "conedual/valuations.hpp"

#include <algorithm>
#include <unordered_set>

#include "conedual/errors.hpp"

namespace conedual {

namespace {

void requireSamePoset(const FinitePoset& a, const FinitePoset& b)
{
    if (!(a == b))
        throw PosetMismatch("valuation and function live on different posets");
}

void requireCoefficients(const DualFunctionalRep& phi, const FinitePoset& poset)
{
    if (phi.coeffs.size() != poset.size())
        throw DimensionMismatch("dual functional has " + std::to_string(phi.coeffs.size())
                                + " coefficients for a poset of size " + std::to_string(poset.size()));
}

/// Diracs first, then seeded random valuations.
std::vector<SimpleValuation> testValuations(const FinitePoset& poset, std::uint64_t seed, std::size_t randomCount)
{
    std::vector<SimpleValuation> out;
    for (std::size_t x = 0; x < poset.size(); ++x)
        out.push_back(SimpleValuation::dirac(poset, x));
    Sampler sampler(seed);
    for (std::size_t i = 0; i < randomCount; ++i)
        out.push_back(randomValuation(poset, sampler));
    return out;
}

}   // namespace

SimpleValuation SimpleValuation::dirac(const FinitePoset& poset, std::size_t x)
{
    SimpleValuation mu = zero(poset);
    mu.weights.at(x) = 1;
    return mu;
}

SimpleValuation SimpleValuation::zero(const FinitePoset& poset)
{
    return {poset, std::vector<ExtReal>(poset.size())};
}

ExtReal evalValuation(const SimpleValuation& mu, const LSCFun& f)
{
    requireSamePoset(mu.poset, f.poset());
    ExtReal total;
    for (std::size_t x = 0; x < f.size(); ++x)
        total += mu.weights[x] * f(x);
    return total;
}

ExtReal evalDual(const DualFunctionalRep& phi, const SimpleValuation& mu)
{
    requireCoefficients(phi, mu.poset);
    ExtReal total;
    for (std::size_t x = 0; x < phi.coeffs.size(); ++x)
        total += mu.weights[x] * phi.coeffs[x];
    return total;
}

ValuationOnOpens toOpens(const SimpleValuation& mu, std::size_t maxSize)
{
    ValuationOnOpens nu{mu.poset, {}};
    for (const OpenSet& u : allOpens(mu.poset, maxSize)) {
        ExtReal value;
        for (std::size_t x = 0; x < mu.poset.size(); ++x)
            if (u.contains(x))
                value += mu.weights[x];
        nu.table.emplace(u, value);
    }
    return nu;
}

SimpleValuation fromOpens(const ValuationOnOpens& nu)
{
    const FinitePoset& poset = nu.poset;
    auto lookup = [&](std::uint64_t mask) -> const ExtReal& {
        const auto it = nu.table.find(OpenSet{mask});
        if (it == nu.table.end())
            throw NotAValuation("no value for the open set with mask " + std::to_string(mask));
        return it->second;
    };
    if (const auto it = nu.table.find(OpenSet{0}); it != nu.table.end() && !it->second.isZero())
        throw NotAValuation("value of the empty set is " + it->second.toString());

    SimpleValuation mu = SimpleValuation::zero(poset);
    for (std::size_t x = 0; x < poset.size(); ++x) {
        const std::uint64_t up = poset.upMask(x);
        const std::uint64_t above = up & ~(std::uint64_t{1} << x);
        const ExtReal& whole = lookup(up);
        const ExtReal& rest = lookup(above);
        if (rest.isInfinite())
            throw UndefinedDifference("weight of element " + std::to_string(x) + " needs "
                                      + whole.toString() + " - inf");
        if (whole < rest)
            throw NotAValuation("weight of element " + std::to_string(x) + " would be negative");
        mu.weights[x] = subPartial(whole, rest);
    }

    for (const auto& [u, value] : nu.table) {
        if (!poset.isUpSet(u.mask))
            throw NotAValuation("table entry is not an open set");
        ExtReal expected;
        for (std::size_t x = 0; x < poset.size(); ++x)
            if (u.contains(x))
                expected += mu.weights[x];
        if (expected != value)
            throw NotAValuation("table is not reproduced by the recovered weights at mask "
                                + std::to_string(u.mask) + ": " + value.toString() + " vs "
                                + expected.toString());
    }
    return mu;
}

bool weakstarMember(const SimpleValuation& mu, const LSCFun& f)
{
    return evalValuation(mu, f) > ExtReal(1);
}

LSCFun ssRecover(const DualFunctionalRep& phi, const FinitePoset& poset)
{
    requireCoefficients(phi, poset);
    // f(x) = phi(delta_x) = c_x; the constructor rejects non-monotone f.
    return LSCFun(poset, phi.coeffs);
}

SimpleValuation randomValuation(const FinitePoset& poset, Sampler& sampler)
{
    SimpleValuation mu = SimpleValuation::zero(poset);
    for (auto& w : mu.weights) {
        const long kind = sampler.uniform(0, 9);
        if (kind == 0)
            w = ExtReal::infinity();
        else if (kind <= 3)
            w = 0;
        else
            w = ExtReal(sampler.rational(6, 4));
    }
    return mu;
}

DirectednessReport lemma1DirectednessCheck(const DualFunctionalRep& phi, const FinitePoset& poset,
                                           long gridDenominator, const ExtReal& cap,
                                           std::uint64_t seed, std::size_t randomCount,
                                           std::size_t maxCandidates)
{
    requireCoefficients(phi, poset);
    if (gridDenominator <= 0)
        throw GridTooLarge("grid denominator must be positive");
    if (cap.isInfinite())
        throw GridTooLarge("grid cap must be finite");
    const Rational steps = cap.rational() * gridDenominator;
    const Integer top = boost::multiprecision::numerator(steps) / boost::multiprecision::denominator(steps);
    const std::size_t n = poset.size();
    std::size_t levels = 0;
    {
        double total = 1;
        if (top > 1000)
            throw GridTooLarge("grid has too many levels");
        levels = static_cast<std::size_t>(top.convert_to<long>()) + 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= static_cast<double>(levels);
        if (total > static_cast<double>(maxCandidates))
            throw GridTooLarge("grid has more than " + std::to_string(maxCandidates) + " points");
    }
    std::vector<ExtReal> grid;
    for (std::size_t k = 0; k < levels; ++k)
        grid.emplace_back(static_cast<long>(k), gridDenominator);

    const auto valuations = testValuations(poset, seed, randomCount);
    std::vector<ExtReal> bounds;
    for (const auto& mu : valuations)
        bounds.push_back(evalDual(phi, mu));

    // Admissible grid functions, encoded in base `levels`.
    DirectednessReport report;
    std::vector<std::vector<std::size_t>> admissible;
    std::unordered_set<std::size_t> admissibleCodes;
    std::vector<std::size_t> digits(n, 0);
    for (bool more = true; more;) {
        bool monotone = true;
        for (std::size_t x = 0; x < n && monotone; ++x)
            for (std::size_t y = 0; y < n && monotone; ++y)
                if (poset.leq(x, y) && digits[x] > digits[y])
                    monotone = false;
        if (monotone) {
            ++report.candidates;
            bool ok = true;
            for (std::size_t v = 0; v < valuations.size() && ok; ++v) {
                ExtReal value;
                for (std::size_t x = 0; x < n; ++x)
                    value += valuations[v].weights[x] * grid[digits[x]];
                ok = value <= bounds[v];
            }
            if (ok) {
                std::size_t code = 0;
                for (std::size_t x = n; x-- > 0;)
                    code = code * levels + digits[x];
                admissible.push_back(digits);
                admissibleCodes.insert(code);
            }
        }
        more = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (++digits[x] < levels) {
                more = true;
                break;
            }
            digits[x] = 0;
        }
    }
    report.admissible = admissible.size();

    auto toFun = [&](const std::vector<std::size_t>& d) {
        std::vector<ExtReal> values;
        for (std::size_t k : d)
            values.push_back(grid[k]);
        return LSCFun(poset, std::move(values));
    };

    for (std::size_t i = 0; i < admissible.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible.size(); ++j) {
            std::size_t code = 0;
            for (std::size_t x = n; x-- > 0;)
                code = code * levels + std::max(admissible[i][x], admissible[j][x]);
            if (admissibleCodes.contains(code))
                continue;
            const bool bounded = std::any_of(admissible.begin(), admissible.end(), [&](const auto& h) {
                for (std::size_t x = 0; x < n; ++x)
                    if (h[x] < admissible[i][x] || h[x] < admissible[j][x])
                        return false;
                return true;
            });
            if (!bounded) {
                report.directed = false;
                report.counterexample.emplace(toFun(admissible[i]), toFun(admissible[j]));
                return report;
            }
        }
    }
    return report;
}

SupReport lemma2SupCheck(const DualFunctionalRep& phi, const FinitePoset& poset,
                         const std::vector<LSCFun>& family, std::uint64_t seed, std::size_t randomCount)
{
    requireCoefficients(phi, poset);
    if (family.empty())
        throw EmptyList("lemma 2 check needs a nonempty family");
    SupReport report;
    for (const auto& mu : testValuations(poset, seed, randomCount)) {
        ExtReal best;
        for (const auto& f : family)
            best = std::max(best, evalValuation(mu, f));
        const ExtReal target = evalDual(phi, mu);
        if (best > target) {
            report.bounded = false;
            report.equal = false;
            report.witness = mu;
            return report;
        }
        if (best != target && report.equal) {
            report.equal = false;
            report.witness = mu;
        }
    }
    return report;
}

}   // namespace conedual
