#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "conedual/finspace.hpp"
#include "conedual/sampling.hpp"

namespace conedual {

/// sum_x r_x delta_x on a finite space.
struct SimpleValuation
{
    FinitePoset poset;
    std::vector<ExtReal> weights;

    static SimpleValuation dirac(const FinitePoset& poset, std::size_t x);
    static SimpleValuation zero(const FinitePoset& poset);

    friend bool operator==(const SimpleValuation&, const SimpleValuation&) = default;
};

/// A valuation given by its values on open sets.
struct ValuationOnOpens
{
    FinitePoset poset;
    std::map<OpenSet, ExtReal> table;
};

/// phi(mu) = sum_x r_x c_x: a linear functional on the valuation cone.
struct DualFunctionalRep
{
    std::vector<ExtReal> coeffs;
};

/// mu(f) = sum_x r_x f(x). Throws PosetMismatch.
ExtReal evalValuation(const SimpleValuation& mu, const LSCFun& f);

ExtReal evalDual(const DualFunctionalRep& phi, const SimpleValuation& mu);

/// nu(U) = mu(chi_U) on every open set.
ValuationOnOpens toOpens(const SimpleValuation& mu, std::size_t maxSize = 12);

/**
 * Moebius inversion r_x = nu(up x) - nu(up x minus x). Throws
 * UndefinedDifference when a subtracted value is infinite and
 * NotAValuation when a weight would be negative, a needed value is missing
 * or the result does not reproduce the table.
 */
SimpleValuation fromOpens(const ValuationOnOpens& nu);

/// Subbasic weak*upper open {mu | mu(f) > 1}.
bool weakstarMember(const SimpleValuation& mu, const LSCFun& f);

/**
 * The function f with phi(mu) = mu(f), namely f(x) = phi(delta_x). Throws
 * NotLSC with the offending pair when f is not monotone, i.e. when phi is
 * not lower semicontinuous for the weak*upper topology.
 */
LSCFun ssRecover(const DualFunctionalRep& phi, const FinitePoset& poset);

/// Weights drawn from {0, p/q with p <= 6, q <= 4, inf}.
SimpleValuation randomValuation(const FinitePoset& poset, Sampler& sampler);

struct DirectednessReport
{
    bool directed = true;
    std::size_t candidates = 0;   // monotone grid functions
    std::size_t admissible = 0;   // those with mu(f) <= phi(mu) on all tested mu
    /// Two admissible functions without an admissible upper bound.
    std::optional<std::pair<LSCFun, LSCFun>> counterexample;
};

/**
 * Finite shadow of the directedness of {f | mu(f) <= phi(mu) for all mu}:
 * candidates are monotone functions with values in {0, 1/d, ..., cap};
 * admissibility is tested on the Dirac valuations plus `randomCount`
 * seeded random valuations. Throws GridTooLarge beyond `maxCandidates`
 * grid points or for an infinite cap.
 */
DirectednessReport lemma1DirectednessCheck(const DualFunctionalRep& phi, const FinitePoset& poset,
                                           long gridDenominator, const ExtReal& cap,
                                           std::uint64_t seed = Sampler::kDefaultSeed,
                                           std::size_t randomCount = 200,
                                           std::size_t maxCandidates = 1'000'000);

struct SupReport
{
    bool bounded = true;   // sup_i mu(f_i) <= phi(mu) on every sample
    bool equal = true;     // with equality on every sample
    std::optional<SimpleValuation> witness;
};

/// Compares sup_i mu(f_i) with phi(mu) on the Dirac valuations and `randomCount` random ones.
SupReport lemma2SupCheck(const DualFunctionalRep& phi, const FinitePoset& poset,
                         const std::vector<LSCFun>& family,
                         std::uint64_t seed = Sampler::kDefaultSeed, std::size_t randomCount = 200);

}   // namespace conedual
