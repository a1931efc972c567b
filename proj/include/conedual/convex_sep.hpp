#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "conedual/extvec.hpp"

namespace conedual {

/// Nonnegative rational weights summing to exactly one.
struct SeparationWeights
{
    std::vector<Rational> a;
};

struct WitnessTerm
{
    std::size_t generator;
    Rational coefficient;

    friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

struct Separated
{
    SeparationWeights weights;
};

/// A convex combination of generators that lies in the open corner V.
struct MeetsV
{
    std::vector<WitnessTerm> witness;
};

using SeparationOutcome = std::variant<Separated, MeetsV>;

/// True iff every coordinate is strictly greater than one.
bool inV(const ExtVec& x);

/**
 * Separates the convex hull of `generators` from the corner
 * V = {y | y_i > 1 for all i}: either weights a on the simplex with
 * sum_i a_i p_i <= 1 for every generator p, or an explicit convex
 * combination of generators lying in V.
 *
 * Coordinates where some generator is infinite are forced to weight zero;
 * the remaining weights come from an exact feasibility LP, and on
 * infeasibility the witness is read off the Farkas certificate.
 */
SeparationOutcome separate(const std::vector<ExtVec>& generators, std::size_t dim);

bool hullDisjointFromV(const std::vector<ExtVec>& generators, std::size_t dim);

/// The point sum_k c_k * generators[g_k] described by a witness.
ExtVec combine(const std::vector<ExtVec>& generators, const std::vector<WitnessTerm>& witness);

// Certificate checkers. They do not call the LP solver.
bool verifySeparator(const std::vector<ExtVec>& generators, const SeparationWeights& weights);
bool verifyWitness(const std::vector<ExtVec>& generators, const std::vector<WitnessTerm>& witness);

}   // namespace conedual
