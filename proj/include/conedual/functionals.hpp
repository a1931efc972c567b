#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "conedual/extvec.hpp"

namespace conedual {

/// y -> sum_i r_i y_i.
struct LinFun
{
    ExtVec coeffs;

    std::size_t dim() const { return coeffs.dim(); }
    friend bool operator==(const LinFun&, const LinFun&) = default;
};

/// Pointwise maximum of finitely many linear functionals (sublinear).
struct SublinFun
{
    std::vector<LinFun> branches;
};

/// Pointwise minimum of finitely many linear functionals (superlinear).
struct SuperlinFun
{
    std::vector<LinFun> branches;
};

using Functional = std::variant<LinFun, SublinFun, SuperlinFun>;

/**
 * A union of basic weak upper opens U_F = {y | <x,y> > 1 for all x in F},
 * one per block F.
 */
struct OpenSetRep
{
    std::vector<std::vector<LinFun>> blocks;
};

std::size_t dim(const Functional& f);

ExtReal eval(const LinFun& f, const ExtVec& y);
ExtReal eval(const SublinFun& f, const ExtVec& y);
ExtReal eval(const SuperlinFun& f, const ExtVec& y);
ExtReal eval(const Functional& f, const ExtVec& y);

/// y in U_f = {f > 1}.
bool memberU(const Functional& f, const ExtVec& y);
/// y in A_f = {f <= 1}.
bool memberA(const Functional& f, const ExtVec& y);

bool memberU(const OpenSetRep& u, const ExtVec& y);

/**
 * Minkowski functional sup{r > 0 | y in r U}. For a union of basic opens
 * this is the maximum over blocks of the minimum pairing in the block.
 */
ExtReal minkowski(const OpenSetRep& u, const ExtVec& y);

struct Domination
{
    bool dominated = false;
    /// Convex weights on the branches with f <= sum_k lambda_k h_k coordinatewise.
    std::optional<std::vector<Rational>> lambda;
};

/**
 * Decides f(y) <= max_k h_k(y) on the whole orthant by searching for a
 * convex combination of the branches dominating f coordinatewise.
 * Finite coefficients only.
 */
Domination dominatedByMax(const LinFun& f, const SublinFun& phi);

struct Margin
{
    /// max over the simplex of min_{g,h} (g - h).y; positive iff min g > max h somewhere.
    Rational value;
    ExtVec point;
};

/// Largest amount by which every lower functional exceeds every upper one on the simplex.
Margin simplexMargin(const std::vector<LinFun>& lower, const std::vector<LinFun>& upper);

/// Checks f <= sum_k lambda_k h_k coordinatewise without solving anything.
bool verifyDomination(const LinFun& f, const SublinFun& phi, const std::vector<Rational>& lambda);

/// First generator x with <x,y> > <x,y'>, if any.
std::optional<std::size_t> specOrderViolation(const ExtVec& y, const ExtVec& yPrime,
                                              const std::vector<LinFun>& coneGenerators);

/// Specialisation order of the weak upper topology generated by the cone.
bool specLeq(const ExtVec& y, const ExtVec& yPrime, const std::vector<LinFun>& coneGenerators);

struct LeqDecision
{
    bool holds = false;
    /// False when `holds` only means no violation was found among the samples.
    bool exact = false;
    std::optional<ExtVec> witness;
};

/**
 * Pointwise order phi <= psi. Exact for linear and max-of-linear reps with
 * finite coefficients; otherwise a seeded search over a small grid and
 * random points that refutes with a witness or reports no violation found.
 */
LeqDecision leqFunctional(const Functional& phi, const Functional& psi,
                          std::size_t sampleBudget = 2000, std::uint64_t seed = 20100531);

}   // namespace conedual
