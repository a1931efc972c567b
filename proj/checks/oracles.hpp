#pragma once

// Brute-force reference procedures. None of them calls the LP solver; they
// exist to cross-check the exact algorithms on small instances.

#include <optional>
#include <vector>

#include "conedual/extvec.hpp"
#include "conedual/finspace.hpp"
#include "conedual/functionals.hpp"

namespace conedual::oracle {

/**
 * Exhaustive search over convex combinations sum_p (k_p / denominator) p of
 * the generators for a point in V. Returns the integer numerators k_p of
 * the first hit. Entries must be finite rationals or infinity.
 */
std::optional<std::vector<long>> dyadicHullPointInV(const std::vector<ExtVec>& generators, long denominator = 32);

/// All points of {0, 1/d, ..., top/d}^dim, in lexicographic order.
std::vector<ExtVec> dyadicGrid(std::size_t dim, long denominator, long top);

/// First grid point y with f(y) > phi(y), if any.
std::optional<ExtVec> gridViolation(const Functional& f, const Functional& phi, long denominator, long top);

/**
 * Checks a claimed Minkowski value v of the open set U at y against the
 * definition sup{r > 0 | y in rU} on the scan r = k / denominator,
 * k = 1..limit: every scanned r < v must satisfy y in rU and every
 * scanned r >= v must not. Also requires y not in rU for r = v itself when
 * v is a positive finite value.
 */
bool minkowskiScanAgrees(const OpenSetRep& u, const ExtVec& y, const ExtReal& claimed,
                         long denominator, long limit);

/// Lower semicontinuity via open preimages: {f > r} is an up-set for every value r of f.
bool lscByPreimages(std::span<const ExtReal> values, const FinitePoset& poset);

/// A point r*w (r > 0 finite) in U_phi but not in U_psi, given phi(w) > psi(w).
ExtVec separatingScale(const Functional& phi, const Functional& psi, const ExtVec& w);

}   // namespace conedual::oracle
