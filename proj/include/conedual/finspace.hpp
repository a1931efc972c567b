#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "conedual/extreal.hpp"

namespace conedual {

/**
 * A finite T0 space given by its specialisation order on the elements
 * 0..size-1. Open sets are exactly the up-sets (Alexandrov topology, which
 * coincides with the Scott topology on a finite poset).
 */
class FinitePoset
{
    public:
        static constexpr std::size_t kMaxSize = 64;

        /// Validates a square relation table; throws InvalidPoset with a witness.
        static FinitePoset fromTable(const std::vector<std::vector<bool>>& table);
        /// Reflexive-transitive closure of the given pairs, then validation.
        static FinitePoset fromPairs(std::size_t size, const std::vector<std::pair<int, int>>& pairs);

        static FinitePoset chain(std::size_t size);
        static FinitePoset antichain(std::size_t size);

        std::size_t size() const noexcept { return up_.size(); }
        bool leq(std::size_t x, std::size_t y) const { return (up_[x] >> y) & 1U; }
        /// Mask of the principal up-set of x.
        std::uint64_t upMask(std::size_t x) const { return up_[x]; }
        std::uint64_t fullMask() const;
        bool isUpSet(std::uint64_t mask) const;

        /// Pairs x < y (strict), in lexicographic order.
        std::vector<std::pair<int, int>> strictPairs() const;
        /// True when x <= y implies x <= y numerically.
        bool isTopologicallySorted() const;

        friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

    private:
        explicit FinitePoset(std::vector<std::uint64_t> up) : up_(std::move(up)) {}

        std::vector<std::uint64_t> up_;
};

/// An up-closed subset, as a bitmask over the poset elements.
struct OpenSet
{
    std::uint64_t mask = 0;

    bool contains(std::size_t x) const { return (mask >> x) & 1U; }
    std::vector<int> elements(std::size_t size) const;

    friend auto operator<=>(const OpenSet&, const OpenSet&) = default;
};

OpenSet makeOpen(const FinitePoset& poset, std::uint64_t mask);

/// Every open set, sorted by mask. Throws TooLarge above `maxSize` elements.
std::vector<OpenSet> allOpens(const FinitePoset& poset, std::size_t maxSize = 12);

struct LscCheck
{
    bool lsc = true;
    /// A pair x <= y with f(x) > f(y).
    std::optional<std::pair<int, int>> violation;
};

LscCheck isLsc(std::span<const ExtReal> values, const FinitePoset& poset);

/// A monotone (equivalently lower semicontinuous) map into the extended reals.
class LSCFun
{
    public:
        /// Throws NotLSC with the violating pair when `values` is not monotone.
        LSCFun(FinitePoset poset, std::vector<ExtReal> values);

        static LSCFun zero(const FinitePoset& poset);

        const FinitePoset& poset() const noexcept { return poset_; }
        const std::vector<ExtReal>& values() const noexcept { return values_; }
        const ExtReal& operator()(std::size_t x) const { return values_[x]; }
        std::size_t size() const noexcept { return values_.size(); }

        friend bool operator==(const LSCFun&, const LSCFun&) = default;

    private:
        FinitePoset poset_;
        std::vector<ExtReal> values_;
};

/// r times the characteristic function of U. Throws NotUpSet.
LSCFun step(const FinitePoset& poset, const ExtReal& r, std::uint64_t mask);

/// Finitely many steps (r, U) whose pointwise supremum is f.
std::vector<std::pair<ExtReal, OpenSet>> toSteps(const LSCFun& f);

LSCFun operator+(const LSCFun& f, const LSCFun& g);
LSCFun operator*(const ExtReal& r, const LSCFun& f);
LSCFun sup(std::span<const LSCFun> family);
LSCFun inf(std::span<const LSCFun> family);

/// Pointwise f <= g. Throws PosetMismatch.
bool pointwiseLeq(const LSCFun& f, const LSCFun& g);

/**
 * One representative per isomorphism class of posets on `size` elements,
 * each labelled so that the order is contained in the numeric order, in a
 * fixed canonical sequence. Supports size <= 6.
 */
std::vector<FinitePoset> posetsUpToIsomorphism(std::size_t size);

}   // namespace conedual
