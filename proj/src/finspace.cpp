#include "conedual/finspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "conedual/errors.hpp"

namespace conedual {

namespace {

void requireSize(std::size_t size)
{
    if (size == 0 || size > FinitePoset::kMaxSize)
        throw TooLarge("poset size must be in 1.." + std::to_string(FinitePoset::kMaxSize));
}

void requireSamePoset(const LSCFun& f, const LSCFun& g)
{
    if (!(f.poset() == g.poset()))
        throw PosetMismatch("functions live on different posets");
}

std::string pairText(std::size_t x, std::size_t y)
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}   // namespace

FinitePoset FinitePoset::fromTable(const std::vector<std::vector<bool>>& table)
{
    const std::size_t n = table.size();
    requireSize(n);
    for (const auto& row : table)
        if (row.size() != n)
            throw ParseError("relation table is not square");

    for (std::size_t x = 0; x < n; ++x)
        if (!table[x][x])
            throw InvalidPoset("not_reflexive", "element " + std::to_string(x) + " is not below itself",
                               {static_cast<int>(x)});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (table[x][y] && table[y][x])
                throw InvalidPoset("not_antisymmetric", "distinct elements " + pairText(x, y)
                                       + " are below each other",
                                   {static_cast<int>(x), static_cast<int>(y)});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n && table[x][y]; ++z)
                if (table[y][z] && !table[x][z])
                    throw InvalidPoset("not_transitive", std::to_string(x) + "<=" + std::to_string(y) + "<="
                                           + std::to_string(z) + " but not " + std::to_string(x) + "<="
                                           + std::to_string(z),
                                       {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});

    std::vector<std::uint64_t> up(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (table[x][y])
                up[x] |= std::uint64_t{1} << y;
    return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::fromPairs(std::size_t size, const std::vector<std::pair<int, int>>& pairs)
{
    requireSize(size);
    std::vector<std::vector<bool>> table(size, std::vector<bool>(size, false));
    for (std::size_t x = 0; x < size; ++x)
        table[x][x] = true;
    for (const auto& [x, y] : pairs) {
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= size || static_cast<std::size_t>(y) >= size)
            throw ParseError("pair " + pairText(x, y) + " out of range");
        table[x][y] = true;
    }
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t x = 0; x < size; ++x)
            for (std::size_t y = 0; y < size; ++y)
                if (table[x][k] && table[k][y])
                    table[x][y] = true;
    return fromTable(table);
}

FinitePoset FinitePoset::chain(std::size_t size)
{
    std::vector<std::vector<bool>> table(size, std::vector<bool>(size, false));
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = x; y < size; ++y)
            table[x][y] = true;
    return fromTable(table);
}

FinitePoset FinitePoset::antichain(std::size_t size)
{
    std::vector<std::vector<bool>> table(size, std::vector<bool>(size, false));
    for (std::size_t x = 0; x < size; ++x)
        table[x][x] = true;
    return fromTable(table);
}

std::uint64_t FinitePoset::fullMask() const
{
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

bool FinitePoset::isUpSet(std::uint64_t mask) const
{
    if ((mask & ~fullMask()) != 0)
        return false;
    for (std::size_t x = 0; x < size(); ++x)
        if (((mask >> x) & 1U) && (up_[x] & ~mask) != 0)
            return false;
    return true;
}

std::vector<std::pair<int, int>> FinitePoset::strictPairs() const
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = 0; y < size(); ++y)
            if (x != y && leq(x, y))
                out.emplace_back(static_cast<int>(x), static_cast<int>(y));
    return out;
}

bool FinitePoset::isTopologicallySorted() const
{
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = 0; y < x; ++y)
            if (leq(x, y))
                return false;
    return true;
}

std::vector<int> OpenSet::elements(std::size_t size) const
{
    std::vector<int> out;
    for (std::size_t x = 0; x < size; ++x)
        if (contains(x))
            out.push_back(static_cast<int>(x));
    return out;
}

OpenSet makeOpen(const FinitePoset& poset, std::uint64_t mask)
{
    if (!poset.isUpSet(mask))
        throw NotUpSet("set is not up-closed");
    return OpenSet{mask};
}

std::vector<OpenSet> allOpens(const FinitePoset& poset, std::size_t maxSize)
{
    if (poset.size() > maxSize || poset.size() >= 63)
        throw TooLarge("open-set enumeration limited to " + std::to_string(maxSize) + " elements");
    std::vector<OpenSet> out;
    const std::uint64_t count = std::uint64_t{1} << poset.size();
    for (std::uint64_t mask = 0; mask < count; ++mask)
        if (poset.isUpSet(mask))
            out.push_back(OpenSet{mask});
    return out;
}

LscCheck isLsc(std::span<const ExtReal> values, const FinitePoset& poset)
{
    if (values.size() != poset.size())
        throw DimensionMismatch("function table does not cover the poset");
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (std::size_t y = 0; y < poset.size(); ++y)
            if (poset.leq(x, y) && values[x] > values[y])
                return {false, std::make_pair(static_cast<int>(x), static_cast<int>(y))};
    return {};
}

LSCFun::LSCFun(FinitePoset poset, std::vector<ExtReal> values)
    : poset_(std::move(poset)), values_(std::move(values))
{
    const LscCheck check = isLsc(values_, poset_);
    if (!check.lsc) {
        const auto [x, y] = *check.violation;
        throw NotLSC("not monotone: " + std::to_string(x) + " <= " + std::to_string(y) + " but "
                         + values_[x].toString() + " > " + values_[y].toString(),
                     x, y);
    }
}

LSCFun LSCFun::zero(const FinitePoset& poset)
{
    return LSCFun(poset, std::vector<ExtReal>(poset.size()));
}

LSCFun step(const FinitePoset& poset, const ExtReal& r, std::uint64_t mask)
{
    const OpenSet u = makeOpen(poset, mask);
    std::vector<ExtReal> values(poset.size());
    for (std::size_t x = 0; x < poset.size(); ++x)
        if (u.contains(x))
            values[x] = r;
    return LSCFun(poset, std::move(values));
}

std::vector<std::pair<ExtReal, OpenSet>> toSteps(const LSCFun& f)
{
    std::vector<ExtReal> levels;
    for (const auto& v : f.values())
        if (!v.isZero())
            levels.push_back(v);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<std::pair<ExtReal, OpenSet>> out;
    for (const auto& level : levels) {
        std::uint64_t mask = 0;
        for (std::size_t x = 0; x < f.size(); ++x)
            if (f(x) >= level)
                mask |= std::uint64_t{1} << x;
        out.emplace_back(level, makeOpen(f.poset(), mask));
    }
    return out;
}

LSCFun operator+(const LSCFun& f, const LSCFun& g)
{
    requireSamePoset(f, g);
    std::vector<ExtReal> values(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        values[x] = f(x) + g(x);
    return LSCFun(f.poset(), std::move(values));
}

LSCFun operator*(const ExtReal& r, const LSCFun& f)
{
    std::vector<ExtReal> values(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        values[x] = r * f(x);
    return LSCFun(f.poset(), std::move(values));
}

LSCFun sup(std::span<const LSCFun> family)
{
    if (family.empty())
        throw EmptyList("sup of an empty family");
    std::vector<ExtReal> values = family.front().values();
    for (const auto& f : family.subspan(1)) {
        requireSamePoset(family.front(), f);
        for (std::size_t x = 0; x < values.size(); ++x)
            values[x] = std::max(values[x], f(x));
    }
    return LSCFun(family.front().poset(), std::move(values));
}

LSCFun inf(std::span<const LSCFun> family)
{
    if (family.empty())
        throw EmptyList("inf of an empty family");
    std::vector<ExtReal> values = family.front().values();
    for (const auto& f : family.subspan(1)) {
        requireSamePoset(family.front(), f);
        for (std::size_t x = 0; x < values.size(); ++x)
            values[x] = std::min(values[x], f(x));
    }
    return LSCFun(family.front().poset(), std::move(values));
}

bool pointwiseLeq(const LSCFun& f, const LSCFun& g)
{
    requireSamePoset(f, g);
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f(x) > g(x))
            return false;
    return true;
}

std::vector<FinitePoset> posetsUpToIsomorphism(std::size_t size)
{
    requireSize(size);
    if (size > 6)
        throw TooLarge("isomorphism-class enumeration limited to 6 elements");

    // Strict relations contained in the numeric order, one bit per pair i < j.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<int>> slotOf(size, std::vector<int>(size, -1));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) {
            slotOf[i][j] = static_cast<int>(slots.size());
            slots.emplace_back(i, j);
        }
    auto has = [&](std::uint32_t code, std::size_t i, std::size_t j) {
        return i < j && ((code >> slotOf[i][j]) & 1U);
    };

    std::vector<std::size_t> perm(size);
    std::map<std::uint32_t, bool> classes;
    const std::uint32_t count = std::uint32_t{1} << slots.size();
    for (std::uint32_t code = 0; code < count; ++code) {
        bool transitive = true;
        for (std::size_t i = 0; i < size && transitive; ++i)
            for (std::size_t j = i + 1; j < size && transitive; ++j)
                for (std::size_t k = j + 1; k < size && transitive; ++k)
                    if (has(code, i, j) && has(code, j, k) && !has(code, i, k))
                        transitive = false;
        if (!transitive)
            continue;

        // Canonical code: least relabelling that keeps the order inside i < j.
        std::uint32_t best = code;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t image = 0;
            bool natural = true;
            for (std::size_t s = 0; s < slots.size() && natural; ++s) {
                if (!((code >> s) & 1U))
                    continue;
                const std::size_t a = perm[slots[s].first];
                const std::size_t b = perm[slots[s].second];
                if (a > b)
                    natural = false;
                else
                    image |= std::uint32_t{1} << slotOf[a][b];
            }
            if (natural)
                best = std::min(best, image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes[best] = true;
    }

    std::vector<FinitePoset> out;
    for (const auto& [code, unused] : classes) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((code >> s) & 1U)
                pairs.emplace_back(static_cast<int>(slots[s].first), static_cast<int>(slots[s].second));
        out.push_back(FinitePoset::fromPairs(size, pairs));
    }
    return out;
}

}   // namespace conedual
