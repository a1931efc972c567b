#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace conedual::oracle {

std::optional<std::vector<long>> dyadicHullPointInV(const std::vector<ExtVec>& generators, long denominator)
{
    if (generators.empty())
        return std::nullopt;
    const std::size_t n = generators.front().dim();
    const std::size_t g = generators.size();

    // Scale every finite entry to an integer over a common denominator.
    Integer common = 1;
    for (const auto& p : generators)
        for (const auto& r : p)
            if (r.isFinite())
                common = boost::multiprecision::lcm(common, r.denominator());
    if (common > (Integer(1) << 24))
        throw std::range_error("dyadic oracle: common denominator too large");
    const long scale = common.convert_to<long>();

    std::vector<std::vector<long>> num(g, std::vector<long>(n, 0));
    std::vector<std::vector<bool>> inf(g, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < g; ++p)
        for (std::size_t i = 0; i < n; ++i) {
            const ExtReal& r = generators[p][i];
            if (r.isInfinite()) {
                inf[p][i] = true;
                continue;
            }
            const Integer v = r.numerator() * (common / r.denominator());
            if (v > (Integer(1) << 30))
                throw std::range_error("dyadic oracle: entry too large");
            num[p][i] = v.convert_to<long>();
        }
    const long threshold = denominator * scale;

    // Depth-first over k_0 + ... + k_{g-1} = denominator.
    std::vector<long> k(g, 0);
    std::vector<std::vector<long>> sum(g + 1, std::vector<long>(n, 0));
    std::vector<std::vector<int>> infCount(g + 1, std::vector<int>(n, 0));

    auto hit = [&]() {
        for (std::size_t i = 0; i < n; ++i)
            if (infCount[g][i] == 0 && sum[g][i] <= threshold)
                return false;
        return true;
    };

    auto descend = [&](auto&& self, std::size_t p, long remaining) -> bool {
        if (p + 1 == g) {
            k[p] = remaining;
            for (std::size_t i = 0; i < n; ++i) {
                sum[g][i] = sum[p][i] + remaining * num[p][i];
                infCount[g][i] = infCount[p][i] + ((remaining > 0 && inf[p][i]) ? 1 : 0);
            }
            return hit();
        }
        for (long c = 0; c <= remaining; ++c) {
            k[p] = c;
            for (std::size_t i = 0; i < n; ++i) {
                sum[p + 1][i] = sum[p][i] + c * num[p][i];
                infCount[p + 1][i] = infCount[p][i] + ((c > 0 && inf[p][i]) ? 1 : 0);
            }
            if (self(self, p + 1, remaining - c))
                return true;
        }
        return false;
    };

    if (descend(descend, 0, denominator))
        return k;
    return std::nullopt;
}

std::vector<ExtVec> dyadicGrid(std::size_t dim, long denominator, long top)
{
    std::vector<ExtVec> out;
    std::vector<long> digits(dim, 0);
    for (bool more = true; more;) {
        ExtVec y(dim);
        for (std::size_t i = 0; i < dim; ++i)
            y[i] = ExtReal(digits[i], denominator);
        out.push_back(std::move(y));
        more = false;
        for (std::size_t i = dim; i-- > 0;) {
            if (++digits[i] <= top) {
                more = true;
                break;
            }
            digits[i] = 0;
        }
    }
    return out;
}

std::optional<ExtVec> gridViolation(const Functional& f, const Functional& phi, long denominator, long top)
{
    for (const auto& y : dyadicGrid(dim(f), denominator, top))
        if (eval(f, y) > eval(phi, y))
            return y;
    return std::nullopt;
}

bool minkowskiScanAgrees(const OpenSetRep& u, const ExtVec& y, const ExtReal& claimed,
                         long denominator, long limit)
{
    for (long k = 1; k <= limit; ++k) {
        const ExtReal r(k, denominator);
        const ExtReal inverse(denominator, k);
        const bool member = memberU(u, inverse * y);
        if (member != (r < claimed))
            return false;
    }
    if (claimed.isFinite() && !claimed.isZero()) {
        const ExtReal inverse(Rational(1) / claimed.rational());
        if (memberU(u, inverse * y))
            return false;
    }
    return true;
}

bool lscByPreimages(std::span<const ExtReal> values, const FinitePoset& poset)
{
    for (const auto& threshold : values) {
        if (threshold.isInfinite())
            continue;
        std::uint64_t mask = 0;
        for (std::size_t x = 0; x < values.size(); ++x)
            if (values[x] > threshold)
                mask |= std::uint64_t{1} << x;
        if (!poset.isUpSet(mask))
            return false;
    }
    return true;
}

ExtVec separatingScale(const Functional& phi, const Functional& psi, const ExtVec& w)
{
    const ExtReal a = eval(phi, w);
    const ExtReal b = eval(psi, w);
    if (!(a > b))
        throw std::invalid_argument("separatingScale needs phi(w) > psi(w)");
    Rational r;
    if (b.isZero())
        r = a.isInfinite() ? Rational(1) : Rational(2) / a.rational();
    else if (a.isInfinite())
        r = Rational(1) / b.rational();
    else
        r = Rational(2) / (a.rational() + b.rational());
    return ExtReal(r) * w;
}

}   // namespace conedual::oracle
