#include "conedual/sampling.hpp"

namespace conedual {

long Sampler::uniform(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

bool Sampler::chance(long num, long den) { return uniform(0, den - 1) < num; }

Rational Sampler::rational(long maxNumerator, long maxDenominator)
{
    const long q = uniform(1, maxDenominator);
    const long p = uniform(0, maxNumerator);
    return Rational(p, q);
}

ExtReal Sampler::extReal(long maxNumerator, long maxDenominator, long infNum, long infDen)
{
    if (infNum > 0 && chance(infNum, infDen))
        return ExtReal::infinity();
    return ExtReal(rational(maxNumerator, maxDenominator));
}

ExtVec Sampler::point(std::size_t dim, long maxNumerator, long maxDenominator, long infNum, long infDen)
{
    ExtVec v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = extReal(maxNumerator, maxDenominator, infNum, infDen);
    return v;
}

ExtVec Sampler::finitePoint(std::size_t dim, long maxNumerator, long maxDenominator)
{
    return point(dim, maxNumerator, maxDenominator, 0, 1);
}

}   // namespace conedual
