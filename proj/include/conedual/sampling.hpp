#pragma once

#include <cstdint>
#include <random>

#include "conedual/extvec.hpp"

namespace conedual {

/// Seeded source of small exact values. Same seed, same sequence, on every platform.
class Sampler
{
    public:
        static constexpr std::uint64_t kDefaultSeed = 20100531;

        explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

        /// Uniform integer in [lo, hi].
        long uniform(long lo, long hi);
        /// True with probability num/den.
        bool chance(long num, long den);

        /// p/q with 0 <= p <= maxNumerator and 1 <= q <= maxDenominator.
        Rational rational(long maxNumerator, long maxDenominator);
        /// Like rational(), but infinite with probability infNum/infDen.
        ExtReal extReal(long maxNumerator, long maxDenominator, long infNum, long infDen);

        ExtVec point(std::size_t dim, long maxNumerator, long maxDenominator, long infNum, long infDen);
        ExtVec finitePoint(std::size_t dim, long maxNumerator, long maxDenominator);

        std::mt19937_64& engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
};

}   // namespace conedual
