#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace conedual {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

/**
 * An exact element of the extended nonnegative reals: a nonnegative rational
 * in lowest terms, or +infinity.
 *
 * Arithmetic follows the usual cone conventions: infinity absorbs addition,
 * r * infinity = infinity for r > 0 and 0 * infinity = 0.
 */
class ExtReal
{
    public:
        ExtReal() = default;
        ExtReal(long value);                    // NOLINT: integers convert implicitly
        ExtReal(long numerator, long denominator);
        explicit ExtReal(const Rational& value);

        static ExtReal infinity();
        static ExtReal parse(std::string_view text);

        bool isInfinite() const noexcept { return infinite_; }
        bool isFinite() const noexcept { return !infinite_; }
        bool isZero() const noexcept { return !infinite_ && value_ == 0; }

        /// Underlying rational; throws std::logic_error for infinity.
        const Rational& rational() const;
        Integer numerator() const;
        Integer denominator() const;

        /// "p/q", "p" for integers, "inf".
        std::string toString() const;

        friend bool operator==(const ExtReal& a, const ExtReal& b);
        friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

        friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
        friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
        ExtReal& operator+=(const ExtReal& other);
        ExtReal& operator*=(const ExtReal& other);

        std::size_t hash() const;

    private:
        Rational value_{0};
        bool infinite_ = false;
};

/// a - b, defined when b is finite and b <= a. Throws UndefinedDifference otherwise.
ExtReal subPartial(const ExtReal& a, const ExtReal& b);

inline bool leq(const ExtReal& a, const ExtReal& b) { return a <= b; }

ExtReal min(std::span<const ExtReal> values);
ExtReal max(std::span<const ExtReal> values);

/// Least upper bound of a nonempty finite list (equal to max in a total order).
inline ExtReal sup(std::span<const ExtReal> values) { return max(values); }

std::ostream& operator<<(std::ostream& os, const ExtReal& value);

}   // namespace conedual

template <>
struct std::hash<conedual::ExtReal>
{
    std::size_t operator()(const conedual::ExtReal& value) const { return value.hash(); }
};
