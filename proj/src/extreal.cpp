#include "conedual/extreal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "conedual/errors.hpp"

namespace conedual {

namespace {

bool allDigits(std::string_view text)
{
    return !text.empty()
        && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}   // namespace

ExtReal::ExtReal(long value) : value_(value)
{
    if (value < 0)
        throw std::invalid_argument("ExtReal: negative value");
}

ExtReal::ExtReal(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("ExtReal: zero denominator");
    if (numerator < 0 || denominator < 0)
        throw std::invalid_argument("ExtReal: negative value");
    value_ = Rational(Integer(numerator), Integer(denominator));
}

ExtReal::ExtReal(const Rational& value) : value_(value)
{
    if (value_ < 0)
        throw std::invalid_argument("ExtReal: negative value");
}

ExtReal ExtReal::infinity()
{
    ExtReal r;
    r.infinite_ = true;
    return r;
}

ExtReal ExtReal::parse(std::string_view text)
{
    if (text == "inf")
        return infinity();
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                  : text.substr(slash + 1);
    if (!allDigits(num) || !allDigits(den))
        throw ParseError("not an extended nonnegative real: '" + std::string(text) + "'");
    const Integer p{std::string(num)};
    const Integer q{std::string(den)};
    if (q == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return ExtReal(Rational(p, q));
}

const Rational& ExtReal::rational() const
{
    if (infinite_)
        throw std::logic_error("ExtReal::rational() called on infinity");
    return value_;
}

Integer ExtReal::numerator() const { return boost::multiprecision::numerator(rational()); }

Integer ExtReal::denominator() const { return boost::multiprecision::denominator(rational()); }

std::string ExtReal::toString() const
{
    if (infinite_)
        return "inf";
    const Integer q = boost::multiprecision::denominator(value_);
    const Integer p = boost::multiprecision::numerator(value_);
    if (q == 1)
        return p.str();
    return p.str() + "/" + q.str();
}

bool operator==(const ExtReal& a, const ExtReal& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b)
{
    if (a.infinite_ || b.infinite_)
        return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    if (a.value_ < b.value_)
        return std::strong_ordering::less;
    if (b.value_ < a.value_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b)
{
    if (a.infinite_ || b.infinite_)
        return ExtReal::infinity();
    ExtReal r;
    r.value_ = a.value_ + b.value_;
    return r;
}

ExtReal operator*(const ExtReal& a, const ExtReal& b)
{
    if (a.isZero() || b.isZero())
        return ExtReal();
    if (a.infinite_ || b.infinite_)
        return ExtReal::infinity();
    ExtReal r;
    r.value_ = a.value_ * b.value_;
    return r;
}

ExtReal& ExtReal::operator+=(const ExtReal& other)
{
    if (other.infinite_)
        infinite_ = true;
    else if (!infinite_)
        value_ += other.value_;
    return *this;
}

ExtReal& ExtReal::operator*=(const ExtReal& other)
{
    *this = *this * other;
    return *this;
}

std::size_t ExtReal::hash() const
{
    if (infinite_)
        return static_cast<std::size_t>(-1);
    return std::hash<std::string>{}(value_.str());
}

ExtReal subPartial(const ExtReal& a, const ExtReal& b)
{
    if (b.isInfinite())
        throw UndefinedDifference(a.toString() + " - inf is undefined");
    if (a < b)
        throw UndefinedDifference(a.toString() + " - " + b.toString() + " would be negative");
    if (a.isInfinite())
        return a;
    return ExtReal(a.rational() - b.rational());
}

ExtReal min(std::span<const ExtReal> values)
{
    if (values.empty())
        throw EmptyList("min of an empty list");
    return *std::min_element(values.begin(), values.end());
}

ExtReal max(std::span<const ExtReal> values)
{
    if (values.empty())
        throw EmptyList("max of an empty list");
    return *std::max_element(values.begin(), values.end());
}

std::ostream& operator<<(std::ostream& os, const ExtReal& value) { return os << value.toString(); }

}   // namespace conedual
