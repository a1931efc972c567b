#include "conedual/extvec.hpp"

#include <algorithm>
#include <ostream>

#include "conedual/errors.hpp"

namespace conedual {

bool ExtVec::isFinite() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const ExtReal& r) { return r.isFinite(); });
}

std::string ExtVec::toString() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ", ";
        out += entries_[i].toString();
    }
    return out + ")";
}

void requireDim(const ExtVec& v, std::size_t dim, const char* what)
{
    if (v.dim() != dim)
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(v.dim())
                                + ", expected " + std::to_string(dim));
}

ExtReal pairing(const ExtVec& a, const ExtVec& b)
{
    requireDim(b, a.dim(), "pairing");
    ExtReal sum;
    for (std::size_t i = 0; i < a.dim(); ++i)
        sum += a[i] * b[i];
    return sum;
}

ExtVec operator+(const ExtVec& a, const ExtVec& b)
{
    requireDim(b, a.dim(), "vector sum");
    ExtVec out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

ExtVec operator*(const ExtReal& r, const ExtVec& v)
{
    ExtVec out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out[i] = r * v[i];
    return out;
}

bool coordinatewiseLeq(const ExtVec& a, const ExtVec& b)
{
    requireDim(b, a.dim(), "coordinatewise comparison");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (b[i] < a[i])
            return false;
    return true;
}

std::vector<Rational> toRationals(const ExtVec& v, const char* what)
{
    std::vector<Rational> out;
    out.reserve(v.dim());
    for (const auto& r : v) {
        if (r.isInfinite())
            throw InfiniteCoefficient(std::string(what) + ": infinite coefficient not supported");
        out.push_back(r.rational());
    }
    return out;
}

ExtVec fromRationals(const std::vector<Rational>& values)
{
    ExtVec out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = ExtReal(values[i]);
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExtVec& v) { return os << v.toString(); }

}   // namespace conedual
