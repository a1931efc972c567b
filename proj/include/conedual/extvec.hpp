#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "conedual/extreal.hpp"

namespace conedual {

/// A point of the extended orthant, or a coefficient vector on it.
class ExtVec
{
    public:
        ExtVec() = default;
        explicit ExtVec(std::size_t dim) : entries_(dim) {}
        explicit ExtVec(std::vector<ExtReal> entries) : entries_(std::move(entries)) {}
        ExtVec(std::initializer_list<ExtReal> entries) : entries_(entries) {}

        std::size_t dim() const noexcept { return entries_.size(); }
        const ExtReal& operator[](std::size_t i) const { return entries_[i]; }
        ExtReal& operator[](std::size_t i) { return entries_[i]; }
        const std::vector<ExtReal>& entries() const noexcept { return entries_; }

        auto begin() const { return entries_.begin(); }
        auto end() const { return entries_.end(); }

        bool isFinite() const;
        std::string toString() const;

        friend bool operator==(const ExtVec&, const ExtVec&) = default;

    private:
        std::vector<ExtReal> entries_;
};

/// Sum of a_i * b_i with extended arithmetic. Throws DimensionMismatch.
ExtReal pairing(const ExtVec& a, const ExtVec& b);

ExtVec operator+(const ExtVec& a, const ExtVec& b);
ExtVec operator*(const ExtReal& r, const ExtVec& v);

/// Coordinatewise a <= b.
bool coordinatewiseLeq(const ExtVec& a, const ExtVec& b);

void requireDim(const ExtVec& v, std::size_t dim, const char* what);

/// Converts an all-finite vector to rationals; throws InfiniteCoefficient otherwise.
std::vector<Rational> toRationals(const ExtVec& v, const char* what);
ExtVec fromRationals(const std::vector<Rational>& values);

std::ostream& operator<<(std::ostream& os, const ExtVec& v);

}   // namespace conedual
