#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conedual {

/**
 * Base class of every domain error raised by the library. `kind()` is a
 * stable snake_case tag that the command line front end reports verbatim.
 */
class Error : public std::runtime_error
{
    public:
        Error(std::string kind, const std::string& what)
            : std::runtime_error(what), kind_(std::move(kind)) {}

        const std::string& kind() const noexcept { return kind_; }

    private:
        std::string kind_;
};

class UndefinedDifference : public Error
{
    public:
        explicit UndefinedDifference(const std::string& what)
            : Error("undefined_difference", what) {}
};

class EmptyList : public Error
{
    public:
        explicit EmptyList(const std::string& what) : Error("empty_list", what) {}
};

class ParseError : public Error
{
    public:
        explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

class DimensionMismatch : public Error
{
    public:
        explicit DimensionMismatch(const std::string& what)
            : Error("dimension_mismatch", what) {}
};

class InfiniteCoefficient : public Error
{
    public:
        explicit InfiniteCoefficient(const std::string& what)
            : Error("infinite_coefficient", what) {}
};

class MalformedProblem : public Error
{
    public:
        explicit MalformedProblem(const std::string& what)
            : Error("malformed_problem", what) {}
};

class PosetMismatch : public Error
{
    public:
        explicit PosetMismatch(const std::string& what) : Error("poset_mismatch", what) {}
};

class TooLarge : public Error
{
    public:
        explicit TooLarge(const std::string& what) : Error("too_large", what) {}
};

class GridTooLarge : public Error
{
    public:
        explicit GridTooLarge(const std::string& what) : Error("grid_too_large", what) {}
};

class NotUpSet : public Error
{
    public:
        explicit NotUpSet(const std::string& what) : Error("not_up_set", what) {}
};

class NotAValuation : public Error
{
    public:
        explicit NotAValuation(const std::string& what) : Error("not_a_valuation", what) {}
};

/** Raised when a relation table fails one of the partial order axioms. */
class InvalidPoset : public Error
{
    public:
        InvalidPoset(std::string kind, const std::string& what, std::vector<int> witness)
            : Error(std::move(kind), what), witness_(std::move(witness)) {}

        /// Offending element (reflexivity), pair (antisymmetry) or triple (transitivity).
        const std::vector<int>& witness() const noexcept { return witness_; }

    private:
        std::vector<int> witness_;
};

/** A function on a finite poset that is not monotone, with a pair x <= y, f(x) > f(y). */
class NotLSC : public Error
{
    public:
        NotLSC(const std::string& what, int lower, int upper)
            : Error("not_lsc", what), lower_(lower), upper_(upper) {}

        int lower() const noexcept { return lower_; }
        int upper() const noexcept { return upper_; }

    private:
        int lower_;
        int upper_;
};

}   // namespace conedual
