#pragma once

#include <string>

#include <json.hpp>

#include "conedual/convex_sep.hpp"
#include "conedual/errors.hpp"
#include "conedual/functionals.hpp"
#include "conedual/interpolate.hpp"
#include "conedual/valuations.hpp"

namespace conedual::io {

using nlohmann::json;

/// Input that does not match the expected shape; `path` is a JSON pointer.
class SchemaError : public Error
{
    public:
        SchemaError(std::string path, std::string expected)
            : Error("schema", "at '" + path + "': expected " + expected),
              path_(std::move(path)), expected_(std::move(expected)) {}

        const std::string& path() const noexcept { return path_; }
        const std::string& expected() const noexcept { return expected_; }

    private:
        std::string path_;
        std::string expected_;
};

const json& field(const json& j, const std::string& key, const std::string& path);

ExtReal parseExtReal(const json& j, const std::string& path);
ExtVec parseExtVec(const json& j, const std::string& path);
std::vector<ExtVec> parseExtVecList(const json& j, const std::string& path);
/// A bare coefficient array or {"kind": "lin", "coeffs": [...]}.
LinFun parseLinFun(const json& j, const std::string& path);
std::vector<LinFun> parseLinFunList(const json& j, const std::string& path);
/// {"kind": "lin", "coeffs": [...]} or {"kind": "max" | "min", "branches": [...]}.
Functional parseFunctional(const json& j, const std::string& path);
SublinFun parseSublin(const json& j, const std::string& path);
OpenSetRep parseOpenSet(const json& j, const std::string& path);
/// {"size": n, "leq": [[i, j], ...]}; the relation is closed reflexively and transitively.
FinitePoset parsePoset(const json& j, const std::string& path);
std::vector<ExtReal> parseValueList(const json& j, const std::string& path);
std::size_t parseIndex(const json& j, const std::string& path);

json toJson(const ExtReal& r);
json toJson(const Rational& r);
json toJson(const ExtVec& v);
json toJson(const std::vector<Rational>& v);
json toJson(const LinFun& f);
json toJson(const Functional& f);
json toJson(const SeparationOutcome& outcome);
json toJson(const FinitePoset& poset);

}   // namespace conedual::io
