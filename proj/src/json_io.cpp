#include "conedual/json_io.hpp"

namespace conedual::io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }

const json& requireArray(const json& j, const std::string& path, const std::string& what)
{
    if (!j.is_array())
        throw SchemaError(path, what);
    return j;
}

}   // namespace

const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        throw SchemaError(path, "an object with key '" + key + "'");
    const auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(at(path, key), "a value for '" + key + "'");
    return *it;
}

ExtReal parseExtReal(const json& j, const std::string& path)
{
    if (j.is_number_unsigned())
        return ExtReal(static_cast<long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) {
        if (j.get<std::int64_t>() < 0)
            throw SchemaError(path, "a nonnegative value");
        return ExtReal(static_cast<long>(j.get<std::int64_t>()));
    }
    if (!j.is_string())
        throw SchemaError(path, "\"p/q\", \"p\" or \"inf\"");
    try {
        return ExtReal::parse(j.get<std::string>());
    } catch (const ParseError&) {
        throw SchemaError(path, "\"p/q\", \"p\" or \"inf\" with p >= 0, q > 0");
    }
}

ExtVec parseExtVec(const json& j, const std::string& path)
{
    requireArray(j, path, "an array of extended reals");
    ExtVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = parseExtReal(j[i], at(path, i));
    return v;
}

std::vector<ExtVec> parseExtVecList(const json& j, const std::string& path)
{
    requireArray(j, path, "an array of vectors");
    std::vector<ExtVec> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parseExtVec(j[i], at(path, i)));
    return out;
}

LinFun parseLinFun(const json& j, const std::string& path)
{
    if (j.is_array())
        return LinFun{parseExtVec(j, path)};
    const json& kind = field(j, "kind", path);
    if (kind != "lin")
        throw SchemaError(at(path, "kind"), "\"lin\"");
    return LinFun{parseExtVec(field(j, "coeffs", path), at(path, "coeffs"))};
}

std::vector<LinFun> parseLinFunList(const json& j, const std::string& path)
{
    requireArray(j, path, "an array of linear functionals");
    std::vector<LinFun> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parseLinFun(j[i], at(path, i)));
    return out;
}

Functional parseFunctional(const json& j, const std::string& path)
{
    if (j.is_array())
        return LinFun{parseExtVec(j, path)};
    const json& kind = field(j, "kind", path);
    if (kind == "lin")
        return LinFun{parseExtVec(field(j, "coeffs", path), at(path, "coeffs"))};
    if (kind != "max" && kind != "min")
        throw SchemaError(at(path, "kind"), "\"lin\", \"max\" or \"min\"");
    auto branches = parseLinFunList(field(j, "branches", path), at(path, "branches"));
    if (branches.empty())
        throw SchemaError(at(path, "branches"), "at least one branch");
    for (std::size_t i = 1; i < branches.size(); ++i)
        if (branches[i].dim() != branches.front().dim())
            throw SchemaError(at(at(path, "branches"), i), "branches of equal dimension");
    if (kind == "max")
        return SublinFun{std::move(branches)};
    return SuperlinFun{std::move(branches)};
}

SublinFun parseSublin(const json& j, const std::string& path)
{
    Functional f = parseFunctional(j, path);
    if (auto* lin = std::get_if<LinFun>(&f))
        return SublinFun{{std::move(*lin)}};
    if (auto* sub = std::get_if<SublinFun>(&f))
        return std::move(*sub);
    throw SchemaError(at(path, "kind"), "\"lin\" or \"max\"");
}

OpenSetRep parseOpenSet(const json& j, const std::string& path)
{
    const json& blocks = requireArray(field(j, "blocks", path), at(path, "blocks"), "an array of blocks");
    OpenSetRep rep;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto block = parseLinFunList(blocks[b], at(at(path, "blocks"), b));
        if (block.empty())
            throw SchemaError(at(at(path, "blocks"), b), "a nonempty block");
        rep.blocks.push_back(std::move(block));
    }
    if (rep.blocks.empty())
        throw SchemaError(at(path, "blocks"), "at least one block");
    return rep;
}

std::size_t parseIndex(const json& j, const std::string& path)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw SchemaError(path, "a nonnegative integer");
    return j.get<std::size_t>();
}

FinitePoset parsePoset(const json& j, const std::string& path)
{
    const std::size_t size = parseIndex(field(j, "size", path), at(path, "size"));
    if (size == 0 || size > FinitePoset::kMaxSize)
        throw SchemaError(at(path, "size"), "a size between 1 and 64");
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("leq")) {
        const json& leq = requireArray(j["leq"], at(path, "leq"), "an array of [i, j] pairs");
        for (std::size_t i = 0; i < leq.size(); ++i) {
            const std::string p = at(at(path, "leq"), i);
            if (!leq[i].is_array() || leq[i].size() != 2)
                throw SchemaError(p, "a pair [i, j]");
            const std::size_t a = parseIndex(leq[i][0], at(p, 0));
            const std::size_t b = parseIndex(leq[i][1], at(p, 1));
            if (a >= size || b >= size)
                throw SchemaError(p, "elements below " + std::to_string(size));
            pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return FinitePoset::fromPairs(size, pairs);
}

std::vector<ExtReal> parseValueList(const json& j, const std::string& path)
{
    return parseExtVec(j, path).entries();
}

json toJson(const ExtReal& r) { return r.toString(); }

json toJson(const Rational& r) { return ExtReal(r).toString(); }

json toJson(const ExtVec& v)
{
    json out = json::array();
    for (const auto& r : v)
        out.push_back(toJson(r));
    return out;
}

json toJson(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& r : v)
        out.push_back(toJson(r));
    return out;
}

json toJson(const LinFun& f) { return json{{"kind", "lin"}, {"coeffs", toJson(f.coeffs)}}; }

json toJson(const Functional& f)
{
    if (const auto* lin = std::get_if<LinFun>(&f))
        return toJson(*lin);
    const bool isMax = std::holds_alternative<SublinFun>(f);
    const auto& branches = isMax ? std::get<SublinFun>(f).branches : std::get<SuperlinFun>(f).branches;
    json list = json::array();
    for (const auto& b : branches)
        list.push_back(toJson(b.coeffs));
    return json{{"kind", isMax ? "max" : "min"}, {"branches", list}};
}

json toJson(const SeparationOutcome& outcome)
{
    if (const auto* sep = std::get_if<Separated>(&outcome))
        return json{{"outcome", "separated"}, {"weights", toJson(sep->weights.a)}};
    json witness = json::array();
    for (const auto& term : std::get<MeetsV>(outcome).witness)
        witness.push_back(json::array({term.generator, toJson(term.coefficient)}));
    return json{{"outcome", "meets_v"}, {"witness", witness}};
}

json toJson(const FinitePoset& poset)
{
    json leq = json::array();
    for (const auto& [x, y] : poset.strictPairs())
        leq.push_back(json::array({x, y}));
    return json{{"size", poset.size()}, {"leq", leq}};
}

}   // namespace conedual::io
