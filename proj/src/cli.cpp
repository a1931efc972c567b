#include "conedual/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "conedual/json_io.hpp"
#include "suites.hpp"

namespace conedual::cli {

namespace {

using io::json;

struct Options
{
    std::string input;
    std::string output;
    std::uint64_t seed = Sampler::kDefaultSeed;
    std::string suite = "all";
    std::size_t maxSize = 12;
    bool verbose = false;
};

struct Outcome
{
    int code = 0;
    std::string text;
};

Outcome ok(const json& j) { return {0, j.dump()}; }

/// Error kinds reported with exit code 2; everything else is malformed input.
bool isDomainError(const std::string& kind)
{
    return kind == "meets_v" || kind == "not_lsc" || kind == "precondition_violated"
        || kind == "not_a_valuation" || kind == "undefined_difference";
}

std::vector<std::size_t> parseIndexList(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw io::SchemaError(path, "array of indices");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(io::parseIndex(j[i], path + "/" + std::to_string(i)));
    return out;
}

json elementList(const OpenSet& u, std::size_t size)
{
    json out = json::array();
    for (std::size_t x : u.elements(size))
        out.push_back(x);
    return out;
}

Outcome cmdSep(const json& in, const Options&)
{
    const std::size_t dim = io::parseIndex(io::field(in, "dim", ""), "/dim");
    const auto gens = io::parseExtVecList(io::field(in, "generators", ""), "/generators");
    const SeparationOutcome outcome = separate(gens, dim);
    if (const auto* meets = std::get_if<MeetsV>(&outcome)) {
        json witness = json::array();
        for (const auto& t : meets->witness)
            witness.push_back(json::array({t.generator, io::toJson(t.coefficient)}));
        return {2, json{{"error", "meets_v"}, {"witness", witness}}.dump()};
    }
    return ok(io::toJson(outcome));
}

Outcome cmdInterpolate(const json& in, const Options&)
{
    const auto gens = io::parseLinFunList(io::field(in, "c_gens", ""), "/c_gens");
    const json& clausesJson = io::field(in, "clauses", "");
    if (!clausesJson.is_array())
        throw io::SchemaError("/clauses", "array of index arrays");
    const SublinFun phi = io::parseSublin(io::field(in, "phi", ""), "/phi");

    json witnesses = json::array();
    json certificates = json::array();
    for (std::size_t c = 0; c < clausesJson.size(); ++c) {
        const std::string path = "/clauses/" + std::to_string(c);
        const auto indices = parseIndexList(clausesJson[c], path);
        std::vector<LinFun> clause;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i] >= gens.size())
                throw io::SchemaError(path + "/" + std::to_string(i),
                                      "index below " + std::to_string(gens.size()));
            clause.push_back(gens[indices[i]]);
        }
        try {
            const InterpolationResult r = interpolate(clause, phi);
            witnesses.push_back(json{{"x", io::toJson(combination(clause, r.a).coeffs)}, {"a", io::toJson(r.a)}});
            certificates.push_back(json{{"lambda", io::toJson(r.lambda)}});
        } catch (const PreconditionViolated& e) {
            return {2, json{{"error", e.kind()}, {"clause", c}, {"witness", io::toJson(e.point())}}.dump()};
        }
    }
    return ok(json{{"witnesses", witnesses}, {"certificates", certificates}});
}

Outcome cmdDominates(const json& in, const Options& opt)
{
    const Functional f = io::parseFunctional(io::field(in, "f", ""), "/f");
    const Functional phi = io::parseFunctional(io::field(in, "phi", ""), "/phi");
    const LeqDecision d = leqFunctional(f, phi, 2000, opt.seed);
    json out{{"holds", d.holds}, {"exact", d.exact}};
    if (d.witness)
        out["witness"] = io::toJson(*d.witness);
    const auto* lin = std::get_if<LinFun>(&f);
    const auto* max = std::get_if<SublinFun>(&phi);
    if (d.holds && lin && max && lin->coeffs.isFinite()
        && std::all_of(max->branches.begin(), max->branches.end(),
                       [](const LinFun& h) { return h.coeffs.isFinite(); })) {
        const Domination dom = dominatedByMax(*lin, *max);
        if (dom.lambda)
            out["lambda"] = io::toJson(*dom.lambda);
    }
    return ok(out);
}

Outcome cmdMinkowski(const json& in, const Options&)
{
    const OpenSetRep u = io::parseOpenSet(io::field(in, "open", ""), "/open");
    const auto points = io::parseExtVecList(io::field(in, "points", ""), "/points");
    json values = json::array();
    for (const auto& y : points)
        values.push_back(io::toJson(minkowski(u, y)));
    return ok(json{{"values", values}});
}

Outcome cmdSpecOrder(const json& in, const Options&)
{
    const auto gens = io::parseLinFunList(io::field(in, "c_gens", ""), "/c_gens");
    const ExtVec y = io::parseExtVec(io::field(in, "y", ""), "/y");
    const ExtVec yPrime = io::parseExtVec(io::field(in, "y_prime", ""), "/y_prime");
    const auto violation = specOrderViolation(y, yPrime, gens);
    json out{{"leq", !violation.has_value()}};
    if (violation) {
        const LinFun& x = gens[*violation];
        out["violation"] = json{{"generator", *violation},
                                {"lhs", io::toJson(eval(x, y))},
                                {"rhs", io::toJson(eval(x, yPrime))}};
    }
    return ok(out);
}

Outcome cmdSsRecover(const json& in, const Options&)
{
    const FinitePoset poset = io::parsePoset(io::field(in, "poset", ""), "/poset");
    const json& phiJson = io::field(in, "phi", "");
    const DualFunctionalRep phi{io::parseValueList(io::field(phiJson, "coeffs", "/phi"), "/phi/coeffs")};
    if (phi.coeffs.size() != poset.size())
        throw io::SchemaError("/phi/coeffs", std::to_string(poset.size()) + " coefficients");
    try {
        const LSCFun f = ssRecover(phi, poset);
        return ok(json{{"f", io::toJson(ExtVec(f.values()))}});
    } catch (const NotLSC& e) {
        return {2, json{{"error", e.kind()}, {"witness", json::array({e.lower(), e.upper()})}}.dump()};
    }
}

Outcome cmdMobius(const json& in, const Options& opt)
{
    const FinitePoset poset = io::parsePoset(io::field(in, "poset", ""), "/poset");
    if (in.contains("valuation")) {
        const json& v = in["valuation"];
        SimpleValuation mu{poset, io::parseValueList(io::field(v, "weights", "/valuation"), "/valuation/weights")};
        if (mu.weights.size() != poset.size())
            throw io::SchemaError("/valuation/weights", std::to_string(poset.size()) + " weights");
        const ValuationOnOpens nu = toOpens(mu, opt.maxSize);
        json opens = json::array();
        for (const auto& [u, value] : nu.table)
            opens.push_back(json{{"set", elementList(u, poset.size())}, {"value", io::toJson(value)}});
        return ok(json{{"opens", opens}});
    }
    const json& opensJson = io::field(in, "opens", "");
    if (!opensJson.is_array())
        throw io::SchemaError("/opens", "array of {\"set\", \"value\"}");
    ValuationOnOpens nu{poset, {}};
    for (std::size_t i = 0; i < opensJson.size(); ++i) {
        const std::string path = "/opens/" + std::to_string(i);
        std::uint64_t mask = 0;
        for (std::size_t x : parseIndexList(io::field(opensJson[i], "set", path), path + "/set")) {
            if (x >= poset.size())
                throw io::SchemaError(path + "/set", "elements below " + std::to_string(poset.size()));
            mask |= std::uint64_t{1} << x;
        }
        nu.table[makeOpen(poset, mask)] = io::parseExtReal(io::field(opensJson[i], "value", path), path + "/value");
    }
    return ok(json{{"weights", io::toJson(ExtVec(fromOpens(nu).weights))}});
}

Outcome cmdCheck(const Options& opt, std::ostream& err)
{
    std::vector<checks::SuiteReport> reports;
    if (opt.suite == "all")
        reports = checks::runAll(opt.seed);
    else
        reports.push_back(checks::runSuite(opt.suite, opt.seed));

    bool allOk = true;
    std::string text = "{\"suites\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        allOk = allOk && r.ok();
        text += (i ? "," : "") + r.serialize();
        if (opt.verbose)
            for (const auto& c : r.criteria) {
                err << (c.ok() ? "PASS " : "FAIL ") << r.suite << '/' << c.name << " (" << c.passed << " passed, "
                    << c.failed << " failed)\n";
                for (const auto& f : c.failures)
                    err << "    " << f << '\n';
            }
    }
    text += "],\"ok\":" + std::string(allOk ? "true" : "false") + "}";
    return {allOk ? 0 : 2, text};
}

}   // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact separation, interpolation and valuation duality on extended orthants", "conedual"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--input,-i", opt.input, "Input JSON file (default: stdin)");
    app.add_option("--output,-o", opt.output, "Output file (default: stdout)");
    app.add_option("--seed", opt.seed, "Seed for randomized steps");
    app.add_option("--suite", opt.suite, "Suite for `check`: a suite name or all");
    app.add_option("--max-size", opt.maxSize, "Largest poset accepted when enumerating opens");
    app.add_flag("--verbose,-v", opt.verbose, "Per-criterion report on stderr");

    using Handler = std::function<Outcome(const json&, const Options&)>;
    const std::vector<std::pair<std::string, Handler>> handlers{
        {"sep", cmdSep},
        {"interpolate", cmdInterpolate},
        {"dominates", cmdDominates},
        {"minkowski", cmdMinkowski},
        {"spec-order", cmdSpecOrder},
        {"ss-recover", cmdSsRecover},
        {"mobius", cmdMobius},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, handler] : handlers)
        subs[name] = app.add_subcommand(name);
    subs["sep"]->description("Separate a generator hull from the corner V");
    subs["interpolate"]->description("Interpolating cone elements for clauses below phi");
    subs["dominates"]->description("Decide f <= phi pointwise");
    subs["minkowski"]->description("Minkowski functional of a union of basic opens");
    subs["spec-order"]->description("Specialisation order of the weak upper topology");
    subs["ss-recover"]->description("Representing function of a functional on valuations");
    subs["mobius"]->description("Convert between point weights and values on opens");
    CLI::App* check = app.add_subcommand("check", "Run the property suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Outcome result;
    try {
        if (check->parsed()) {
            result = cmdCheck(opt, err);
        } else {
            std::string name;
            for (const auto& [n, sub] : subs)
                if (sub->parsed())
                    name = n;
            json input;
            try {
                if (opt.input.empty() || opt.input == "-") {
                    input = json::parse(in);
                } else {
                    std::ifstream file(opt.input);
                    if (!file)
                        throw std::runtime_error("cannot open " + opt.input);
                    input = json::parse(file);
                }
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("invalid JSON: ") + e.what());
            }
            if (!input.is_object())
                throw io::SchemaError("", "object");
            for (const auto& [n, handler] : handlers)
                if (n == name)
                    result = handler(input, opt);
        }
    } catch (const io::SchemaError& e) {
        result = {1, json{{"error", e.kind()}, {"path", e.path()}, {"expected", e.expected()}}.dump()};
        err << e.what() << '\n';
    } catch (const Error& e) {
        result = {isDomainError(e.kind()) ? 2 : 1, json{{"error", e.kind()}, {"message", e.what()}}.dump()};
        err << e.what() << '\n';
    } catch (const std::exception& e) {
        result = {1, json{{"error", "malformed_input"}, {"message", e.what()}}.dump()};
        err << e.what() << '\n';
    }

    if (opt.output.empty() || opt.output == "-") {
        out << result.text << '\n';
    } else {
        std::ofstream file(opt.output);
        if (!file) {
            err << "cannot write " << opt.output << '\n';
            return 1;
        }
        file << result.text << '\n';
    }
    return result.code;
}

}   // namespace conedual::cli
