#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "conedual/cli.hpp"
#include "conedual/convex_sep.hpp"
#include "conedual/interpolate.hpp"
#include "conedual/json_io.hpp"

using namespace conedual;
using nlohmann::json;

namespace {

struct Run
{
    int code;
    std::string out;
    json body;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    json body;
    try {
        body = json::parse(out.str());
    } catch (const json::parse_error&) {
    }
    return {code, out.str(), body};
}

}   // namespace

TEST_SUITE("cli") {

TEST_CASE("sep")
{
    const Run meets = run({"sep"}, R"({"dim": 2, "generators": [["3", "0"], ["0", "3"]]})");
    CHECK(meets.code == 2);
    CHECK(meets.body == json::parse(R"({"error":"meets_v","witness":[[0,"1/2"],[1,"1/2"]]})"));

    const Run sep = run({"sep"}, R"({"dim": 2, "generators": [["2", "0"], ["0", "2"]]})");
    CHECK(sep.code == 0);
    CHECK(sep.body == json::parse(R"({"outcome":"separated","weights":["1/2","1/2"]})"));

    const Run inf = run({"sep"}, R"({"dim": 2, "generators": [["inf", 0]]})");
    CHECK(inf.code == 0);
    CHECK(inf.body["weights"] == json::parse(R"(["0","1"])"));
}

TEST_CASE("sep output re-verifies")
{
    const std::string input = R"({"dim": 3, "generators": [["1/2", "7/3", "0"], ["5/4", "0", "inf"], ["0", "2", "1"]]})";
    const Run r = run({"sep"}, input);
    const auto gens = io::parseExtVecList(json::parse(input)["generators"], "/generators");
    if (r.code == 0) {
        SeparationWeights w;
        for (const auto& a : r.body["weights"])
            w.a.push_back(ExtReal::parse(a.get<std::string>()).rational());
        CHECK(verifySeparator(gens, w));
    } else {
        REQUIRE(r.code == 2);
        std::vector<WitnessTerm> witness;
        for (const auto& t : r.body["witness"])
            witness.push_back({t[0].get<std::size_t>(), ExtReal::parse(t[1].get<std::string>()).rational()});
        CHECK(verifyWitness(gens, witness));
    }
}

TEST_CASE("interpolate")
{
    const std::string input = R"({"c_gens": [["2","0"], ["0","2"], ["1","1"]],
                                  "clauses": [[0, 1], [2]],
                                  "phi": {"kind": "max", "branches": [["1","1"]]}})";
    const Run r = run({"interpolate"}, input);
    REQUIRE(r.code == 0);
    CHECK(r.body["witnesses"][0]["x"] == json::parse(R"(["1","1"])"));
    CHECK(r.body["witnesses"][0]["a"] == json::parse(R"(["1/2","1/2"])"));
    CHECK(r.body["witnesses"][1]["x"] == json::parse(R"(["1","1"])"));
    CHECK(r.body["certificates"][0]["lambda"] == json::parse(R"(["1"])"));

    const Run bad = run({"interpolate"}, R"({"c_gens": [["3","3"]], "clauses": [[0]], "phi": {"kind": "max", "branches": [["1","1"]]}})");
    CHECK(bad.code == 2);
    CHECK(bad.body["error"] == "precondition_violated");
    const ExtVec y = io::parseExtVec(bad.body["witness"], "/witness");
    CHECK(eval(LinFun{{3, 3}}, y) > eval(LinFun{{1, 1}}, y));

    const Run range = run({"interpolate"}, R"({"c_gens": [["1"]], "clauses": [[3]], "phi": [["1"]]})");
    CHECK(range.code == 1);
}

TEST_CASE("dominates")
{
    const Run yes = run({"dominates"}, R"({"f": ["1","1"], "phi": {"kind": "max", "branches": [["2","0"],["0","2"]]}})");
    REQUIRE(yes.code == 0);
    CHECK(yes.body["holds"] == true);
    CHECK(yes.body["exact"] == true);
    CHECK(yes.body["lambda"] == json::parse(R"(["1/2","1/2"])"));

    const Run no = run({"dominates"}, R"({"f": ["2","1"], "phi": {"kind": "max", "branches": [["2","0"],["0","2"]]}})");
    REQUIRE(no.code == 0);
    CHECK(no.body["holds"] == false);
    const ExtVec w = io::parseExtVec(no.body["witness"], "/witness");
    CHECK(eval(LinFun{{2, 1}}, w) > eval(SublinFun{{LinFun{{2, 0}}, LinFun{{0, 2}}}}, w));
}

TEST_CASE("minkowski")
{
    const Run r = run({"minkowski"}, R"({"open": {"blocks": [[["2","0"],["0","2"]]]}, "points": [["1","4"], ["0","0"], ["inf","1"]]})");
    REQUIRE(r.code == 0);
    CHECK(r.body["values"] == json::parse(R"(["2","0","2"])"));
}

TEST_CASE("spec-order")
{
    const Run yes = run({"spec-order"}, R"({"c_gens": [["1","0"],["1","1"]], "y": ["1","1"], "y_prime": ["2","0"]})");
    CHECK(yes.code == 0);
    CHECK(yes.body["leq"] == true);
    const Run no = run({"spec-order"}, R"({"c_gens": [["1","0"],["1","1"]], "y": ["2","0"], "y_prime": ["1","1"]})");
    CHECK(no.body["leq"] == false);
    CHECK(no.body["violation"]["generator"] == 0);
}

TEST_CASE("ss-recover")
{
    const std::string chain = R"("poset": {"size": 2, "leq": [[0, 1]]})";
    const Run ok = run({"ss-recover"}, "{" + chain + R"(, "phi": {"coeffs": ["1", "2"]}})");
    CHECK(ok.code == 0);
    CHECK(ok.body == json::parse(R"({"f":["1","2"]})"));

    const Run bad = run({"ss-recover"}, "{" + chain + R"(, "phi": {"coeffs": ["2", "1"]}})");
    CHECK(bad.code == 2);
    CHECK(bad.body == json::parse(R"({"error":"not_lsc","witness":[0,1]})"));
}

TEST_CASE("mobius")
{
    const std::string chain = R"("poset": {"size": 2, "leq": [[0, 1]]})";
    const Run toOpens = run({"mobius"}, "{" + chain + R"(, "valuation": {"weights": ["3", "2"]}})");
    REQUIRE(toOpens.code == 0);
    CHECK(toOpens.body["opens"] == json::parse(R"([{"set":[],"value":"0"},{"set":[1],"value":"2"},{"set":[0,1],"value":"5"}])"));

    const Run back = run({"mobius"}, "{" + chain + R"(, "opens": [{"set": [], "value": "0"}, {"set": [1], "value": "2"}, {"set": [0, 1], "value": "5"}]})");
    REQUIRE(back.code == 0);
    CHECK(back.body["weights"] == json::parse(R"(["3","2"])"));

    const Run notOpen = run({"mobius"}, "{" + chain + R"(, "opens": [{"set": [0], "value": "1"}]})");
    CHECK(notOpen.code == 1);
    CHECK(notOpen.body["error"] == "not_up_set");

    const Run undefined = run({"mobius"}, "{" + chain + R"(, "opens": [{"set": [], "value": "0"}, {"set": [1], "value": "inf"}, {"set": [0, 1], "value": "inf"}]})");
    CHECK(undefined.code == 2);
    CHECK(undefined.body["error"] == "undefined_difference");
}

TEST_CASE("malformed input")
{
    const Run notJson = run({"sep"}, "{");
    CHECK(notJson.code == 1);
    CHECK(notJson.body["error"] == "parse_error");

    const Run missing = run({"sep"}, R"({"generators": []})");
    CHECK(missing.code == 1);
    CHECK(missing.body["error"] == "schema");
    CHECK(missing.body["path"] == "/dim");

    const Run negative = run({"sep"}, R"({"dim": 1, "generators": [["-1"]]})");
    CHECK(negative.code == 1);
    CHECK(negative.body["path"] == "/generators/0/0");

    const Run wrongDim = run({"sep"}, R"({"dim": 2, "generators": [["1"]]})");
    CHECK(wrongDim.code == 1);
    CHECK(wrongDim.body["error"] == "dimension_mismatch");

    const Run badPoset = run({"ss-recover"}, R"({"poset": {"size": 2, "leq": [[0,1],[1,0]]}, "phi": {"coeffs": ["1","1"]}})");
    CHECK(badPoset.code == 1);
    CHECK(badPoset.body["error"] == "not_antisymmetric");

    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"check", "--suite", "nonexistent"}).code == 1);
}

TEST_CASE("check and idempotence")
{
    const Run first = run({"check", "--suite", "extreal"});
    CHECK(first.code == 0);
    CHECK(first.body["ok"] == true);
    CHECK(first.body["suites"][0]["passed"].get<int>() > 0);
    const Run second = run({"check", "--suite", "extreal"});
    CHECK(first.out == second.out);

    const Run seeded = run({"check", "--suite", "regression", "--seed", "42"});
    CHECK(seeded.body["suites"][0]["seed"] == 42);

    const std::string input = R"({"f": {"kind": "min", "branches": [["1","1"]]}, "phi": ["1","inf"]})";
    CHECK(run({"dominates", "--seed", "9"}, input).out == run({"dominates", "--seed", "9"}, input).out);
}

}
