#include "coxring/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using Json = nlohmann::json;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    Outcome o;
    o.status = coxring::cli::run(args, in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

const std::string kP2 = R"({"d": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]})";

}  // namespace

TEST_CASE("toric-cl on the projective plane") {
    const Outcome o = run({"toric-cl"}, kP2);
    CHECK(o.status == 0);
    CHECK(o.json() == Json::parse(R"({"rank": 1, "torsion": []})"));
}

TEST_CASE("blowup-dim without points") {
    const Outcome o = run({"blowup-dim"}, R"({"r": 2, "points": [], "multidegree": [4]})");
    CHECK(o.status == 0);
    CHECK(o.json()["dim"] == 15);
}

TEST_CASE("cross-check on two collinear points") {
    const Outcome o = run({"cross-check"}, R"({"r": 2, "forms": ["Z0", "Z1"], "multidegree": [2, 1, 1]})");
    REQUIRE(o.status == 0);
    const Json row = o.json()["results"][0];
    CHECK(row["interpolation"] == row["closed_form"]);
    CHECK(row["closed_form"] == row["groebner"]);
    CHECK(row["agree"] == true);
}

TEST_CASE("classgroup-quotient") {
    Outcome o = run({"classgroup-quotient"}, R"({"generators": ["A", "E"], "quotient_by": ["A"]})");
    CHECK(o.status == 0);
    CHECK(o.json()["rank"] == 1);
    o = run({"classgroup-quotient"}, R"({"generators": ["A", "E"], "quotient_by": ["A", "E"]})");
    CHECK(o.json()["generated_by_classes"] == true);
    o = run({"classgroup-quotient"}, R"({"generators": 2, "quotient_by": [[2, 0]]})");
    CHECK(o.json()["torsion"] == Json::parse("[2]"));
}

TEST_CASE("gb and intersect") {
    Outcome o = run({"gb"}, R"({"variables": ["x", "y"], "order": "lex", "generators": ["x^2 - 1", "x*y - 1"]})");
    CHECK(o.status == 0);
    CHECK(o.json()["basis"] == Json::parse(R"(["y^2 - 1", "x - y"])"));
    CHECK(o.json()["certificate"] == true);
    o = run({"intersect"}, R"({"variables": ["x", "y"], "ideals": [["x"], ["y"]]})");
    CHECK(o.json()["basis"] == Json::parse(R"(["x*y"])"));
}

TEST_CASE("verify-generators reports every piece in the box") {
    const Outcome o = run({"verify-generators", "--box", "1", "1"}, R"({"r": 2, "forms": ["Z0", "Z1"]})");
    REQUIRE(o.status == 0);
    const Json report = o.json();
    CHECK(report["all_spanned"] == true);
    CHECK(report["checks"].size() == 2 * 9);
}

TEST_CASE("input errors exit with status 2") {
    Outcome o = run({"toric-cl"}, R"({"d": 2, "rays": [[1, 0)");
    CHECK(o.status == 2);
    CHECK(Json::parse(o.err)["position"].is_number());

    o = run({"gb"}, R"({"nvars": 2, "generators": ["Z0 + + Z1"]})");
    CHECK(o.status == 2);
    CHECK(Json::parse(o.err)["position"] == 5);

    o = run({"blowup-dim"}, R"({"points": []})");
    CHECK(o.status == 2);

    o = run({"no-such-command"}, "{}");
    CHECK(o.status == 2);

    o = run({"toric-cl"}, R"({"d": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1]]})");
    CHECK(o.status == 2);
}

TEST_CASE("interpolation commands refuse positive characteristic") {
    const Outcome o = run({"blowup-dim", "--field", "fp:3"}, R"({"r": 2, "points": [], "multidegree": [1]})");
    CHECK(o.status == 2);
    CHECK(o.err.find("gb") != std::string::npos);
    const Outcome gb = run({"gb", "--field", "fp"}, R"({"nvars": 2, "generators": ["Z0 + Z1", "Z0 - Z1"]})");
    CHECK(gb.status == 0);
    CHECK(gb.json()["field"] == "F_2");
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> jobs{
        {{"toric-cox-ring"}, kP2},
        {{"symbolic-power"}, R"({"weights": [3, 4, 5], "n": 2})"},
        {{"blowup-basis", "--seed", "3"}, R"({"r": 2, "general_points": 2, "multidegree": [2, 1, 1]})"},
    };
    for (const auto& [args, input] : jobs) {
        const Outcome first = run(args, input);
        const Outcome second = run(args, input);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("every command is listed") {
    CHECK(coxring::cli::commands().size() == 14);
}
