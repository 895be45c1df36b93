// Copyright 2026 The qpcc developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "qpcc/scenario.hpp"
#include "qpcc/scenario_library.hpp"

using namespace qpcc;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string &name) {
    return std::string(QPCC_TEST_DIR) + "/fixtures/" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char *kMinimal = R"json({
  "dimension": 2,
  "observables": {
    "Z": {"eigenvalues": [1, -1], "eigenspaces": [[[1, 0]], [[0, 1]]]}
  },
  "states": {"up": [1, 0]},
  "queries": [
    {"kind": "born", "observable": "Z", "value": 1, "state": "up"}
  ]
})json";

} // namespace

TEST_CASE("minimal scenario parses and executes") {
    const Scenario s = parse_scenario(kMinimal);
    CHECK(s.dimension == 2);
    CHECK(s.observables.size() == 1);
    CHECK(s.queries.size() == 1);
    CHECK(s.seed == kDefaultSeed);
    const Report r = execute(s);
    CHECK(r.all_ok());
    CHECK(r.document["queries"][0]["result"]["probability"].get<double>() ==
          doctest::Approx(1.0));
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_scenario("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_scenario("[1,2,3]"), ValidationError);
    // Non-Hermitian matrix observables are named in the message.
    const char *bad = R"json({
      "dimension": 2,
      "observables": {"H": {"matrix": [[0, 1], [0, 0]]}},
      "queries": []
    })json";
    try {
        parse_scenario(bad);
        FAIL("expected a validation error");
    } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("'H'") != std::string::npos);
    }
    // Unknown keys are rejected.
    CHECK_THROWS_AS(
        parse_scenario(R"json({"dimension": 2, "observables": {"Z":
          {"eigenvalues": [1,-1], "eigenspaces": [[[1,0]],[[0,1]]]}},
          "queries": [], "extra": 1})json"),
        ValidationError);
    // Exactly one of dimension/factors.
    CHECK_THROWS_AS(
        parse_scenario(R"json({"dimension": 4, "factors": [2, 2],
          "observables": {"Z": {"matrix": [[0]]}}, "queries": []})json"),
        ValidationError);
}

TEST_CASE("query validation catches incomplete parameters") {
    const char *missing = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "queries": [{"kind": "born", "observable": "Z"}]
    })json";
    CHECK_THROWS_AS(parse_scenario(missing), ValidationError);

    const char *unknown_obs = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "states": {"up": [1, 0]},
      "queries": [{"kind": "born", "observable": "Q", "value": 1,
                   "state": "up"}]
    })json";
    CHECK_THROWS_AS(parse_scenario(unknown_obs), ValidationError);

    const char *bad_kind = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "queries": [{"kind": "solve_everything"}]
    })json";
    CHECK_THROWS_AS(parse_scenario(bad_kind), ValidationError);
}

TEST_CASE("decimal strings survive canonicalization exactly") {
    const char *text = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "states": {"s": ["0.600000000000000012", "0.8"]},
      "queries": []
    })json";
    const Scenario s = parse_scenario(text);
    CHECK(s.canonical_text().find("0.600000000000000012") !=
          std::string::npos);
    CHECK(s.states.at("s").coeffs()[0].real() == doctest::Approx(0.6));
}

TEST_CASE("shipped fixture is the canonical form of the builtin") {
    const std::string bytes = slurp(fixture_path("dim4_amb.json"));
    const Scenario parsed = parse_scenario(bytes);
    CHECK(parsed.canonical_text() == bytes);
    const Scenario *builtin = find_builtin("dim4_AmB");
    REQUIRE(builtin != nullptr);
    CHECK(builtin->canonical_text() == bytes);
}

TEST_CASE("canonicalization is idempotent") {
    for (const std::string name :
         {"dim4_amb.json", "tolerance_demo.json", "wrong_expect.json"}) {
        const Scenario once = parse_scenario(slurp(fixture_path(name)));
        const Scenario twice = parse_scenario(once.canonical_text());
        CHECK(once.canonical_text() == twice.canonical_text());
    }
}

TEST_CASE("structured report round-trips byte-identically") {
    const Scenario *s = find_builtin("dim4_AmB");
    REQUIRE(s != nullptr);
    const Report report = execute(*s);
    const std::string text = render_report(report, ReportFormat::Structured);
    const json reparsed = json::parse(text);
    CHECK(reparsed.dump(2) + "\n" == text);
    // Executing twice yields byte-identical reports.
    const Report again = execute(*s);
    CHECK(render_report(again, ReportFormat::Structured) == text);
}

TEST_CASE("expectation failures and query errors are captured") {
    const Scenario wrong =
        parse_scenario(slurp(fixture_path("wrong_expect.json")));
    const Report r = execute(wrong);
    CHECK_FALSE(r.all_ok());
    CHECK(r.document["queries"][0]["result"].contains("expect_failures"));

    const char *erroring = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "states": {"up": [1, 0]},
      "queries": [{"kind": "born", "observable": "Z", "value": 0.5,
                   "state": "up"}]
    })json";
    const Report err = execute(parse_scenario(erroring));
    CHECK_FALSE(err.all_ok());
    CHECK(err.document["queries"][0]["result"]["error"].get<std::string>() ==
          "UnknownOutcome");
}

TEST_CASE("expected errors count as success") {
    const char *expected = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "states": {"up": [1, 0]},
      "queries": [{"kind": "conditional", "target": "Z", "target_value": 1,
                   "given": "Z", "given_value": -1, "state": "up",
                   "expect": {"error": "DegenerateCondition"}}]
    })json";
    const Report r = execute(parse_scenario(expected));
    CHECK(r.all_ok());
}

TEST_CASE("inline states are accepted") {
    const char *inline_state = R"json({
      "dimension": 2,
      "observables": {"Z": {"eigenvalues": [1, -1],
                            "eigenspaces": [[[1, 0]], [[0, 1]]]}},
      "queries": [{"kind": "born", "observable": "Z", "value": 1,
                   "state": [3, 0], "expect": {"value": 1}}]
    })json";
    CHECK(execute(parse_scenario(inline_state)).all_ok());
}

TEST_CASE("tolerance changes flip the borderline verdict") {
    Scenario s = parse_scenario(slurp(fixture_path("tolerance_demo.json")));
    const Report strict = execute(s);
    CHECK_FALSE(
        strict.document["queries"][0]["result"]["holds"].get<bool>());
    s.tol.abs = 1e-3;
    const Report loose = execute(s);
    CHECK(loose.document["queries"][0]["result"]["holds"].get<bool>());
}

TEST_CASE("builtin library covers the reference constructions") {
    const auto &all = builtin_scenarios();
    CHECK(all.size() >= 10);
    std::set<std::string> names;
    for (const auto &s : all) {
        CHECK(!s.name.empty());
        CHECK(names.insert(s.name).second); // unique
        const Report r = execute(s);
        CHECK(r.all_ok());
    }
    CHECK(find_builtin("ghz") != nullptr);
    CHECK(find_builtin("does_not_exist") == nullptr);
}

TEST_CASE("text rendering is deterministic and complete") {
    const Scenario *s = find_builtin("dim2_AmB");
    REQUIRE(s != nullptr);
    const Report r = execute(*s);
    const std::string a = render_report(r, ReportFormat::Text);
    const std::string b = render_report(execute(*s), ReportFormat::Text);
    CHECK(a == b);
    CHECK(a.find("summary:") != std::string::npos);
    CHECK(a.find("solve_gamma") != std::string::npos);
}
