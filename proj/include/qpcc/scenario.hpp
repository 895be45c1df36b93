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

/**
 * @file
 * Declarative scenario documents: a dimension (or tensor factor list),
 * named observables in eigenspace/matrix/lifted form, named states, and a
 * list of queries with optional embedded expectations. Parsing is strict;
 * execution produces a Report whose structured form is canonical.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qpcc/pcc.hpp"
#include "qpcc/report.hpp"

namespace qpcc {

struct Query {
    std::string kind;
    nlohmann::json spec; // full canonical query object (label/expect included)
};

struct Scenario {
    std::string name;
    Eigen::Index dimension = 0;
    std::vector<Eigen::Index> factors; // empty unless a tensor product
    std::map<std::string, Observable> observables;
    std::map<std::string, StateVector> states;
    std::vector<Query> queries;
    Tolerance tol;
    std::uint64_t seed = kDefaultSeed;
    nlohmann::json document; // canonical form of the input

    /// Canonical serialization; parsing it back yields this scenario.
    std::string canonical_text() const;
};

/// Parses and fully validates a scenario document.
/// Throws ParseError on malformed JSON, ValidationError on bad content.
Scenario parse_scenario(const std::string &text);
Scenario scenario_from_json(const nlohmann::json &doc);

/// Runs every query in order; per-query errors are captured in the report
/// rather than thrown. Embedded expectations are checked when present.
Report execute(const Scenario &scenario);

} // namespace qpcc
