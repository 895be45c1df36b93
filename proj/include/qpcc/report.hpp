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

#pragma once

#include <string>

#include "json.hpp"

namespace qpcc {

/// Execution results for one scenario. `document` is the canonical
/// structured form; the counters summarize per-query success.
struct Report {
    nlohmann::json document;
    int queries_total = 0;
    int queries_ok = 0;

    bool all_ok() const { return queries_ok == queries_total; }
};

enum class ReportFormat { Text, Structured };

/// Deterministic rendering; structured mode round-trips losslessly.
std::string render_report(const Report &report, ReportFormat format);

} // namespace qpcc
