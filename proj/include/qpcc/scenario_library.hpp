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

#include <vector>

#include "qpcc/scenario.hpp"

namespace qpcc {

/// The bundled reference scenarios, each with embedded expected outcomes.
/// Parsed once; order is fixed.
const std::vector<Scenario> &builtin_scenarios();

/// nullptr when no scenario has that name.
const Scenario *find_builtin(const std::string &name);

} // namespace qpcc
