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

#include <ostream>
#include <string>
#include <vector>

namespace qpcc::cli {

/// Runs the command line given as an argument list (no program name).
/// Returns the process exit status: 0 all good, 1 query failures or unmet
/// expectations, 2 usage/parse/validation errors.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace qpcc::cli
