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

#include <stdexcept>
#include <string>
#include <utility>

namespace qpcc {

/// Base class of all qpcc errors. `kind()` is a stable machine-readable tag
/// used in reports and exit-code decisions.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string &message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
    const std::string &kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

struct NonSquare : Error {
    explicit NonSquare(const std::string &m) : Error("NonSquare", m) {}
};
struct NotHermitian : Error {
    explicit NotHermitian(const std::string &m) : Error("NotHermitian", m) {}
};
struct NotUnitary : Error {
    explicit NotUnitary(const std::string &m) : Error("NotUnitary", m) {}
};
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string &m)
        : Error("ConvergenceFailure", m) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string &m)
        : Error("DimensionMismatch", m) {}
};
struct IncompleteSpan : Error {
    explicit IncompleteSpan(const std::string &m)
        : Error("IncompleteSpan", m) {}
};
struct OverlappingEigenspaces : Error {
    explicit OverlappingEigenspaces(const std::string &m)
        : Error("OverlappingEigenspaces", m) {}
};
struct SlotOutOfRange : Error {
    explicit SlotOutOfRange(const std::string &m)
        : Error("SlotOutOfRange", m) {}
};
struct UnknownOutcome : Error {
    explicit UnknownOutcome(const std::string &m)
        : Error("UnknownOutcome", m) {}
};
struct DegenerateCondition : Error {
    explicit DegenerateCondition(const std::string &m)
        : Error("DegenerateCondition", m) {}
};
struct NotCommuting : Error {
    explicit NotCommuting(const std::string &m) : Error("NotCommuting", m) {}
};
struct NotDichotomous : Error {
    explicit NotDichotomous(const std::string &m)
        : Error("NotDichotomous", m) {}
};
struct CrossPairNotCommuting : Error {
    explicit CrossPairNotCommuting(const std::string &m)
        : Error("CrossPairNotCommuting", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string &m) : Error("ParseError", m) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string &m)
        : Error("ValidationError", m) {}
};

} // namespace qpcc
