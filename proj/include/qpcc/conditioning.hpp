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
 * The probability calculus: Born rule, projective (Lueders) state update,
 * and sequential conditional probabilities for measurement chains.
 * Denominators below kDegeneracyThreshold raise DegenerateCondition
 * instead of returning a meaningless ratio.
 */

#pragma once

#include <vector>

#include "qpcc/observables.hpp"

namespace qpcc {

struct MeasurementEvent {
    Observable observable;
    double value = 0.0;
};

/// Ordered sequence of measurement events over one ambient dimension.
struct Chain {
    std::vector<MeasurementEvent> events;

    void validate() const; // non-empty, consistent dimensions
};

/// P(A = alpha | psi) = ||E_A(alpha) psi||^2.
double born(const Observable &a, double alpha, const StateVector &psi,
            const Tolerance &tol = {});

/// Post-measurement state E_A(alpha) psi / ||E_A(alpha) psi||.
StateVector luders(const Observable &a, double alpha, const StateVector &psi,
                   const Tolerance &tol = {});

/// P(B = beta | A = alpha, psi) with A measured first.
double conditional(const Observable &b, double beta, const Observable &a,
                   double alpha, const StateVector &psi,
                   const Tolerance &tol = {});

/// P(target | chain, psi): the chain is applied in measurement order.
double chain_conditional(const Chain &chain, const MeasurementEvent &target,
                         const StateVector &psi, const Tolerance &tol = {});

} // namespace qpcc
