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

#include "qpcc/conditioning.hpp"

#include <cmath>
#include <string>

namespace qpcc {

namespace {

// Clamp after checking; a probability outside [0,1] beyond tolerance is a
// genuine numeric fault and must surface, not vanish.
double checked_probability(double p, const Tolerance &tol) {
    if (p < -tol.threshold(1.0) || p > 1.0 + tol.threshold(1.0) * 100.0) {
        throw ValidationError("probability " + std::to_string(p) +
                              " escaped [0, 1]");
    }
    return std::min(1.0, std::max(0.0, p));
}

void require_dim(const Observable &a, const StateVector &psi) {
    if (a.dim() != psi.dim()) {
        throw DimensionMismatch("observable dimension " +
                                std::to_string(a.dim()) +
                                " does not match state dimension " +
                                std::to_string(psi.dim()));
    }
}

} // namespace

void Chain::validate() const {
    if (events.empty()) {
        throw ValidationError("measurement chain is empty");
    }
    const Eigen::Index dim = events.front().observable.dim();
    for (const auto &e : events) {
        if (e.observable.dim() != dim) {
            throw DimensionMismatch("chain events span mixed dimensions");
        }
        e.observable.outcome(e.value); // throws UnknownOutcome
    }
}

double born(const Observable &a, double alpha, const StateVector &psi,
            const Tolerance &tol) {
    require_dim(a, psi);
    const Outcome &e = a.outcome(alpha);
    const double p = (e.projector * psi.coeffs()).squaredNorm();
    return checked_probability(p, tol);
}

StateVector luders(const Observable &a, double alpha, const StateVector &psi,
                   const Tolerance &tol) {
    require_dim(a, psi);
    const Outcome &e = a.outcome(alpha);
    const CVector projected = e.projector * psi.coeffs();
    const double p = projected.squaredNorm();
    if (p < kDegeneracyThreshold) {
        throw DegenerateCondition("P(A = " + std::to_string(alpha) +
                                  ") vanishes; conditional state undefined");
    }
    (void)tol;
    return StateVector::normalized(projected);
}

double conditional(const Observable &b, double beta, const Observable &a,
                   double alpha, const StateVector &psi,
                   const Tolerance &tol) {
    require_dim(a, psi);
    require_dim(b, psi);
    const Outcome &ea = a.outcome(alpha);
    const Outcome &eb = b.outcome(beta);
    const CVector va = ea.projector * psi.coeffs();
    const double denom = va.squaredNorm();
    if (denom < kDegeneracyThreshold) {
        throw DegenerateCondition(
            "conditioning outcome has vanishing probability");
    }
    const double num = (eb.projector * va).squaredNorm();
    return checked_probability(num / denom, tol);
}

double chain_conditional(const Chain &chain, const MeasurementEvent &target,
                         const StateVector &psi, const Tolerance &tol) {
    chain.validate();
    require_dim(chain.events.front().observable, psi);
    require_dim(target.observable, psi);
    target.observable.outcome(target.value);
    CVector v = psi.coeffs();
    for (const auto &event : chain.events) {
        v = event.observable.outcome(event.value).projector * v;
    }
    const double denom = v.squaredNorm();
    if (denom < kDegeneracyThreshold) {
        throw DegenerateCondition(
            "chain outcome has vanishing probability");
    }
    const double num =
        (target.observable.outcome(target.value).projector * v).squaredNorm();
    return checked_probability(num / denom, tol);
}

} // namespace qpcc
