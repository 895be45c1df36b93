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

// Canonical observable pairs used across the test suites, built directly
// through the core API.

#pragma once

#include "oracles.hpp"
#include "qpcc/observables.hpp"

namespace qpcc::testing {

struct Pair {
    Observable a;
    Observable b;
};

inline Observable spans(Eigen::Index dim,
                        const std::vector<std::vector<Eigen::Index>> &plus_minus) {
    std::vector<std::pair<double, std::vector<CVector>>> groups;
    const double values[] = {1.0, -1.0};
    for (std::size_t g = 0; g < plus_minus.size(); ++g) {
        std::vector<CVector> vs;
        for (const Eigen::Index i : plus_minus[g]) {
            vs.push_back(unit(dim, i));
        }
        groups.emplace_back(values[g], std::move(vs));
    }
    return Observable::from_eigenspaces(groups);
}

// dim 5: H_A(+/-) = {e1,e2,e3},{e4,e5}; H_B(+/-) = {e1,e2},{e3,e4,e5}.
inline Pair dim5_pair() {
    return {spans(5, {{0, 1, 2}, {3, 4}}), spans(5, {{0, 1}, {2, 3, 4}})};
}

// dim 4: H_A(+/-) = {e1,e2},{e3,e4}; H_B(+/-) = {e1,e3},{e2,e4}.
inline Pair dim4_pair() {
    return {spans(4, {{0, 1}, {2, 3}}), spans(4, {{0, 2}, {1, 3}})};
}

// dim 4 alternative split: H_A(+/-) = {e1,e2,e3},{e4}; H_B(+/-) = {e1},{e2,e3,e4}.
inline Pair dim4_split31_pair() {
    return {spans(4, {{0, 1, 2}, {3}}), spans(4, {{0}, {1, 2, 3}})};
}

// dim 3: H_A(+/-) = {e1,e2},{e3}; H_B(+/-) = {e1},{e2,e3}.
inline Pair dim3_pair() {
    return {spans(3, {{0, 1}, {2}}), spans(3, {{0}, {1, 2}})};
}

// dim 2: H_A(+/-) = {e1},{e2}; H_B(+/-) = {e2},{e1}.
inline Pair dim2_pair() {
    return {spans(2, {{0}, {1}}), spans(2, {{1}, {0}})};
}

// Rotated non-commuting dim-4 pair: H_A(+/-) = {e1,e2},{e3,e4} and
// H_B(+/-) spanned by f1 = (e1+e3)/sqrt2, f2 = (e2+e4)/sqrt2 and
// f3 = (e1-e3)/sqrt2, f4 = (e2-e4)/sqrt2.
inline Pair rotated4_pair() {
    const Observable a = spans(4, {{0, 1}, {2, 3}});
    const CVector f1 = unit(4, 0) + unit(4, 2);
    const CVector f2 = unit(4, 1) + unit(4, 3);
    const CVector f3 = unit(4, 0) - unit(4, 2);
    const CVector f4 = unit(4, 1) - unit(4, 3);
    const Observable b = Observable::from_eigenspaces(
        {{1.0, {f1, f2}}, {-1.0, {f3, f4}}});
    return {a, b};
}

inline Observable pauli_z2() {
    return spans(2, {{0}, {1}});
}

inline Observable pauli_x2() {
    const CVector plus = unit(2, 0) + unit(2, 1);
    const CVector minus = unit(2, 0) - unit(2, 1);
    return Observable::from_eigenspaces({{1.0, {plus}}, {-1.0, {minus}}});
}

// Tensor pair A = z (x) I, B = I (x) z on dims (2,2).
inline Pair tensor22_pair() {
    return {Observable::lift_local(pauli_z2(), 0, {2, 2}),
            Observable::lift_local(pauli_z2(), 1, {2, 2})};
}

inline StateVector singlet22() {
    CVector v = CVector::Zero(4);
    const double s = 1.0 / std::sqrt(2.0);
    v[1] = s;  // |01>
    v[2] = -s; // |10>
    return StateVector::from_coefficients(std::move(v));
}

inline StateVector ghz_state() {
    CVector v = CVector::Zero(8);
    const double s = 1.0 / std::sqrt(2.0);
    v[0] = s; // |000>
    v[7] = s; // |111>
    return StateVector::from_coefficients(std::move(v));
}

} // namespace qpcc::testing
