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
 * Observables as spectral families: an eigenvalue list plus orthogonal
 * projectors resolving the identity. Constructors validate the spectral
 * invariants; instances are immutable afterwards and safe to share.
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qpcc/numerics.hpp"

namespace qpcc {

/// Outcome value equality (values are exact by intent, compared loosely).
bool values_equal(double a, double b);

struct Outcome {
    double value = 0.0;
    CMatrix projector;       // dense E(value)
    SubspaceBasis eigenbasis; // orthonormal basis of the eigenspace
};

class Observable {
  public:
    /// Spectral decomposition of a Hermitian matrix; nearly equal
    /// eigenvalues are clustered into one outcome.
    static Observable from_matrix(const CMatrix &h, const Tolerance &tol = {});

    /// Builds outcomes from (value, spanning vectors) groups. Group vectors
    /// are orthonormalized; groups must be mutually orthogonal and jointly
    /// span the space.
    static Observable
    from_eigenspaces(const std::vector<std::pair<double, std::vector<CVector>>>
                         &groups,
                     const Tolerance &tol = {});

    /// Places a local observable at `slot` of a tensor product with the
    /// given factor dimensions; identity everywhere else.
    static Observable lift_local(const Observable &local, std::size_t slot,
                                 const std::vector<Eigen::Index> &dims);

    /// U E(alpha) U^dagger for every outcome; values unchanged.
    Observable conjugated(const CMatrix &u, const Tolerance &tol = {}) const;

    Eigen::Index dim() const { return dim_; }
    const std::vector<Outcome> &outcomes() const { return outcomes_; }
    const Outcome &outcome(double value) const; // throws UnknownOutcome
    const Outcome *find_outcome(double value) const;

    /// Reconstructs sum_alpha alpha E(alpha).
    CMatrix matrix() const;

    /// Exactly the outcomes {-1, +1}.
    bool dichotomous() const;

    /// Re-checks the spectral-family invariants; ValidationError on failure.
    void validate(const Tolerance &tol = {}) const;

  private:
    Observable(Eigen::Index dim, std::vector<Outcome> outcomes);

    Eigen::Index dim_ = 0;
    std::vector<Outcome> outcomes_; // ascending by value
};

/// Commutator test on the reconstructed operators.
bool commutes(const Observable &a, const Observable &b,
              const Tolerance &tol = {});

struct ValuePair {
    double alpha = 0.0;
    double beta = 0.0;
};

/// A set of value pairs (alpha, beta) prescribing where perfect
/// conditional correlation is demanded.
struct GammaSet {
    std::vector<ValuePair> pairs;

    /// No duplicate pairs; every value must be an outcome of its observable.
    void validate(const Observable &a, const Observable &b) const;

    /// True iff every outcome of `a` and of `b` appears in exactly one pair.
    bool complete(const Observable &a, const Observable &b) const;
};

} // namespace qpcc
