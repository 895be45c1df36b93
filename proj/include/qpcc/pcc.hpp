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
 * Perfect-conditional-correlation (PCC) analysis. A pair (A=alpha, B=beta)
 * is PCC on psi when the B=beta outcome is certain after an A=alpha
 * measurement. The solvers turn that requirement into linear systems on
 * the state, return the full solution subspace together with the
 * non-degeneracy side conditions, and certify feasibility exactly:
 * infeasibility is proven by subspace containment, never sampled.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpcc/conditioning.hpp"

namespace qpcc {

struct PccVerdict {
    bool holds = false;
    double conditional_probability = 0.0;
    double residual = 0.0; // ||E_B(beta) E_A(alpha) psi - E_A(alpha) psi||
    bool degenerate = false;
};

/// A side condition of the form ||op psi|| != 0.
struct NondegeneracyConstraint {
    std::string label;
    CMatrix op;
    /// Proven unsatisfiable: the whole linear solution space lies in
    /// ker(op), so no solution can meet this constraint.
    bool certified_unsatisfiable = false;

    bool satisfied_by(const CVector &v) const;
};

struct SolutionSpace {
    SubspaceBasis linear_basis;
    std::vector<NondegeneracyConstraint> constraints;
    bool feasible = false;
    std::optional<StateVector> witness;
};

/// Order-sensitive PCC test (A measured first); accepts non-commuting
/// pairs. Degenerate conditioning yields degenerate=true, never throws.
PccVerdict check_pcc(const Observable &a, double alpha, const Observable &b,
                     double beta, const StateVector &psi,
                     const Tolerance &tol = {});

/// All states solving E_B(beta) E_A(alpha) psi = E_A(alpha) psi, with the
/// constraint E_A(alpha) psi != 0.
SolutionSpace solve_pair(const Observable &a, double alpha,
                         const Observable &b, double beta,
                         const Tolerance &tol = {},
                         std::uint64_t seed = kDefaultSeed);

/// Solution space for a whole set of value pairs; `symmetric` also imposes
/// the reversed measurement order for every pair.
SolutionSpace solve_gamma(const Observable &a, const Observable &b,
                          const GammaSet &gamma, bool symmetric,
                          const Tolerance &tol = {},
                          std::uint64_t seed = kDefaultSeed);

struct SymmetryReport {
    bool symmetric = false;
    bool commuting = true; // order irrelevance is only derived when true
    double difference = 0.0; // ||E_A(alpha) psi - E_B(beta) psi||
    double norm_a = 0.0;
    double norm_b = 0.0;
};

/// Order-irrelevance test E_A(alpha) psi = E_B(beta) psi. For
/// non-commuting pairs the equality is still evaluated but flagged.
SymmetryReport is_symmetric_state(const Observable &a, double alpha,
                                  const Observable &b, double beta,
                                  const StateVector &psi,
                                  const Tolerance &tol = {});

struct JointEigenspace {
    double alpha = 0.0;
    double beta = 0.0;
    SubspaceBasis basis; // H_A(alpha) cap H_B(beta)
};

/// Joint eigenspace decomposition for a commuting pair; the dimensions
/// sum to the ambient dimension.
std::vector<JointEigenspace> joint_eigenspaces(const Observable &a,
                                               const Observable &b,
                                               const Tolerance &tol = {});

/// For commuting dichotomous observables: the A=B (sign=+1) or A=-B
/// (sign=-1) solution space as a direct sum of joint eigenspaces, with
/// non-zero-component constraints. Must agree with solve_gamma on the
/// corresponding complete pair set.
SolutionSpace characterize_dichotomous(const Observable &a,
                                       const Observable &b, int sign,
                                       const Tolerance &tol = {},
                                       std::uint64_t seed = kDefaultSeed);

struct CorrelationReport {
    Complex value;           // <psi| A B |psi>
    double residual_minus = 0.0; // ||A B psi + psi||
    double residual_plus = 0.0;  // ||A B psi - psi||
};

CorrelationReport correlation(const Observable &a, const Observable &b,
                              const StateVector &psi);

struct SharedOutcomeExclusion {
    double alpha = 0.0;
    double beta_other = 0.0;
    bool infeasible = false;
    bool certified = false; // proven by containment in ker E_A(alpha)
};

struct SharedOutcomeReport {
    /// One outcome cannot be perfectly correlated with two different
    /// partner outcomes: each joint system is certified infeasible.
    std::vector<SharedOutcomeExclusion> exclusions;

    bool dichotomous_branch = false;
    bool eigenstate_of_beta = false; // E_B(beta) psi = psi
    double eigenstate_residual = 0.0;
    std::vector<std::pair<double, double>>
        commutation_residuals; // (gamma, ||[E_B(beta), E_A(gamma)] psi||)
    std::vector<std::pair<double, PccVerdict>> verdicts; // per gamma
    std::vector<std::pair<double, bool>> symmetric;      // per gamma
    double max_reversed_conditional = 0.0; // max_gamma P(A=gamma | B=beta)
};

/// Shared-outcome analysis around a fixed B=beta: impossibility of two
/// different partner outcomes, and for dichotomous A the eigenstate
/// criterion with on-state commutation residuals.
SharedOutcomeReport shared_outcome_analysis(const Observable &a,
                                            const Observable &b, double beta,
                                            const StateVector &psi,
                                            const Tolerance &tol = {},
                                            bool dichotomous_branch = true);

struct CommutatorReport {
    bool premises_hold = false; // dual-pair entanglement equalities on psi
    double premise_residual_1 = 0.0;
    double premise_residual_2 = 0.0;
    double vector_residual = 0.0;  // ||[B1,B2] psi + [A1,A2] psi||
    double scalar_residual = 0.0;  // |<psi|[B1,B2] psi> + <psi|[A1,A2] psi>|
    double product_residual = 0.0; // |<psi|[A1,A2][B1,B2] psi> - ||[A1,A2] psi||^2|
};

/// Residuals of the commutator identities satisfied by states that are
/// A_i = -B_i entangled for two pairs of dichotomous observables.
CommutatorReport commutator_identities(const Observable &a1,
                                       const Observable &a2,
                                       const Observable &b1,
                                       const Observable &b2,
                                       const StateVector &psi,
                                       const Tolerance &tol = {});

struct CovarianceReport {
    bool invariant = false;
    bool feasibility_match = false;
    bool dimension_match = false;
    bool witness_transported = false; // U psi passes under conjugated pair
};

/// Checks that simultaneous conjugation of observables and state leaves
/// every PCC verdict unchanged.
CovarianceReport unitary_covariance_check(const Observable &a,
                                          const Observable &b,
                                          const GammaSet &gamma,
                                          const CMatrix &u,
                                          const Tolerance &tol = {},
                                          std::uint64_t seed = kDefaultSeed);

struct FamilyTrial {
    std::uint64_t seed = 0;
    bool singlet_ok = false;
    bool control_ok = false;
};

struct FamilyInvarianceReport {
    int trials = 0;
    bool identity_ok = false;
    int singlet_passes = 0;   // expected == trials
    int control_failures = 0; // expected >= 1 for generic rotations
    std::vector<FamilyTrial> per_trial;
};

/// Builds the antisymmetric two-factor state from the eigenbases of two
/// local dichotomous observables and verifies it stays (+,-)/(-,+) PCC
/// when both observables are rotated by the same transformation relative
/// to their own eigenbases. The symmetric-coefficient state serves as the
/// negative control and must fail for generic rotations.
FamilyInvarianceReport family_invariance_check(const Observable &local_a,
                                               const Observable &local_b,
                                               int trials,
                                               std::uint64_t seed = kDefaultSeed,
                                               const Tolerance &tol = {});

struct ValueTriple {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Triple-correlation solver. Sequential mode imposes
/// E_C(gamma) E_B(beta) E_A(alpha) psi = E_B(beta) E_A(alpha) psi;
/// joint mode (pairwise commuting observables) additionally imposes the
/// cyclic equalities E_B E_A psi = E_C E_B psi = E_A E_C psi.
SolutionSpace solve_triple(const Observable &a, const Observable &b,
                           const Observable &c,
                           const std::vector<ValueTriple> &triples, bool joint,
                           const Tolerance &tol = {},
                           std::uint64_t seed = kDefaultSeed);

} // namespace qpcc
