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
 * Dense complex linear algebra substrate: Hermitian eigendecomposition,
 * kernels and ranks via singular values, orthonormal bases and subspace
 * set-operations. Every rank/containment decision goes through one
 * Tolerance policy so downstream feasibility verdicts stay consistent.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qpcc/errors.hpp"

namespace qpcc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// One tolerance policy shared by all numeric decisions:
/// a quantity of magnitude `scale` counts as zero below abs + rel * scale.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-12;

    double threshold(double scale) const { return abs + rel * scale; }
};

/// Probability mass below which a conditioning denominator is treated as
/// zero and the conditional state is undefined.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Relative gap under which two eigenvalues belong to one spectral cluster.
inline constexpr double kEigenvalueClusterGap = 1e-8;

inline constexpr std::uint64_t kDefaultSeed = 42;

double max_abs(const CMatrix &m);
bool is_hermitian(const CMatrix &m, const Tolerance &tol);
bool is_unitary(const CMatrix &m, const Tolerance &tol);

/// Rejects NaN/Inf entries with a ValidationError naming `context`.
void require_finite(const CMatrix &m, const std::string &context);

/// Multiplies by a unit scalar so the first component of largest modulus
/// becomes real and positive. Zero vectors pass through unchanged.
CVector canonical_phase(const CVector &v);

/// Unit-norm coefficient vector over a fixed orthonormal basis.
class StateVector {
  public:
    /// Accepts `c` only if already unit-norm within tolerance.
    static StateVector from_coefficients(CVector c, const Tolerance &tol = {});
    /// Scales `c` to unit norm; rejects (near-)zero vectors.
    static StateVector normalized(CVector c);

    Eigen::Index dim() const { return coeffs_.size(); }
    const CVector &coeffs() const { return coeffs_; }

  private:
    explicit StateVector(CVector c) : coeffs_(std::move(c)) {}
    CVector coeffs_;
};

/// Orthonormal basis of a subspace, columns of `vectors`. An empty matrix
/// represents the zero subspace.
struct SubspaceBasis {
    Eigen::Index ambient_dim = 0;
    CMatrix vectors; // ambient_dim x count, pairwise orthonormal columns

    Eigen::Index count() const { return vectors.cols(); }
    bool empty() const { return vectors.cols() == 0; }
    CMatrix projector() const;

    static SubspaceBasis zero(Eigen::Index ambient);
    static SubspaceBasis full(Eigen::Index ambient);
    /// Orthonormalizes the given spanning set (dependent vectors dropped).
    static SubspaceBasis span_of(const std::vector<CVector> &vs,
                                 const Tolerance &tol = {});
};

struct EighResult {
    RVector eigenvalues; // ascending
    CMatrix eigenvectors; // unitary, canonical column phases
};

/// Hermitian eigendecomposition with reproducible eigenvector phases.
EighResult eigh(const CMatrix &h, const Tolerance &tol = {});

/// Singular values at or below abs + rel * sigma_max count as zero.
Eigen::Index rank_of(const CMatrix &m, const Tolerance &tol = {});

/// Orthonormal basis of {x : Mx = 0} under the shared rank threshold.
SubspaceBasis kernel(const CMatrix &m, const Tolerance &tol = {});

/// U cap W, computed as the kernel of the stacked projector complements.
SubspaceBasis intersect(const SubspaceBasis &u, const SubspaceBasis &w,
                        const Tolerance &tol = {});

/// True iff v lies in the span of `space` within tolerance.
bool contains(const SubspaceBasis &space, const CVector &v,
              const Tolerance &tol = {});

/// True iff every basis vector of `inner` lies in `outer`.
bool contains_subspace(const SubspaceBasis &outer, const SubspaceBasis &inner,
                       const Tolerance &tol = {});

/// Mutual containment (equality as subspaces).
bool same_subspace(const SubspaceBasis &u, const SubspaceBasis &w,
                   const Tolerance &tol = {});

/// Two-pass modified Gram-Schmidt; dependent columns are dropped.
CMatrix orthonormalize(const CMatrix &columns, const Tolerance &tol = {});

/// Chain-clusters an ascending value list; gap. Returns index groups.
std::vector<std::vector<Eigen::Index>> cluster_ascending(const RVector &values,
                                                         double gap);

CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Deterministic seeded sources; no global RNG state anywhere.
CVector random_complex_gaussian(Eigen::Index n, std::mt19937_64 &rng);
CMatrix random_unitary(Eigen::Index n, std::uint64_t seed);
StateVector random_state(Eigen::Index n, std::uint64_t seed);

/// Stable per-query seed derivation (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t index);

} // namespace qpcc
