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

#include "qpcc/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace qpcc {

double max_abs(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix &m, const Tolerance &tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const CMatrix diff = m - m.adjoint();
    return max_abs(diff) <= tol.threshold(max_abs(m));
}

bool is_unitary(const CMatrix &m, const Tolerance &tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const CMatrix gram = m.adjoint() * m;
    const CMatrix diff = gram - CMatrix::Identity(m.rows(), m.cols());
    return max_abs(diff) <= tol.threshold(1.0);
}

void require_finite(const CMatrix &m, const std::string &context) {
    if (!m.allFinite()) {
        throw ValidationError(context + ": non-finite entries");
    }
}

CVector canonical_phase(const CVector &v) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best + 1e-15) {
            best = a;
            imax = i;
        }
    }
    if (best <= 0.0) {
        return v;
    }
    const Complex phase = v[imax] / std::abs(v[imax]);
    return v * std::conj(phase);
}

StateVector StateVector::from_coefficients(CVector c, const Tolerance &tol) {
    require_finite(c, "state vector");
    const double n = c.norm();
    if (std::abs(n - 1.0) > tol.threshold(1.0) * 10.0) {
        throw ValidationError("state vector norm " + std::to_string(n) +
                              " is not 1");
    }
    return StateVector(std::move(c));
}

StateVector StateVector::normalized(CVector c) {
    require_finite(c, "state vector");
    const double n = c.norm();
    if (n < 1e-14) {
        throw ValidationError("cannot normalize a zero state vector");
    }
    return StateVector(c / n);
}

CMatrix SubspaceBasis::projector() const {
    if (empty()) {
        return CMatrix::Zero(ambient_dim, ambient_dim);
    }
    return vectors * vectors.adjoint();
}

SubspaceBasis SubspaceBasis::zero(Eigen::Index ambient) {
    return SubspaceBasis{ambient, CMatrix::Zero(ambient, 0)};
}

SubspaceBasis SubspaceBasis::full(Eigen::Index ambient) {
    return SubspaceBasis{ambient, CMatrix::Identity(ambient, ambient)};
}

SubspaceBasis SubspaceBasis::span_of(const std::vector<CVector> &vs,
                                     const Tolerance &tol) {
    if (vs.empty()) {
        throw ValidationError("span_of: no vectors given");
    }
    const Eigen::Index dim = vs.front().size();
    CMatrix cols(dim, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != dim) {
            throw DimensionMismatch("span_of: inconsistent vector lengths");
        }
        cols.col(static_cast<Eigen::Index>(j)) = vs[j];
    }
    return SubspaceBasis{dim, orthonormalize(cols, tol)};
}

EighResult eigh(const CMatrix &h, const Tolerance &tol) {
    if (h.rows() != h.cols()) {
        throw NonSquare("eigh: matrix is " + std::to_string(h.rows()) + "x" +
                        std::to_string(h.cols()));
    }
    require_finite(h, "eigh input");
    if (!is_hermitian(h, tol)) {
        throw NotHermitian("eigh: ||H - H^dagger|| exceeds tolerance");
    }
    // Symmetrize to scrub roundoff before handing to the solver.
    const CMatrix hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hs);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eigh: eigensolver did not converge");
    }
    EighResult out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
        out.eigenvectors.col(j) = canonical_phase(out.eigenvectors.col(j));
    }
    return out;
}

namespace {

Eigen::Index numerical_rank(const Eigen::VectorXd &singular_values,
                            const Tolerance &tol) {
    if (singular_values.size() == 0) {
        return 0;
    }
    const double cutoff = tol.threshold(singular_values[0]);
    Eigen::Index r = 0;
    while (r < singular_values.size() && singular_values[r] > cutoff) {
        ++r;
    }
    return r;
}

} // namespace

Eigen::Index rank_of(const CMatrix &m, const Tolerance &tol) {
    require_finite(m, "rank input");
    Eigen::JacobiSVD<CMatrix> svd(m);
    return numerical_rank(svd.singularValues(), tol);
}

SubspaceBasis kernel(const CMatrix &m, const Tolerance &tol) {
    if (m.cols() < 1) {
        throw ValidationError("kernel: matrix has no columns");
    }
    require_finite(m, "kernel input");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const Eigen::Index r = numerical_rank(svd.singularValues(), tol);
    const Eigen::Index k = m.cols() - r;
    CMatrix basis = svd.matrixV().rightCols(k);
    return SubspaceBasis{m.cols(), orthonormalize(basis, tol)};
}

SubspaceBasis intersect(const SubspaceBasis &u, const SubspaceBasis &w,
                        const Tolerance &tol) {
    if (u.ambient_dim != w.ambient_dim) {
        throw DimensionMismatch("intersect: ambient dimensions differ");
    }
    const Eigen::Index n = u.ambient_dim;
    if (u.empty() || w.empty()) {
        return SubspaceBasis::zero(n);
    }
    CMatrix stacked(2 * n, n);
    stacked.topRows(n) = CMatrix::Identity(n, n) - u.projector();
    stacked.bottomRows(n) = CMatrix::Identity(n, n) - w.projector();
    return kernel(stacked, tol);
}

bool contains(const SubspaceBasis &space, const CVector &v,
              const Tolerance &tol) {
    if (space.ambient_dim != v.size()) {
        throw DimensionMismatch("contains: vector/ambient dimensions differ");
    }
    CVector residual = v;
    if (!space.empty()) {
        residual -= space.vectors * (space.vectors.adjoint() * v);
    }
    return residual.norm() <= tol.threshold(v.norm());
}

bool contains_subspace(const SubspaceBasis &outer, const SubspaceBasis &inner,
                       const Tolerance &tol) {
    if (outer.ambient_dim != inner.ambient_dim) {
        throw DimensionMismatch("contains_subspace: dimensions differ");
    }
    for (Eigen::Index j = 0; j < inner.count(); ++j) {
        if (!contains(outer, inner.vectors.col(j), tol)) {
            return false;
        }
    }
    return true;
}

bool same_subspace(const SubspaceBasis &u, const SubspaceBasis &w,
                   const Tolerance &tol) {
    return contains_subspace(u, w, tol) && contains_subspace(w, u, tol);
}

CMatrix orthonormalize(const CMatrix &columns, const Tolerance &tol) {
    const Eigen::Index n = columns.rows();
    CMatrix accepted(n, columns.cols());
    Eigen::Index count = 0;
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        CVector v = columns.col(j);
        const double original = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < count; ++k) {
                v -= accepted.col(k) * accepted.col(k).dot(v);
            }
        }
        const double n2 = v.norm();
        if (n2 <= tol.threshold(std::max(1.0, original))) {
            continue; // dependent on the accepted set
        }
        accepted.col(count++) = v / n2;
    }
    return accepted.leftCols(count);
}

std::vector<std::vector<Eigen::Index>> cluster_ascending(const RVector &values,
                                                         double gap) {
    std::vector<std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i == 0 || values[i] - values[i - 1] > gap) {
            groups.emplace_back();
        }
        groups.back().push_back(i);
    }
    return groups;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

CVector random_complex_gaussian(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    return v;
}

CMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        g.col(j) = random_complex_gaussian(n, rng);
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        if (a > 0.0) {
            q.col(j) *= d / a;
        }
    }
    return q;
}

StateVector random_state(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CVector v = random_complex_gaussian(n, rng);
    while (v.norm() < 1e-6) {
        v = random_complex_gaussian(n, rng);
    }
    return StateVector::normalized(std::move(v));
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t index) {
    std::uint64_t z = global_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace qpcc
