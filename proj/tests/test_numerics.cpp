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

#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qpcc/numerics.hpp"

using namespace qpcc;
using qpcc::testing::gauss_nullspace;
using qpcc::testing::spans_match;
using qpcc::testing::unit;

namespace {

CMatrix random_hermitian(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        g.col(j) = random_complex_gaussian(n, rng);
    }
    return 0.5 * (g + g.adjoint()).eval();
}

} // namespace

TEST_CASE("eigh diagonal matrix") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    const EighResult r = eigh(h);
    CHECK(r.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0));
    // Eigenvectors are identity columns up to permutation and phase.
    CHECK(std::abs(r.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(r.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eigh pauli-x") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    const EighResult r = eigh(h);
    CHECK(r.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(r.eigenvectors(0, 0)) == doctest::Approx(s));
    CHECK(std::abs(r.eigenvectors(1, 0)) == doctest::Approx(s));
    // Canonical phase: largest-modulus component (the first) real positive.
    CHECK(r.eigenvectors(0, 0).real() == doctest::Approx(s));
    CHECK(r.eigenvectors(0, 0).imag() == doctest::Approx(0.0));
}

TEST_CASE("eigh reconstructs random hermitian input") {
    const CMatrix h = random_hermitian(6, 7001);
    const EighResult r = eigh(h);
    const CMatrix rebuilt = r.eigenvectors *
                            r.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                            r.eigenvectors.adjoint();
    CHECK(max_abs(rebuilt - h) <= 1e-9);
    const CMatrix gram =
        r.eigenvectors.adjoint() * r.eigenvectors -
        CMatrix::Identity(6, 6);
    CHECK(max_abs(gram) <= 1e-12);
}

TEST_CASE("eigh residual bound over dimensions up to 16") {
    for (Eigen::Index n : {2, 5, 9, 16}) {
        const CMatrix h = random_hermitian(n, 100 + static_cast<std::uint64_t>(n));
        const EighResult r = eigh(h);
        const CMatrix lhs = h * r.eigenvectors;
        const CMatrix rhs =
            r.eigenvectors *
            r.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>();
        CHECK(max_abs(lhs - rhs) <= 1e-8 * std::max(1.0, max_abs(h)));
    }
}

TEST_CASE("eigh rejects bad input") {
    CHECK_THROWS_AS(eigh(CMatrix::Zero(2, 3)), NonSquare);
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0; // not Hermitian
    CHECK_THROWS_AS(eigh(m), NotHermitian);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigh(m), ValidationError);
}

TEST_CASE("kernel of identity and of zero") {
    CHECK(kernel(CMatrix::Identity(3, 3)).count() == 0);
    CHECK(kernel(CMatrix::Zero(3, 3)).count() == 3);
}

TEST_CASE("kernel of a rank-one projector") {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0; // |e1><e1|
    const SubspaceBasis k = kernel(m);
    REQUIRE(k.count() == 3);
    for (Eigen::Index j = 0; j < 3; ++j) {
        CHECK(std::abs(k.vectors(0, j)) <= 1e-12); // orthogonal to e1
        CHECK((m * k.vectors.col(j)).norm() <= 1e-12);
    }
    // Independent route: Gauss-Jordan nullspace spans the same subspace.
    CHECK(spans_match(k.vectors, gauss_nullspace(m)));
}

TEST_CASE("kernel/rank duality on random matrices") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index rows = 2 + static_cast<Eigen::Index>(rng() % 6);
        const Eigen::Index cols = 2 + static_cast<Eigen::Index>(rng() % 6);
        const Eigen::Index inner = 1 + static_cast<Eigen::Index>(rng() % 4);
        CMatrix left(rows, inner);
        CMatrix right(inner, cols);
        for (Eigen::Index j = 0; j < inner; ++j) {
            left.col(j) = random_complex_gaussian(rows, rng);
            right.row(j) = random_complex_gaussian(cols, rng).transpose();
        }
        const CMatrix m = left * right; // rank <= inner by construction
        const Eigen::Index r = rank_of(m);
        CHECK(r <= inner);
        CHECK(kernel(m).count() + r == cols);
        CHECK(spans_match(kernel(m).vectors, gauss_nullspace(m)));
    }
}

TEST_CASE("intersect axis-aligned spans") {
    const SubspaceBasis u = SubspaceBasis::span_of({unit(4, 0), unit(4, 1)});
    const SubspaceBasis w = SubspaceBasis::span_of({unit(4, 1), unit(4, 2)});
    const SubspaceBasis both = intersect(u, w);
    REQUIRE(both.count() == 1);
    CHECK(std::abs(both.vectors(1, 0)) == doctest::Approx(1.0));

    const SubspaceBasis perp = SubspaceBasis::span_of({unit(4, 3)});
    CHECK(intersect(u, perp).count() == 0);
}

TEST_CASE("intersect recovers an engineered overlap after rotation") {
    const Eigen::Index n = 5;
    std::mt19937_64 rng(2024);
    // Start from axis-aligned spans sharing span{e1, e2}, then rotate.
    const CMatrix q = random_unitary(n, 99);
    std::vector<CVector> ucols{q.col(0), q.col(1), q.col(2)};
    std::vector<CVector> wcols{q.col(0), q.col(1), q.col(3)};
    const SubspaceBasis u = SubspaceBasis::span_of(ucols);
    const SubspaceBasis w = SubspaceBasis::span_of(wcols);
    const SubspaceBasis overlap = intersect(u, w);
    REQUIRE(overlap.count() == 2);
    for (Eigen::Index j = 0; j < overlap.count(); ++j) {
        CHECK(contains(u, overlap.vectors.col(j)));
        CHECK(contains(w, overlap.vectors.col(j)));
    }
    CHECK(intersect(u, w).count() == intersect(w, u).count());
    (void)rng;
}

TEST_CASE("containment checks") {
    const SubspaceBasis u = SubspaceBasis::span_of({unit(3, 0), unit(3, 1)});
    CHECK(contains(u, unit(3, 0)));
    CHECK_FALSE(contains(u, unit(3, 2)));
    const SubspaceBasis small = SubspaceBasis::span_of({unit(3, 1)});
    CHECK(contains_subspace(u, small));
    CHECK_FALSE(contains_subspace(small, u));
    CHECK(same_subspace(u, u));
    CHECK_THROWS_AS(contains(u, unit(4, 0)), DimensionMismatch);
}

TEST_CASE("orthonormalize drops dependent directions") {
    CMatrix cols(3, 3);
    cols.col(0) = unit(3, 0);
    cols.col(1) = 2.0 * unit(3, 0); // dependent
    cols.col(2) = unit(3, 0) + unit(3, 1);
    const CMatrix q = orthonormalize(cols);
    REQUIRE(q.cols() == 2);
    CHECK(max_abs(q.adjoint() * q - CMatrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("state vector construction") {
    CHECK_THROWS_AS(StateVector::from_coefficients(2.0 * unit(2, 0)),
                    ValidationError);
    CHECK_THROWS_AS(StateVector::normalized(CVector::Zero(2)),
                    ValidationError);
    const StateVector s = StateVector::normalized(3.0 * unit(2, 1));
    CHECK(s.coeffs().norm() == doctest::Approx(1.0));
}

TEST_CASE("random unitary is unitary and deterministic") {
    const CMatrix u1 = random_unitary(4, 7);
    const CMatrix u2 = random_unitary(4, 7);
    CHECK(is_unitary(u1, Tolerance{}));
    CHECK(max_abs(u1 - u2) == 0.0);
    CHECK(max_abs(u1 - random_unitary(4, 8)) > 1e-3);
}

TEST_CASE("kron has slot-major layout") {
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const CMatrix zi = kron(z, CMatrix::Identity(2, 2));
    CHECK(zi(0, 0) == Complex(1.0));
    CHECK(zi(1, 1) == Complex(1.0));
    CHECK(zi(2, 2) == Complex(-1.0));
    CHECK(zi(3, 3) == Complex(-1.0));
    const CMatrix iz = kron(CMatrix::Identity(2, 2), z);
    CHECK(iz(1, 1) == Complex(-1.0));
    CHECK(iz(2, 2) == Complex(1.0));
}

TEST_CASE("cluster_ascending groups near-degenerate values") {
    RVector v(5);
    v << -1.0, -1.0 + 1e-12, 0.5, 0.5 + 1e-12, 2.0;
    const auto groups = cluster_ascending(v, 1e-8);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].size() == 2);
    CHECK(groups[1].size() == 2);
    CHECK(groups[2].size() == 1);
}
