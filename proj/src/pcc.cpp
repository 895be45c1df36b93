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

#include "qpcc/pcc.hpp"

#include <cmath>
#include <string>

namespace qpcc {

namespace {

std::string fmt_value(double v) {
    if (values_equal(v, std::round(v))) {
        const long r = std::lround(v);
        return (r > 0 ? "+" : "") + std::to_string(r);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void require_same_dim(const Observable &a, const Observable &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(what) +
                                ": observable dimensions differ");
    }
}

// Stacks the row blocks and returns the kernel of the combined map.
SubspaceBasis kernel_of_blocks(const std::vector<CMatrix> &blocks,
                               Eigen::Index dim, const Tolerance &tol) {
    if (blocks.empty()) {
        return SubspaceBasis::full(dim);
    }
    Eigen::Index rows = 0;
    for (const auto &b : blocks) {
        rows += b.rows();
    }
    CMatrix stacked(rows, dim);
    Eigen::Index at = 0;
    for (const auto &b : blocks) {
        stacked.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return kernel(stacked, tol);
}

// Certifies each constraint against the linear space and, when all are
// individually satisfiable, produces a witness. Over the complex field a
// finite union of proper subspaces cannot cover a subspace, so individual
// satisfiability of every constraint already guarantees a common solution;
// sampling only has to find one.
SolutionSpace finish_solution(SubspaceBasis linear,
                              std::vector<NondegeneracyConstraint> constraints,
                              const Tolerance &tol, std::uint64_t seed) {
    SolutionSpace s;
    s.linear_basis = std::move(linear);
    s.constraints = std::move(constraints);
    bool all_satisfiable = !s.linear_basis.empty();
    for (auto &c : s.constraints) {
        if (s.linear_basis.empty()) {
            c.certified_unsatisfiable = true;
            continue;
        }
        const double scale = std::max(1.0, max_abs(c.op));
        bool vanishes_on_basis = true;
        for (Eigen::Index j = 0; j < s.linear_basis.count(); ++j) {
            const double r = (c.op * s.linear_basis.vectors.col(j)).norm();
            if (r > tol.threshold(scale)) {
                vanishes_on_basis = false;
                break;
            }
        }
        c.certified_unsatisfiable = vanishes_on_basis;
        if (c.certified_unsatisfiable) {
            all_satisfiable = false;
        }
    }
    s.feasible = all_satisfiable;
    if (!s.feasible) {
        return s;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 32 && !s.witness; ++attempt) {
        const CVector coeff =
            random_complex_gaussian(s.linear_basis.count(), rng);
        CVector w = s.linear_basis.vectors * coeff;
        const double n = w.norm();
        if (n < 1e-9) {
            continue;
        }
        w /= n;
        bool ok = true;
        for (const auto &c : s.constraints) {
            if (!c.satisfied_by(w)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            s.witness = StateVector::from_coefficients(canonical_phase(w));
        }
    }
    if (!s.witness) {
        throw ConvergenceFailure(
            "witness sampling failed although feasibility is certified");
    }
    return s;
}

void append_constraint(std::vector<NondegeneracyConstraint> &constraints,
                       std::string label, CMatrix op) {
    for (const auto &c : constraints) {
        if (c.label == label) {
            return; // one constraint per distinct condition
        }
    }
    constraints.push_back({std::move(label), std::move(op), false});
}

CMatrix pcc_block(const Observable &a, double alpha, const Observable &b,
                  double beta) {
    const Eigen::Index n = a.dim();
    return (CMatrix::Identity(n, n) - b.outcome(beta).projector) *
           a.outcome(alpha).projector;
}

} // namespace

bool NondegeneracyConstraint::satisfied_by(const CVector &v) const {
    return (op * v).squaredNorm() >= kDegeneracyThreshold;
}

PccVerdict check_pcc(const Observable &a, double alpha, const Observable &b,
                     double beta, const StateVector &psi,
                     const Tolerance &tol) {
    require_same_dim(a, b, "check_pcc");
    if (a.dim() != psi.dim()) {
        throw DimensionMismatch("check_pcc: state dimension differs");
    }
    const CMatrix &ea = a.outcome(alpha).projector;
    const CMatrix &eb = b.outcome(beta).projector;
    const CVector va = ea * psi.coeffs();
    const CVector vba = eb * va;
    PccVerdict v;
    v.residual = (vba - va).norm();
    const double denom = va.squaredNorm();
    v.degenerate = denom < kDegeneracyThreshold;
    if (!v.degenerate) {
        v.conditional_probability =
            std::min(1.0, std::max(0.0, vba.squaredNorm() / denom));
        v.holds =
            std::abs(v.conditional_probability - 1.0) <= tol.threshold(1.0);
    }
    return v;
}

SolutionSpace solve_pair(const Observable &a, double alpha,
                         const Observable &b, double beta,
                         const Tolerance &tol, std::uint64_t seed) {
    require_same_dim(a, b, "solve_pair");
    std::vector<CMatrix> blocks{pcc_block(a, alpha, b, beta)};
    std::vector<NondegeneracyConstraint> constraints;
    append_constraint(constraints, "E_A(" + fmt_value(alpha) + ") psi != 0",
                      a.outcome(alpha).projector);
    return finish_solution(kernel_of_blocks(blocks, a.dim(), tol),
                           std::move(constraints), tol, seed);
}

SolutionSpace solve_gamma(const Observable &a, const Observable &b,
                          const GammaSet &gamma, bool symmetric,
                          const Tolerance &tol, std::uint64_t seed) {
    require_same_dim(a, b, "solve_gamma");
    gamma.validate(a, b);
    std::vector<CMatrix> blocks;
    std::vector<NondegeneracyConstraint> constraints;
    for (const auto &p : gamma.pairs) {
        blocks.push_back(pcc_block(a, p.alpha, b, p.beta));
        append_constraint(constraints,
                          "E_A(" + fmt_value(p.alpha) + ") psi != 0",
                          a.outcome(p.alpha).projector);
        if (symmetric) {
            blocks.push_back(pcc_block(b, p.beta, a, p.alpha));
            append_constraint(constraints,
                              "E_B(" + fmt_value(p.beta) + ") psi != 0",
                              b.outcome(p.beta).projector);
        }
    }
    return finish_solution(kernel_of_blocks(blocks, a.dim(), tol),
                           std::move(constraints), tol, seed);
}

SymmetryReport is_symmetric_state(const Observable &a, double alpha,
                                  const Observable &b, double beta,
                                  const StateVector &psi,
                                  const Tolerance &tol) {
    require_same_dim(a, b, "is_symmetric_state");
    if (a.dim() != psi.dim()) {
        throw DimensionMismatch("is_symmetric_state: state dimension differs");
    }
    const CVector va = a.outcome(alpha).projector * psi.coeffs();
    const CVector vb = b.outcome(beta).projector * psi.coeffs();
    SymmetryReport r;
    r.commuting = commutes(a, b, tol);
    r.difference = (va - vb).norm();
    r.norm_a = va.norm();
    r.norm_b = vb.norm();
    r.symmetric = r.difference <= tol.threshold(1.0) &&
                  r.norm_a * r.norm_a >= kDegeneracyThreshold &&
                  r.norm_b * r.norm_b >= kDegeneracyThreshold;
    return r;
}

std::vector<JointEigenspace> joint_eigenspaces(const Observable &a,
                                               const Observable &b,
                                               const Tolerance &tol) {
    require_same_dim(a, b, "joint_eigenspaces");
    if (!commutes(a, b, tol)) {
        throw NotCommuting(
            "joint eigenspace decomposition needs a commuting pair");
    }
    std::vector<JointEigenspace> out;
    for (const auto &oa : a.outcomes()) {
        for (const auto &ob : b.outcomes()) {
            JointEigenspace j;
            j.alpha = oa.value;
            j.beta = ob.value;
            j.basis = intersect(oa.eigenbasis, ob.eigenbasis, tol);
            out.push_back(std::move(j));
        }
    }
    return out;
}

SolutionSpace characterize_dichotomous(const Observable &a,
                                       const Observable &b, int sign,
                                       const Tolerance &tol,
                                       std::uint64_t seed) {
    require_same_dim(a, b, "characterize_dichotomous");
    if (sign != 1 && sign != -1) {
        throw ValidationError("sign must be +1 or -1");
    }
    if (!a.dichotomous() || !b.dichotomous()) {
        throw NotDichotomous(
            "characterization needs two dichotomous observables");
    }
    if (!commutes(a, b, tol)) {
        throw NotCommuting("characterization needs a commuting pair");
    }
    const std::array<std::pair<double, double>, 2> combos =
        sign == -1 ? std::array<std::pair<double, double>, 2>{{{1.0, -1.0},
                                                               {-1.0, 1.0}}}
                   : std::array<std::pair<double, double>, 2>{{{1.0, 1.0},
                                                               {-1.0, -1.0}}};
    const Eigen::Index n = a.dim();
    CMatrix joined(n, n);
    Eigen::Index cols = 0;
    std::vector<NondegeneracyConstraint> constraints;
    for (const auto &[alpha, beta] : combos) {
        const SubspaceBasis joint = intersect(a.outcome(alpha).eigenbasis,
                                              b.outcome(beta).eigenbasis, tol);
        joined.middleCols(cols, joint.count()) = joint.vectors;
        cols += joint.count();
        append_constraint(constraints,
                          "component in H_AB(" + fmt_value(alpha) + "," +
                              fmt_value(beta) + ") != 0",
                          joint.projector());
    }
    SubspaceBasis space{n, orthonormalize(joined.leftCols(cols), tol)};
    return finish_solution(std::move(space), std::move(constraints), tol,
                           seed);
}

CorrelationReport correlation(const Observable &a, const Observable &b,
                              const StateVector &psi) {
    require_same_dim(a, b, "correlation");
    if (a.dim() != psi.dim()) {
        throw DimensionMismatch("correlation: state dimension differs");
    }
    const CVector abpsi = a.matrix() * (b.matrix() * psi.coeffs());
    CorrelationReport r;
    r.value = psi.coeffs().dot(abpsi);
    r.residual_minus = (abpsi + psi.coeffs()).norm();
    r.residual_plus = (abpsi - psi.coeffs()).norm();
    return r;
}

SharedOutcomeReport shared_outcome_analysis(const Observable &a,
                                            const Observable &b, double beta,
                                            const StateVector &psi,
                                            const Tolerance &tol,
                                            bool dichotomous_branch) {
    require_same_dim(a, b, "shared_outcome_analysis");
    if (a.dim() != psi.dim()) {
        throw DimensionMismatch(
            "shared_outcome_analysis: state dimension differs");
    }
    const Outcome &eb = b.outcome(beta);
    SharedOutcomeReport report;

    // (alpha, beta) and (alpha, beta') can never both be PCC: the joint
    // system forces E_A(alpha) psi = 0.
    for (const auto &oa : a.outcomes()) {
        for (const auto &ob : b.outcomes()) {
            if (values_equal(ob.value, beta)) {
                continue;
            }
            std::vector<CMatrix> blocks{pcc_block(a, oa.value, b, beta),
                                        pcc_block(a, oa.value, b, ob.value)};
            std::vector<NondegeneracyConstraint> constraints;
            append_constraint(constraints,
                              "E_A(" + fmt_value(oa.value) + ") psi != 0",
                              oa.projector);
            const SolutionSpace joint = finish_solution(
                kernel_of_blocks(blocks, a.dim(), tol), std::move(constraints),
                tol, kDefaultSeed);
            SharedOutcomeExclusion ex;
            ex.alpha = oa.value;
            ex.beta_other = ob.value;
            ex.infeasible = !joint.feasible;
            ex.certified = !joint.constraints.empty() &&
                           joint.constraints.front().certified_unsatisfiable;
            report.exclusions.push_back(ex);
        }
    }

    if (!dichotomous_branch) {
        return report;
    }
    if (!a.dichotomous()) {
        throw NotDichotomous(
            "the (+,beta)/(-,beta) branch needs a dichotomous first "
            "observable");
    }
    report.dichotomous_branch = true;
    const CVector diff = eb.projector * psi.coeffs() - psi.coeffs();
    report.eigenstate_residual = diff.norm();
    report.eigenstate_of_beta =
        report.eigenstate_residual <= tol.threshold(1.0);
    for (const double gamma : {1.0, -1.0}) {
        const CMatrix &eg = a.outcome(gamma).projector;
        const CVector comm = eb.projector * (eg * psi.coeffs()) -
                             eg * (eb.projector * psi.coeffs());
        report.commutation_residuals.emplace_back(gamma, comm.norm());
        report.verdicts.emplace_back(gamma,
                                     check_pcc(a, gamma, b, beta, psi, tol));
        report.symmetric.emplace_back(
            gamma, is_symmetric_state(a, gamma, b, beta, psi, tol).symmetric);
        try {
            const double reversed = conditional(a, gamma, b, beta, psi, tol);
            report.max_reversed_conditional =
                std::max(report.max_reversed_conditional, reversed);
        } catch (const DegenerateCondition &) {
            // B = beta itself has vanishing probability; nothing to compare
        }
    }
    return report;
}

CommutatorReport commutator_identities(const Observable &a1,
                                       const Observable &a2,
                                       const Observable &b1,
                                       const Observable &b2,
                                       const StateVector &psi,
                                       const Tolerance &tol) {
    require_same_dim(a1, a2, "commutator_identities");
    require_same_dim(a1, b1, "commutator_identities");
    require_same_dim(a1, b2, "commutator_identities");
    if (a1.dim() != psi.dim()) {
        throw DimensionMismatch(
            "commutator_identities: state dimension differs");
    }
    for (const Observable *a : {&a1, &a2}) {
        for (const Observable *b : {&b1, &b2}) {
            if (!commutes(*a, *b, tol)) {
                throw CrossPairNotCommuting(
                    "every A_i must commute with every B_j");
            }
        }
    }
    for (const Observable *o : {&a1, &a2, &b1, &b2}) {
        if (!o->dichotomous()) {
            throw NotDichotomous(
                "commutator identities are stated for +/-1 observables");
        }
    }
    CommutatorReport r;
    const CVector p1 = b1.outcome(1.0).projector * psi.coeffs() -
                       a1.outcome(-1.0).projector * psi.coeffs();
    const CVector p2 = b2.outcome(1.0).projector * psi.coeffs() -
                       a2.outcome(-1.0).projector * psi.coeffs();
    r.premise_residual_1 = p1.norm();
    r.premise_residual_2 = p2.norm();
    r.premises_hold = r.premise_residual_1 <= tol.threshold(1.0) &&
                      r.premise_residual_2 <= tol.threshold(1.0);

    const CMatrix am1 = a1.matrix();
    const CMatrix am2 = a2.matrix();
    const CMatrix bm1 = b1.matrix();
    const CMatrix bm2 = b2.matrix();
    const CMatrix ka = am1 * am2 - am2 * am1;
    const CMatrix kb = bm1 * bm2 - bm2 * bm1;
    const CVector ka_psi = ka * psi.coeffs();
    const CVector kb_psi = kb * psi.coeffs();
    r.vector_residual = (kb_psi + ka_psi).norm();
    r.scalar_residual =
        std::abs(psi.coeffs().dot(kb_psi) + psi.coeffs().dot(ka_psi));
    // <psi|[A1,A2][B1,B2]|psi> equals +||[A1,A2] psi||^2 on premise states
    // (the commutator of Hermitian operators is anti-Hermitian).
    const Complex product = psi.coeffs().dot(ka * kb_psi);
    r.product_residual = std::abs(product - Complex(ka_psi.squaredNorm(), 0));
    return r;
}

CovarianceReport unitary_covariance_check(const Observable &a,
                                          const Observable &b,
                                          const GammaSet &gamma,
                                          const CMatrix &u,
                                          const Tolerance &tol,
                                          std::uint64_t seed) {
    if (!is_unitary(u, tol)) {
        throw NotUnitary("covariance check requires a unitary matrix");
    }
    const Observable au = a.conjugated(u, tol);
    const Observable bu = b.conjugated(u, tol);
    const SolutionSpace plain = solve_gamma(a, b, gamma, false, tol, seed);
    const SolutionSpace rotated = solve_gamma(au, bu, gamma, false, tol, seed);
    CovarianceReport r;
    r.feasibility_match = plain.feasible == rotated.feasible;
    r.dimension_match =
        plain.linear_basis.count() == rotated.linear_basis.count();
    r.witness_transported = true;
    if (plain.witness) {
        const StateVector moved =
            StateVector::normalized(u * plain.witness->coeffs());
        for (const auto &p : gamma.pairs) {
            if (!check_pcc(au, p.alpha, bu, p.beta, moved, tol).holds) {
                r.witness_transported = false;
            }
        }
    }
    if (rotated.witness) {
        const StateVector back =
            StateVector::normalized(u.adjoint() * rotated.witness->coeffs());
        for (const auto &p : gamma.pairs) {
            if (!check_pcc(a, p.alpha, b, p.beta, back, tol).holds) {
                r.witness_transported = false;
            }
        }
    }
    r.invariant =
        r.feasibility_match && r.dimension_match && r.witness_transported;
    return r;
}

namespace {

// Eigenbasis matrix [v(+1) v(-1)] of a dichotomous observable on C^2.
CMatrix local_frame(const Observable &o) {
    CMatrix f(2, 2);
    f.col(0) = o.outcome(1.0).eigenbasis.vectors.col(0);
    f.col(1) = o.outcome(-1.0).eigenbasis.vectors.col(0);
    return f;
}

bool pair_is_pcc(const Observable &a, const Observable &b,
                 const StateVector &psi, const Tolerance &tol) {
    return check_pcc(a, 1.0, b, -1.0, psi, tol).holds &&
           check_pcc(a, -1.0, b, 1.0, psi, tol).holds;
}

} // namespace

FamilyInvarianceReport family_invariance_check(const Observable &local_a,
                                               const Observable &local_b,
                                               int trials, std::uint64_t seed,
                                               const Tolerance &tol) {
    if (local_a.dim() != 2 || local_b.dim() != 2 || !local_a.dichotomous() ||
        !local_b.dichotomous()) {
        throw NotDichotomous(
            "family invariance needs two dichotomous observables on a "
            "two-dimensional space");
    }
    const CMatrix f = local_frame(local_a);
    const CMatrix g = local_frame(local_b);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const CVector fp = f.col(0);
    const CVector fm = f.col(1);
    const CVector gp = g.col(0);
    const CVector gm = g.col(1);
    const StateVector singlet = StateVector::normalized(
        inv_sqrt2 * (kron(fp, gm) - kron(fm, gp)).eval());
    const StateVector control = StateVector::normalized(
        inv_sqrt2 * (kron(fp, gm) + kron(fm, gp)).eval());

    const std::vector<Eigen::Index> dims{2, 2};
    const auto lifted_pair = [&](const CMatrix &w) {
        const CMatrix ua = f * w * f.adjoint();
        const CMatrix ub = g * w * g.adjoint();
        return std::pair<Observable, Observable>{
            Observable::lift_local(local_a.conjugated(ua, tol), 0, dims),
            Observable::lift_local(local_b.conjugated(ub, tol), 1, dims)};
    };

    FamilyInvarianceReport report;
    report.trials = trials;
    {
        const auto [aw, bw] = lifted_pair(CMatrix::Identity(2, 2));
        report.identity_ok = pair_is_pcc(aw, bw, singlet, tol);
    }
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, t + 1);
        const CMatrix w = random_unitary(2, trial_seed);
        const auto [aw, bw] = lifted_pair(w);
        FamilyTrial trial;
        trial.seed = trial_seed;
        trial.singlet_ok = pair_is_pcc(aw, bw, singlet, tol);
        trial.control_ok = pair_is_pcc(aw, bw, control, tol);
        report.singlet_passes += trial.singlet_ok ? 1 : 0;
        report.control_failures += trial.control_ok ? 0 : 1;
        report.per_trial.push_back(trial);
    }
    return report;
}

SolutionSpace solve_triple(const Observable &a, const Observable &b,
                           const Observable &c,
                           const std::vector<ValueTriple> &triples, bool joint,
                           const Tolerance &tol, std::uint64_t seed) {
    require_same_dim(a, b, "solve_triple");
    require_same_dim(a, c, "solve_triple");
    if (joint) {
        if (!commutes(a, b, tol) || !commutes(b, c, tol) ||
            !commutes(a, c, tol)) {
            throw NotCommuting(
                "joint triple correlations need pairwise commuting "
                "observables");
        }
    }
    std::vector<CMatrix> blocks;
    std::vector<NondegeneracyConstraint> constraints;
    const Eigen::Index n = a.dim();
    const CMatrix id = CMatrix::Identity(n, n);
    for (const auto &t : triples) {
        const CMatrix &ea = a.outcome(t.alpha).projector;
        const CMatrix &ebp = b.outcome(t.beta).projector;
        const CMatrix &ec = c.outcome(t.gamma).projector;
        const std::string tag = "(" + fmt_value(t.alpha) + "," +
                                fmt_value(t.beta) + "," + fmt_value(t.gamma) +
                                ")";
        if (joint) {
            blocks.push_back(ebp * ea - ec * ebp);
            blocks.push_back(ec * ebp - ea * ec);
            append_constraint(constraints,
                              "E_B E_A psi != 0 for " + tag, ebp * ea);
            append_constraint(constraints,
                              "E_C E_B psi != 0 for " + tag, ec * ebp);
            append_constraint(constraints,
                              "E_A E_C psi != 0 for " + tag, ea * ec);
        } else {
            blocks.push_back((id - ec) * ebp * ea);
            append_constraint(constraints,
                              "E_B E_A psi != 0 for " + tag, ebp * ea);
        }
    }
    return finish_solution(kernel_of_blocks(blocks, n, tol),
                           std::move(constraints), tol, seed);
}

} // namespace qpcc
