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

// Acceptance suite: every check below pins a numbered behavioural
// guarantee at a fixed tolerance and prints one PASS/FAIL line. The
// process exits 1 if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "setups.hpp"
#include "qpcc/cli.hpp"
#include "qpcc/pcc.hpp"
#include "qpcc/scenario_library.hpp"

using namespace qpcc;
using namespace qpcc::testing;

namespace {

constexpr double kTol = 1e-9;

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
    void require_near(double actual, double want, const std::string &what,
                      double tol = kTol) {
        if (std::abs(actual - want) > tol) {
            failures.push_back(what + " (got " + std::to_string(actual) +
                               ")");
        }
    }
    void require_max(double actual, double bound, const std::string &what) {
        if (actual > bound) {
            failures.push_back(what + " (got " + std::to_string(actual) +
                               ")");
        }
    }
};

SubspaceBasis axis_span(Eigen::Index dim,
                        std::initializer_list<Eigen::Index> idx) {
    std::vector<CVector> vs;
    for (const Eigen::Index i : idx) {
        vs.push_back(unit(dim, i));
    }
    return SubspaceBasis::span_of(vs);
}

Pair aeqb_pair() {
    return {spans(3, {{0, 1}, {2}}), spans(3, {{0, 1}, {2}})};
}

Pair embedded8_pair() {
    const Observable a4 = spans(4, {{0, 1}, {2, 3}});
    return {Observable::lift_local(a4, 0, {4, 2}),
            Observable::lift_local(pauli_z2(), 1, {4, 2})};
}

const GammaSet kOpposite{{{1.0, -1.0}, {-1.0, 1.0}}};
const GammaSet kEqual{{{1.0, 1.0}, {-1.0, -1.0}}};

struct NamedPair {
    std::string name;
    Pair pair;
};

std::vector<NamedPair> commuting_pairs() {
    return {{"dim5", dim5_pair()},
            {"dim4", dim4_pair()},
            {"dim4_split31", dim4_split31_pair()},
            {"dim3", dim3_pair()},
            {"dim2", dim2_pair()},
            {"tensor22", tensor22_pair()},
            {"aeqb", aeqb_pair()},
            {"embedded8", embedded8_pair()}};
}

// ------------------------------------------------------------------ 1
void crit_dim5(Checker &c) {
    const Pair p = dim5_pair();
    const SolutionSpace opp = solve_gamma(p.a, p.b, kOpposite, false);
    c.require(!opp.feasible, "opposite-value solve must be infeasible");
    const SolutionSpace eq = solve_gamma(p.a, p.b, kEqual, false);
    c.require(eq.feasible, "equal-value solve must be feasible");
    c.require(same_subspace(eq.linear_basis, axis_span(5, {0, 1, 3, 4}),
                            Tolerance{}),
              "equal-value space must be span{e1,e2,e4,e5}");
}

// ------------------------------------------------------------------ 2
void crit_dim4(Checker &c) {
    const Pair p = dim4_pair();
    const SolutionSpace opp = solve_gamma(p.a, p.b, kOpposite, false);
    c.require(opp.feasible && same_subspace(opp.linear_basis,
                                            axis_span(4, {1, 2}),
                                            Tolerance{}),
              "opposite-value space must be span{e2,e3}");
    const Pair split = dim4_split31_pair();
    const SolutionSpace gone = solve_gamma(split.a, split.b, kOpposite, false);
    c.require(!gone.feasible, "3/1 against 1/3 split must be infeasible");
    const SolutionSpace eq = solve_gamma(split.a, split.b, kEqual, false);
    c.require(eq.feasible && same_subspace(eq.linear_basis,
                                           axis_span(4, {0, 3}), Tolerance{}),
              "equal-value space must be span{e1,e4}");
}

// ------------------------------------------------------------------ 3
void crit_dim3(Checker &c) {
    const Pair p = dim3_pair();
    c.require(!solve_gamma(p.a, p.b, kOpposite, false).feasible,
              "no opposite-value entangled states");
    const StateVector e2 = basis_state(3, 1);
    c.require(check_pcc(p.a, 1.0, p.b, -1.0, e2).holds,
              "middle state must pass the one-directional test");
    bool raised = false;
    try {
        conditional(p.b, 1.0, p.a, -1.0, e2);
    } catch (const DegenerateCondition &) {
        raised = true;
    }
    c.require(raised, "reversed pair must raise DegenerateCondition");
    const SolutionSpace eq = solve_gamma(p.a, p.b, kEqual, false);
    c.require(eq.feasible && same_subspace(eq.linear_basis,
                                           axis_span(3, {0, 2}), Tolerance{}),
              "equal-value space must be span{e1,e3}");
}

// ------------------------------------------------------------------ 4
void crit_dim2(Checker &c) {
    const Pair p = dim2_pair();
    int tested = 0;
    std::uint64_t seed = 40000;
    while (tested < 100) {
        const StateVector psi = random_state(2, seed++);
        if (std::abs(psi.coeffs()[0]) <= 1e-6 ||
            std::abs(psi.coeffs()[1]) <= 1e-6) {
            continue;
        }
        ++tested;
        if (!check_pcc(p.a, 1.0, p.b, -1.0, psi).holds ||
            !check_pcc(p.a, -1.0, p.b, 1.0, psi).holds) {
            c.require(false, "state " + std::to_string(seed) + " failed");
            return;
        }
    }
}

// ------------------------------------------------------------------ 5
void crit_rotated(Checker &c) {
    const Pair rot = rotated4_pair();
    const SolutionSpace s = solve_pair(rot.a, 1.0, rot.b, 1.0);
    c.require(!s.feasible, "rotated pair must be infeasible");
    c.require(!s.constraints.empty() &&
                  s.constraints.front().certified_unsatisfiable,
              "infeasibility must be certified by containment");
    c.require(!s.witness.has_value(), "no witness may be produced");
}

// ------------------------------------------------------------------ 6
void crit_correlations(Checker &c) {
    struct Case {
        std::string name;
        Pair pair;
        int sign;
    };
    const std::vector<Case> cases = {
        {"dim4", dim4_pair(), -1},
        {"dim2", dim2_pair(), -1},
        {"tensor22", tensor22_pair(), -1},
        {"embedded8", embedded8_pair(), -1},
        {"dim5", dim5_pair(), 1},
        {"dim4", dim4_pair(), 1},
        {"dim4_split31", dim4_split31_pair(), 1},
        {"dim3", dim3_pair(), 1},
        {"tensor22", tensor22_pair(), 1},
        {"aeqb", aeqb_pair(), 1},
        {"embedded8", embedded8_pair(), 1},
    };
    for (const auto &[name, p, sign] : cases) {
        const GammaSet &gamma = sign == -1 ? kOpposite : kEqual;
        for (const std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
            const SolutionSpace s =
                solve_gamma(p.a, p.b, gamma, false, {}, seed);
            if (!s.feasible) {
                c.require(false, name + ": expected a feasible space");
                break;
            }
            const StateVector &w = *s.witness;
            const CorrelationReport r = correlation(p.a, p.b, w);
            c.require(std::abs(r.value - Complex(sign, 0.0)) <= kTol,
                      name + ": correlation must be " + std::to_string(sign));
            c.require_max(sign == -1 ? r.residual_minus : r.residual_plus,
                          kTol, name + ": eigenrelation residual");
            if (sign == -1) {
                c.require_near(born(p.a, 1.0, w), born(p.b, -1.0, w),
                               name + ": P(A=+) must equal P(B=-)");
                c.require_near(born(p.a, -1.0, w), born(p.b, 1.0, w),
                               name + ": P(A=-) must equal P(B=+)");
            } else {
                c.require_near(born(p.a, 1.0, w), born(p.b, 1.0, w),
                               name + ": P(A=+) must equal P(B=+)");
                c.require_near(born(p.a, -1.0, w), born(p.b, -1.0, w),
                               name + ": P(A=-) must equal P(B=-)");
            }
        }
    }
}

// ------------------------------------------------------------------ 7
void crit_decomposition(Checker &c) {
    for (const auto &[name, p] : commuting_pairs()) {
        Eigen::Index total = 0;
        for (const auto &j : joint_eigenspaces(p.a, p.b)) {
            total += j.basis.count();
        }
        c.require(total == p.a.dim(),
                  name + ": joint dimensions must sum to the ambient one");
        for (const int sign : {1, -1}) {
            const GammaSet &gamma = sign == 1 ? kEqual : kOpposite;
            const SolutionSpace a = characterize_dichotomous(p.a, p.b, sign);
            const SolutionSpace b = solve_gamma(p.a, p.b, gamma, false);
            c.require(a.feasible == b.feasible,
                      name + ": feasibility must agree");
            c.require(same_subspace(a.linear_basis, b.linear_basis,
                                    Tolerance{}),
                      name + ": solution spaces must coincide");
        }
    }
}

// ------------------------------------------------------------------ 8
void crit_shared_outcome(Checker &c) {
    const Pair p = dim4_pair();
    const StateVector psi =
        StateVector::normalized(unit(4, 0) + unit(4, 2));
    c.require_near(conditional(p.b, 1.0, p.a, 1.0, psi), 1.0,
                   "P(B=+|A=+) must be 1");
    c.require_near(conditional(p.b, 1.0, p.a, -1.0, psi), 1.0,
                   "P(B=+|A=-) must be 1");
    const SharedOutcomeReport r = shared_outcome_analysis(p.a, p.b, 1.0, psi);
    c.require_max(r.max_reversed_conditional, 1.0 - 0.4,
                  "reversed conditionals must stay far from 1");
    c.require_near(r.max_reversed_conditional, 0.5,
                   "largest reversed conditional must be 1/2");
    for (const auto &ex : r.exclusions) {
        c.require(ex.infeasible && ex.certified,
                  "two-partner joint system must be certified infeasible");
    }
}

// ------------------------------------------------------------------ 9
void crit_commutators(Checker &c) {
    const Observable a1 = Observable::lift_local(pauli_z2(), 0, {2, 2});
    const Observable a2 = Observable::lift_local(pauli_x2(), 0, {2, 2});
    const Observable b1 = Observable::lift_local(pauli_z2(), 1, {2, 2});
    const Observable b2 = Observable::lift_local(pauli_x2(), 1, {2, 2});
    const CommutatorReport r =
        commutator_identities(a1, a2, b1, b2, singlet22());
    c.require(r.premises_hold, "dual-pair premises must hold on the state");
    c.require_max(r.vector_residual, kTol, "vector identity residual");
    c.require_max(r.scalar_residual, kTol, "scalar identity residual");
    c.require_max(r.product_residual, kTol, "product identity residual");
}

// ----------------------------------------------------------------- 10
void crit_family(Checker &c) {
    const FamilyInvarianceReport r =
        family_invariance_check(pauli_z2(), pauli_x2(), 20);
    c.require(r.identity_ok, "identity rotation must pass");
    c.require(r.singlet_passes == 20,
              "antisymmetric state must pass all 20 rotations (passed " +
                  std::to_string(r.singlet_passes) + ")");
    c.require(r.control_failures >= 1,
              "symmetric control state must fail at least once");
}

// ----------------------------------------------------------------- 11
void crit_triple(Checker &c) {
    const Observable a = Observable::lift_local(pauli_z2(), 0, {2, 2, 2});
    const Observable b = Observable::lift_local(pauli_z2(), 1, {2, 2, 2});
    const Observable cc = Observable::lift_local(pauli_z2(), 2, {2, 2, 2});
    const SolutionSpace s = solve_triple(
        a, b, cc, {{1.0, 1.0, 1.0}, {-1.0, -1.0, -1.0}}, true);
    c.require(s.feasible, "joint triple system must be feasible");
    c.require(same_subspace(s.linear_basis, axis_span(8, {0, 7}),
                            Tolerance{}),
              "solution must be exactly the two aligned branches");
    if (s.witness) {
        const Chain chain{{{a, 1.0}, {b, 1.0}}};
        c.require_near(chain_conditional(chain, {cc, 1.0}, *s.witness), 1.0,
                       "third outcome must be certain after the chain");
    } else {
        c.require(false, "witness missing");
    }
}

// ----------------------------------------------------------------- 12
void crit_properties(Checker &c) {
    // Conditional probabilities over all outcomes sum to one.
    for (const auto &[name, p] : commuting_pairs()) {
        for (int k = 0; k < 10; ++k) {
            const StateVector psi =
                random_state(p.a.dim(), 7000 + static_cast<std::uint64_t>(k));
            for (const auto &oa : p.a.outcomes()) {
                if (born(p.a, oa.value, psi) < 1e-6) {
                    continue;
                }
                double total = 0.0;
                for (const auto &ob : p.b.outcomes()) {
                    total +=
                        conditional(p.b, ob.value, p.a, oa.value, psi);
                }
                c.require_near(total, 1.0,
                               name + ": conditionals must sum to 1");
            }
        }
    }
    // Projective update is idempotent.
    for (const auto &[name, p] : commuting_pairs()) {
        const StateVector psi = random_state(p.a.dim(), 81);
        for (const auto &oa : p.a.outcomes()) {
            if (born(p.a, oa.value, psi) < 1e-6) {
                continue;
            }
            const StateVector once = luders(p.a, oa.value, psi);
            const StateVector twice = luders(p.a, oa.value, once);
            c.require_max((once.coeffs() - twice.coeffs()).norm(), 1e-12,
                          name + ": update must be idempotent");
        }
    }
    // Verdicts are invariant under simultaneous conjugation.
    for (const auto &[name, p] : commuting_pairs()) {
        for (int t = 0; t < 20; ++t) {
            const CMatrix u = random_unitary(
                p.a.dim(), derive_seed(90210, static_cast<std::uint64_t>(t)));
            for (const GammaSet &gamma : {kOpposite, kEqual}) {
                if (!unitary_covariance_check(p.a, p.b, gamma, u).invariant) {
                    c.require(false, name + ": covariance violated");
                }
            }
        }
    }
    // Kernel/rank duality.
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 30; ++t) {
        const Eigen::Index rows = 2 + static_cast<Eigen::Index>(rng() % 5);
        const Eigen::Index cols = 2 + static_cast<Eigen::Index>(rng() % 5);
        const Eigen::Index inner = 1 + static_cast<Eigen::Index>(rng() % 3);
        CMatrix left(rows, inner);
        CMatrix right(inner, cols);
        for (Eigen::Index j = 0; j < inner; ++j) {
            left.col(j) = random_complex_gaussian(rows, rng);
            right.row(j) = random_complex_gaussian(cols, rng).transpose();
        }
        const CMatrix m = left * right;
        c.require(kernel(m).count() + rank_of(m) == cols,
                  "kernel dimension plus rank must equal the column count");
    }
    // Byte-identical double runs, CLI surface included.
    const auto run_cli = [](const std::vector<std::string> &args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = qpcc::cli::run(args, out, err);
        return std::pair<int, std::string>{code, out.str()};
    };
    const auto suite1 = run_cli({"paper-suite", "--format", "json"});
    const auto suite2 = run_cli({"paper-suite", "--format", "json"});
    c.require(suite1.first == 0, "reference suite must exit 0");
    c.require(suite1.second == suite2.second,
              "reference suite output must be byte-identical across runs");
    const std::string fixture =
        std::string(QPCC_TEST_DIR) + "/fixtures/dim4_amb.json";
    const auto run1 = run_cli({"run", fixture, "--format", "json"});
    const auto run2 = run_cli({"run", fixture, "--format", "json"});
    c.require(run1.first == 0, "fixture run must exit 0");
    c.require(run1.second == run2.second,
              "fixture run output must be byte-identical across runs");
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char *description;
        std::function<void(Checker &)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "dim-5 layout: opposite values infeasible, equal values span "
            "{e1,e2,e4,e5}",
         crit_dim5},
        {2, "dim-4 layouts: span {e2,e3}, 3/1-vs-1/3 infeasible, equal "
            "values span {e1,e4}",
         crit_dim4},
        {3, "dim-3 layout: one-directional correlation and degenerate "
            "reversal",
         crit_dim3},
        {4, "dim-2 layout: 100 seeded states all perfectly anti-correlated",
         crit_dim2},
        {5, "rotated non-commuting pair: infeasibility certified by "
            "containment",
         crit_rotated},
        {6, "correlation identities and matched outcome probabilities on "
            "every witness",
         crit_correlations},
        {7, "joint decomposition completeness and solver cross-check",
         crit_decomposition},
        {8, "shared-outcome state: forward certainty, reversed 1/2, "
            "two-partner exclusion",
         crit_shared_outcome},
        {9, "commutator identities on the two-pair tensor state",
         crit_commutators},
        {10, "rotation-family invariance of the antisymmetric state with "
             "negative control",
         crit_family},
        {11, "triple solver: two aligned branches and a certain third "
             "outcome",
         crit_triple},
        {12, "property suites: normalization, idempotence, covariance, "
             "rank duality, determinism",
         crit_properties},
    };

    int failed = 0;
    for (const auto &crit : criteria) {
        Checker checker;
        try {
            crit.fn(checker);
        } catch (const std::exception &e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = checker.failures.empty();
        std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", crit.number,
                    crit.description);
        for (const auto &f : checker.failures) {
            std::printf("        - %s\n", f.c_str());
        }
        failed += ok ? 0 : 1;
    }
    std::printf("acceptance: %d/%d criteria passed\n",
                static_cast<int>(criteria.size()) - failed,
                static_cast<int>(criteria.size()));
    return failed == 0 ? 0 : 1;
}
