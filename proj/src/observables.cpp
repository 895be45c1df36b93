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

#include "qpcc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <set>
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

} // namespace

bool values_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

Observable::Observable(Eigen::Index dim, std::vector<Outcome> outcomes)
    : dim_(dim), outcomes_(std::move(outcomes)) {
    std::sort(outcomes_.begin(), outcomes_.end(),
              [](const Outcome &x, const Outcome &y) {
                  return x.value < y.value;
              });
}

Observable Observable::from_matrix(const CMatrix &h, const Tolerance &tol) {
    const EighResult eig = eigh(h, tol); // NonSquare/NotHermitian checked here
    const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
    const auto groups =
        cluster_ascending(eig.eigenvalues, kEigenvalueClusterGap * scale);
    std::vector<Outcome> outcomes;
    outcomes.reserve(groups.size());
    for (const auto &group : groups) {
        CMatrix basis(h.rows(), static_cast<Eigen::Index>(group.size()));
        double value = 0.0;
        for (std::size_t k = 0; k < group.size(); ++k) {
            basis.col(static_cast<Eigen::Index>(k)) =
                eig.eigenvectors.col(group[k]);
            value += eig.eigenvalues[group[k]];
        }
        value /= static_cast<double>(group.size());
        Outcome o;
        o.value = value;
        o.eigenbasis = SubspaceBasis{h.rows(), basis};
        o.projector = o.eigenbasis.projector();
        outcomes.push_back(std::move(o));
    }
    Observable obs(h.rows(), std::move(outcomes));
    obs.validate(tol);
    return obs;
}

Observable Observable::from_eigenspaces(
    const std::vector<std::pair<double, std::vector<CVector>>> &groups,
    const Tolerance &tol) {
    if (groups.empty()) {
        throw ValidationError("observable needs at least one eigenspace");
    }
    const Eigen::Index dim = groups.front().second.empty()
                                 ? 0
                                 : groups.front().second.front().size();
    std::set<long long> seen_values;
    std::vector<Outcome> outcomes;
    for (const auto &[value, vectors] : groups) {
        if (vectors.empty()) {
            throw ValidationError("eigenspace for value " + fmt_value(value) +
                                  " has no vectors");
        }
        for (const auto &v : vectors) {
            if (v.size() != dim) {
                throw DimensionMismatch(
                    "eigenspace vectors have inconsistent dimensions");
            }
            require_finite(v, "eigenspace vector");
        }
        for (const auto &other : outcomes) {
            if (values_equal(other.value, value)) {
                throw ValidationError("duplicate outcome value " +
                                      fmt_value(value));
            }
        }
        Outcome o;
        o.value = value;
        o.eigenbasis = SubspaceBasis::span_of(vectors, tol);
        if (o.eigenbasis.empty()) {
            throw ValidationError("eigenspace for value " + fmt_value(value) +
                                  " collapsed to the zero subspace");
        }
        o.projector = o.eigenbasis.projector();
        outcomes.push_back(std::move(o));
    }
    // Cross-group orthogonality; non-orthogonal groups cannot form a
    // spectral family.
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
            const CMatrix overlap = outcomes[i].eigenbasis.vectors.adjoint() *
                                    outcomes[j].eigenbasis.vectors;
            if (max_abs(overlap) > tol.threshold(1.0) * 10.0) {
                throw OverlappingEigenspaces(
                    "eigenspaces for values " + fmt_value(outcomes[i].value) +
                    " and " + fmt_value(outcomes[j].value) +
                    " are not orthogonal");
            }
        }
    }
    Eigen::Index total = 0;
    for (const auto &o : outcomes) {
        total += o.eigenbasis.count();
    }
    if (total != dim) {
        throw IncompleteSpan("eigenspaces span " + std::to_string(total) +
                             " of " + std::to_string(dim) + " dimensions");
    }
    Observable obs(dim, std::move(outcomes));
    obs.validate(tol);
    return obs;
}

Observable Observable::lift_local(const Observable &local, std::size_t slot,
                                  const std::vector<Eigen::Index> &dims) {
    if (slot >= dims.size()) {
        throw SlotOutOfRange("slot " + std::to_string(slot) + " of " +
                             std::to_string(dims.size()) + " factors");
    }
    if (local.dim() != dims[slot]) {
        throw DimensionMismatch("local observable has dimension " +
                                std::to_string(local.dim()) +
                                ", factor expects " +
                                std::to_string(dims[slot]));
    }
    Eigen::Index pre = 1;
    Eigen::Index post = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] < 1) {
            throw ValidationError("factor dimensions must be positive");
        }
        if (k < slot) {
            pre *= dims[k];
        } else if (k > slot) {
            post *= dims[k];
        }
    }
    const CMatrix ipre = CMatrix::Identity(pre, pre);
    const CMatrix ipost = CMatrix::Identity(post, post);
    std::vector<Outcome> outcomes;
    outcomes.reserve(local.outcomes().size());
    for (const auto &o : local.outcomes()) {
        Outcome lifted;
        lifted.value = o.value;
        lifted.projector = kron(kron(ipre, o.projector), ipost);
        lifted.eigenbasis = SubspaceBasis{
            pre * local.dim() * post,
            kron(kron(ipre, o.eigenbasis.vectors), ipost)};
        outcomes.push_back(std::move(lifted));
    }
    return Observable(pre * local.dim() * post, std::move(outcomes));
}

Observable Observable::conjugated(const CMatrix &u,
                                  const Tolerance &tol) const {
    if (u.rows() != dim_ || u.cols() != dim_) {
        throw DimensionMismatch("conjugating unitary has wrong shape");
    }
    if (!is_unitary(u, tol)) {
        throw NotUnitary("conjugation requires a unitary matrix");
    }
    std::vector<Outcome> outcomes;
    outcomes.reserve(outcomes_.size());
    for (const auto &o : outcomes_) {
        Outcome c;
        c.value = o.value;
        c.projector = u * o.projector * u.adjoint();
        c.eigenbasis = SubspaceBasis{dim_, u * o.eigenbasis.vectors};
        outcomes.push_back(std::move(c));
    }
    return Observable(dim_, std::move(outcomes));
}

const Outcome *Observable::find_outcome(double value) const {
    for (const auto &o : outcomes_) {
        if (values_equal(o.value, value)) {
            return &o;
        }
    }
    return nullptr;
}

const Outcome &Observable::outcome(double value) const {
    const Outcome *o = find_outcome(value);
    if (o == nullptr) {
        throw UnknownOutcome("value " + fmt_value(value) +
                             " is not an outcome");
    }
    return *o;
}

CMatrix Observable::matrix() const {
    CMatrix m = CMatrix::Zero(dim_, dim_);
    for (const auto &o : outcomes_) {
        m += o.value * o.projector;
    }
    return m;
}

bool Observable::dichotomous() const {
    return outcomes_.size() == 2 && values_equal(outcomes_[0].value, -1.0) &&
           values_equal(outcomes_[1].value, 1.0);
}

void Observable::validate(const Tolerance &tol) const {
    const double slack = std::max(tol.threshold(1.0), 1e-8);
    CMatrix sum = CMatrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        const CMatrix &e = outcomes_[i].projector;
        if (e.rows() != dim_ || e.cols() != dim_) {
            throw ValidationError("projector shape mismatch");
        }
        if (max_abs(e - e.adjoint()) > slack) {
            throw ValidationError("projector for value " +
                                  fmt_value(outcomes_[i].value) +
                                  " is not Hermitian");
        }
        if (max_abs(e * e - e) > slack) {
            throw ValidationError("projector for value " +
                                  fmt_value(outcomes_[i].value) +
                                  " is not idempotent");
        }
        for (std::size_t j = i + 1; j < outcomes_.size(); ++j) {
            if (values_equal(outcomes_[i].value, outcomes_[j].value)) {
                throw ValidationError("duplicate outcome value " +
                                      fmt_value(outcomes_[i].value));
            }
            if (max_abs(e * outcomes_[j].projector) > slack) {
                throw ValidationError("projectors for values " +
                                      fmt_value(outcomes_[i].value) + " and " +
                                      fmt_value(outcomes_[j].value) +
                                      " are not orthogonal");
            }
        }
        sum += e;
    }
    if (max_abs(sum - CMatrix::Identity(dim_, dim_)) > slack) {
        throw ValidationError("projectors do not resolve the identity");
    }
}

bool commutes(const Observable &a, const Observable &b, const Tolerance &tol) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("commutes: observable dimensions differ");
    }
    const CMatrix am = a.matrix();
    const CMatrix bm = b.matrix();
    const CMatrix ab = am * bm;
    const CMatrix ba = bm * am;
    const double scale = std::max({1.0, max_abs(ab), max_abs(ba)});
    return max_abs(ab - ba) <= tol.threshold(scale) * 10.0;
}

void GammaSet::validate(const Observable &a, const Observable &b) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        a.outcome(pairs[i].alpha); // throws UnknownOutcome
        b.outcome(pairs[i].beta);
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (values_equal(pairs[i].alpha, pairs[j].alpha) &&
                values_equal(pairs[i].beta, pairs[j].beta)) {
                throw ValidationError("duplicate pair (" +
                                      fmt_value(pairs[i].alpha) + ", " +
                                      fmt_value(pairs[i].beta) + ")");
            }
        }
    }
}

bool GammaSet::complete(const Observable &a, const Observable &b) const {
    const auto appears_once = [this](const Observable &obs, bool first) {
        for (const auto &o : obs.outcomes()) {
            int hits = 0;
            for (const auto &p : pairs) {
                if (values_equal(first ? p.alpha : p.beta, o.value)) {
                    ++hits;
                }
            }
            if (hits != 1) {
                return false;
            }
        }
        return true;
    };
    return appears_once(a, true) && appears_once(b, false);
}

} // namespace qpcc
