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

#include "qpcc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace qpcc {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------
// Value parsing. Complex literals are numbers, decimal strings, or
// two-element [re, im] arrays thereof.
// ---------------------------------------------------------------------

double parse_real(const json &j, const std::string &ctx) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        char *end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == nullptr || *end != '\0' || s.empty()) {
            throw ValidationError(ctx + ": '" + s +
                                  "' is not a decimal number");
        }
        return v;
    }
    throw ValidationError(ctx + ": expected a number or a decimal string");
}

Complex parse_complex(const json &j, const std::string &ctx) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ValidationError(ctx +
                                  ": complex literal needs exactly [re, im]");
        }
        return {parse_real(j[0], ctx), parse_real(j[1], ctx)};
    }
    return {parse_real(j, ctx), 0.0};
}

CVector parse_vector(const json &j, Eigen::Index expected_dim,
                     const std::string &ctx) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(ctx + ": expected a non-empty coefficient list");
    }
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] =
            parse_complex(j[i], ctx + "[" + std::to_string(i) + "]");
    }
    if (expected_dim >= 0 && v.size() != expected_dim) {
        throw ValidationError(ctx + ": has " + std::to_string(v.size()) +
                              " components, expected " +
                              std::to_string(expected_dim));
    }
    return v;
}

CMatrix parse_matrix(const json &j, const std::string &ctx) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(ctx + ": expected a non-empty row list");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    CMatrix m;
    for (Eigen::Index r = 0; r < rows; ++r) {
        const CVector row =
            parse_vector(j[static_cast<std::size_t>(r)], -1,
                         ctx + " row " + std::to_string(r));
        if (cols < 0) {
            cols = row.size();
            m.resize(rows, cols);
        } else if (row.size() != cols) {
            throw ValidationError(ctx + ": ragged rows");
        }
        m.row(r) = row.transpose();
    }
    return m;
}

void require_keys(const json &obj, const std::set<std::string> &required,
                  const std::set<std::string> &optional,
                  const std::string &ctx) {
    for (const auto &k : required) {
        if (!obj.contains(k)) {
            throw ValidationError(ctx + ": missing key '" + k + "'");
        }
    }
    for (const auto &item : obj.items()) {
        if (required.count(item.key()) == 0 &&
            optional.count(item.key()) == 0) {
            throw ValidationError(ctx + ": unknown key '" + item.key() + "'");
        }
    }
}

// ---------------------------------------------------------------------
// Observable parsing. Lifted forms are resolved in a second pass so the
// declaration order never matters.
// ---------------------------------------------------------------------

Observable parse_direct_observable(const json &spec, const std::string &name,
                                   Eigen::Index declared_dim,
                                   const Tolerance &tol) {
    const std::string ctx = "observable '" + name + "'";
    if (spec.contains("matrix")) {
        require_keys(spec, {"matrix"}, {"dimension"}, ctx);
        const CMatrix m = parse_matrix(spec["matrix"], ctx);
        if (m.rows() != declared_dim) {
            throw ValidationError(ctx + ": matrix is " +
                                  std::to_string(m.rows()) + "-dimensional, " +
                                  "declared " + std::to_string(declared_dim));
        }
        try {
            return Observable::from_matrix(m, tol);
        } catch (const Error &e) {
            throw ValidationError(ctx + ": " + e.what());
        }
    }
    require_keys(spec, {"eigenvalues", "eigenspaces"}, {"dimension"}, ctx);
    const json &values = spec["eigenvalues"];
    const json &spaces = spec["eigenspaces"];
    if (!values.is_array() || !spaces.is_array() ||
        values.size() != spaces.size() || values.empty()) {
        throw ValidationError(
            ctx + ": eigenvalues and eigenspaces must be lists of equal "
                  "nonzero length");
    }
    std::vector<std::pair<double, std::vector<CVector>>> groups;
    for (std::size_t g = 0; g < values.size(); ++g) {
        const double value =
            parse_real(values[g], ctx + " eigenvalue " + std::to_string(g));
        if (!spaces[g].is_array() || spaces[g].empty()) {
            throw ValidationError(ctx + ": eigenspace " + std::to_string(g) +
                                  " must be a non-empty vector list");
        }
        std::vector<CVector> vs;
        for (std::size_t i = 0; i < spaces[g].size(); ++i) {
            vs.push_back(parse_vector(spaces[g][i], declared_dim,
                                      ctx + " eigenspace " +
                                          std::to_string(g) + " vector " +
                                          std::to_string(i)));
        }
        groups.emplace_back(value, std::move(vs));
    }
    try {
        return Observable::from_eigenspaces(groups, tol);
    } catch (const Error &e) {
        throw ValidationError(ctx + ": " + e.what());
    }
}

// ---------------------------------------------------------------------
// Query validation tables.
// ---------------------------------------------------------------------

struct KindSpec {
    std::set<std::string> required;
    std::set<std::string> optional;
    std::set<std::string> expect_keys;
};

const std::map<std::string, KindSpec> &kind_table() {
    static const std::map<std::string, KindSpec> table = {
        {"born",
         {{"observable", "value", "state"}, {}, {"value", "error"}}},
        {"conditional",
         {{"target", "target_value", "given", "given_value", "state"},
          {},
          {"value", "error"}}},
        {"chain",
         {{"events", "target", "state"}, {}, {"value", "error"}}},
        {"check_pcc",
         {{"a", "alpha", "b", "beta", "state"},
          {},
          {"holds", "degenerate", "error"}}},
        {"solve_pair",
         {{"a", "alpha", "b", "beta"},
          {},
          {"feasible", "dimension", "span", "error"}}},
        {"solve_gamma",
         {{"a", "b", "pairs"},
          {"symmetric"},
          {"feasible", "dimension", "span", "complete", "error"}}},
        {"symmetric",
         {{"a", "alpha", "b", "beta", "state"},
          {},
          {"symmetric", "commuting", "error"}}},
        {"joint_eigenspaces", {{"a", "b"}, {}, {"dimensions", "error"}}},
        {"characterize",
         {{"a", "b", "sign"},
          {},
          {"feasible", "dimension", "span", "error"}}},
        {"correlation",
         {{"a", "b", "state"},
          {},
          {"value", "residual_minus_max", "residual_plus_max", "error"}}},
        {"shared_outcome",
         {{"a", "b", "beta", "state"},
          {"dichotomous_branch"},
          {"eigenstate", "all_hold", "any_symmetric", "exclusions_certified",
           "max_reversed_below", "error"}}},
        {"commutators",
         {{"a1", "a2", "b1", "b2", "state"},
          {},
          {"premises_hold", "residual_max", "error"}}},
        {"covariance",
         {{"a", "b", "pairs"},
          {"trials", "unitary"},
          {"invariant", "error"}}},
        {"family_invariance",
         {{"a", "b"},
          {"trials"},
          {"identity_ok", "singlet_passes", "min_control_failures",
           "error"}}},
        {"solve_triple",
         {{"a", "b", "c", "triples"},
          {"joint"},
          {"feasible", "dimension", "span", "error"}}},
    };
    return table;
}

long parse_count(const json &j, const std::string &ctx) {
    if (!j.is_number_integer() || j.get<long>() < 1) {
        throw ValidationError(ctx + ": expected a positive integer");
    }
    return j.get<long>();
}

} // namespace

// ---------------------------------------------------------------------
// Scenario parsing.
// ---------------------------------------------------------------------

Scenario parse_scenario(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    return scenario_from_json(doc);
}

Scenario scenario_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ValidationError("scenario document must be a JSON object");
    }
    require_keys(doc, {"observables", "queries"},
                 {"dimension", "factors", "name", "states", "tolerance",
                  "seed"},
                 "scenario");
    Scenario s;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw ValidationError("scenario name must be a string");
        }
        s.name = doc["name"].get<std::string>();
    }

    if (doc.contains("factors") == doc.contains("dimension")) {
        throw ValidationError(
            "scenario needs exactly one of 'dimension' or 'factors'");
    }
    if (doc.contains("factors")) {
        if (!doc["factors"].is_array() || doc["factors"].size() < 2) {
            throw ValidationError("factors must list at least two dimensions");
        }
        Eigen::Index product = 1;
        for (const auto &f : doc["factors"]) {
            const long d = parse_count(f, "factor");
            s.factors.push_back(d);
            product *= d;
        }
        s.dimension = product;
    } else {
        s.dimension = parse_count(doc["dimension"], "dimension");
    }

    if (doc.contains("tolerance")) {
        require_keys(doc["tolerance"], {}, {"abs", "rel"}, "tolerance");
        if (doc["tolerance"].contains("abs")) {
            s.tol.abs = parse_real(doc["tolerance"]["abs"], "tolerance.abs");
        }
        if (doc["tolerance"].contains("rel")) {
            s.tol.rel = parse_real(doc["tolerance"]["rel"], "tolerance.rel");
        }
        if (s.tol.abs <= 0.0 || s.tol.rel < 0.0) {
            throw ValidationError("tolerance must satisfy abs > 0, rel >= 0");
        }
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
            throw ValidationError("seed must be a non-negative integer");
        }
        s.seed = doc["seed"].get<std::uint64_t>();
    }

    // Observables: direct forms first, lifted forms second.
    const json &obs = doc["observables"];
    if (!obs.is_object() || obs.empty()) {
        throw ValidationError("scenario needs at least one observable");
    }
    for (const auto &item : obs.items()) {
        const json &spec = item.value();
        if (!spec.is_object()) {
            throw ValidationError("observable '" + item.key() +
                                  "' must be an object");
        }
        if (spec.contains("local")) {
            continue;
        }
        Eigen::Index declared = s.dimension;
        if (spec.contains("dimension")) {
            declared = parse_count(spec["dimension"],
                                   "observable '" + item.key() +
                                       "' dimension");
        }
        s.observables.emplace(
            item.key(),
            parse_direct_observable(spec, item.key(), declared, s.tol));
    }
    for (const auto &item : obs.items()) {
        const json &spec = item.value();
        if (!spec.contains("local")) {
            continue;
        }
        const std::string ctx = "observable '" + item.key() + "'";
        require_keys(spec, {"local", "slot"}, {}, ctx);
        if (s.factors.empty()) {
            throw ValidationError(ctx +
                                  ": lifted forms need a 'factors' scenario");
        }
        if (!spec["local"].is_string()) {
            throw ValidationError(ctx + ": 'local' must name an observable");
        }
        const std::string local_name = spec["local"].get<std::string>();
        const auto it = s.observables.find(local_name);
        if (it == s.observables.end()) {
            throw ValidationError(ctx + ": unknown local observable '" +
                                  local_name + "'");
        }
        if (!spec["slot"].is_number_integer() || spec["slot"].get<long>() < 0) {
            throw ValidationError(ctx + ": slot must be a non-negative "
                                        "integer");
        }
        const std::size_t slot =
            static_cast<std::size_t>(spec["slot"].get<long>());
        try {
            s.observables.emplace(
                item.key(),
                Observable::lift_local(it->second, slot, s.factors));
        } catch (const Error &e) {
            throw ValidationError(ctx + ": " + e.what());
        }
    }

    if (doc.contains("states")) {
        if (!doc["states"].is_object()) {
            throw ValidationError("states must be an object");
        }
        for (const auto &item : doc["states"].items()) {
            const CVector v = parse_vector(item.value(), s.dimension,
                                           "state '" + item.key() + "'");
            try {
                s.states.emplace(item.key(), StateVector::normalized(v));
            } catch (const Error &e) {
                throw ValidationError("state '" + item.key() + "': " +
                                      e.what());
            }
        }
    }

    // Queries.
    if (!doc["queries"].is_array()) {
        throw ValidationError("queries must be a list");
    }
    const auto check_observable_ref = [&s](const json &q, const char *key,
                                           const std::string &ctx,
                                           bool ambient) -> const Observable & {
        if (!q.contains(key) || !q[key].is_string()) {
            throw ValidationError(ctx + ": '" + key +
                                  "' must name an observable");
        }
        const std::string name = q[key].get<std::string>();
        const auto it = s.observables.find(name);
        if (it == s.observables.end()) {
            throw ValidationError(ctx + ": unknown observable '" + name + "'");
        }
        if (ambient && it->second.dim() != s.dimension) {
            throw ValidationError(ctx + ": observable '" + name +
                                  "' does not act on the full space");
        }
        return it->second;
    };
    const auto check_state_ref = [&s](const json &q, const std::string &ctx) {
        const json &st = q["state"];
        if (st.is_string()) {
            if (s.states.find(st.get<std::string>()) == s.states.end()) {
                throw ValidationError(ctx + ": unknown state '" +
                                      st.get<std::string>() + "'");
            }
        } else {
            parse_vector(st, s.dimension, ctx + " inline state");
        }
    };

    for (std::size_t qi = 0; qi < doc["queries"].size(); ++qi) {
        const json &q = doc["queries"][qi];
        const std::string ctx = "query " + std::to_string(qi);
        if (!q.is_object() || !q.contains("kind") || !q["kind"].is_string()) {
            throw ValidationError(ctx + ": needs a string 'kind'");
        }
        const std::string kind = q["kind"].get<std::string>();
        const auto spec_it = kind_table().find(kind);
        if (spec_it == kind_table().end()) {
            throw ValidationError(ctx + ": unknown kind '" + kind + "'");
        }
        const KindSpec &ks = spec_it->second;
        std::set<std::string> optional = ks.optional;
        optional.insert("kind");
        optional.insert("label");
        optional.insert("expect");
        require_keys(q, ks.required, optional, ctx);
        if (q.contains("label") && !q["label"].is_string()) {
            throw ValidationError(ctx + ": label must be a string");
        }
        if (q.contains("expect")) {
            if (!q["expect"].is_object()) {
                throw ValidationError(ctx + ": expect must be an object");
            }
            require_keys(q["expect"], {}, ks.expect_keys, ctx + " expect");
        }

        // Reference checks (values are validated during execution so that
        // error-expectation queries remain expressible).
        const bool family = kind == "family_invariance";
        for (const char *key : {"observable", "given", "a", "b", "c", "a1",
                                "a2", "b1", "b2"}) {
            if (ks.required.count(key) != 0) {
                const Observable &o =
                    check_observable_ref(q, key, ctx, !family);
                if (family && o.dim() != 2) {
                    throw ValidationError(ctx + ": '" + std::string(key) +
                                          "' must be a two-dimensional "
                                          "observable");
                }
            }
        }
        if (kind == "conditional") {
            check_observable_ref(q, "target", ctx, true);
        }
        if (kind == "chain") {
            if (!q["events"].is_array() || q["events"].empty()) {
                throw ValidationError(ctx +
                                      ": events must be a non-empty list");
            }
            for (const auto &e : q["events"]) {
                require_keys(e, {"observable", "value"}, {}, ctx + " event");
                check_observable_ref(e, "observable", ctx, true);
            }
            require_keys(q["target"], {"observable", "value"}, {},
                         ctx + " target");
            check_observable_ref(q["target"], "observable", ctx, true);
        }
        if (ks.required.count("state") != 0) {
            check_state_ref(q, ctx);
        }
        if (kind == "solve_gamma" || kind == "covariance") {
            if (!q["pairs"].is_array() || q["pairs"].empty()) {
                throw ValidationError(ctx + ": pairs must be a non-empty "
                                            "list of [alpha, beta]");
            }
            for (const auto &p : q["pairs"]) {
                if (!p.is_array() || p.size() != 2) {
                    throw ValidationError(ctx + ": each pair is [alpha, "
                                                "beta]");
                }
            }
        }
        if (kind == "solve_triple") {
            if (!q["triples"].is_array() || q["triples"].empty()) {
                throw ValidationError(
                    ctx + ": triples must be a non-empty list of "
                          "[alpha, beta, gamma]");
            }
            for (const auto &t : q["triples"]) {
                if (!t.is_array() || t.size() != 3) {
                    throw ValidationError(ctx + ": each triple is [alpha, "
                                                "beta, gamma]");
                }
            }
        }
        s.queries.push_back(Query{kind, q});
    }

    // Canonical form: defaults made explicit, everything else echoed.
    json canonical;
    if (!s.factors.empty()) {
        json f = json::array();
        for (const auto d : s.factors) {
            f.push_back(d);
        }
        canonical["factors"] = f;
    } else {
        canonical["dimension"] = s.dimension;
    }
    if (!s.name.empty()) {
        canonical["name"] = s.name;
    }
    canonical["observables"] = obs;
    if (doc.contains("states")) {
        canonical["states"] = doc["states"];
    }
    canonical["queries"] = doc["queries"];
    canonical["seed"] = s.seed;
    canonical["tolerance"] = {{"abs", s.tol.abs}, {"rel", s.tol.rel}};
    s.document = std::move(canonical);
    return s;
}

std::string Scenario::canonical_text() const {
    return document.dump(2) + "\n";
}

// ---------------------------------------------------------------------
// Execution.
// ---------------------------------------------------------------------

namespace {

double snap_zero(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

json complex_to_json(const Complex &c) {
    return json::array({snap_zero(c.real()), snap_zero(c.imag())});
}

json vector_to_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v[i]));
    }
    return out;
}

json basis_to_json(const SubspaceBasis &b) {
    json out = json::array();
    for (Eigen::Index j = 0; j < b.count(); ++j) {
        out.push_back(vector_to_json(canonical_phase(b.vectors.col(j))));
    }
    return out;
}

std::string outcome_symbol(double value) {
    if (values_equal(value, 1.0)) {
        return "+";
    }
    if (values_equal(value, -1.0)) {
        return "-";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return std::string(buf) + ";";
}

// Labels a basis vector by the joint eigenspace it lies in, e.g. "|+->";
// vectors straddling several joint eigenspaces are labeled "mixed".
json basis_labels(const SubspaceBasis &basis,
                  const std::vector<const Observable *> &observables,
                  const Tolerance &tol) {
    json out = json::array();
    for (Eigen::Index j = 0; j < basis.count(); ++j) {
        const CVector v = basis.vectors.col(j);
        std::string label = "|";
        bool pure = true;
        for (const Observable *o : observables) {
            const Outcome *found = nullptr;
            for (const auto &oc : o->outcomes()) {
                if ((oc.projector * v - v).norm() <= tol.threshold(1.0)) {
                    found = &oc;
                    break;
                }
            }
            if (found == nullptr) {
                pure = false;
                break;
            }
            label += outcome_symbol(found->value);
        }
        out.push_back(pure ? label + ">" : "mixed");
    }
    return out;
}

json solution_to_json(const SolutionSpace &s, const char *extra_key = nullptr,
                      const json &extra_value = {}) {
    json out;
    out["feasible"] = s.feasible;
    out["dimension"] = s.linear_basis.count();
    out["basis"] = basis_to_json(s.linear_basis);
    json cs = json::array();
    for (const auto &c : s.constraints) {
        cs.push_back({{"label", c.label},
                      {"certified_unsatisfiable", c.certified_unsatisfiable}});
    }
    out["constraints"] = cs;
    if (s.witness) {
        out["witness"] = vector_to_json(s.witness->coeffs());
    }
    if (extra_key != nullptr) {
        out[extra_key] = extra_value;
    }
    return out;
}

json verdict_to_json(const PccVerdict &v) {
    return {{"holds", v.holds},
            {"conditional_probability", v.conditional_probability},
            {"residual", v.residual},
            {"degenerate", v.degenerate}};
}

// Expectation evaluation shared by all kinds.
struct ExpectChecker {
    const json *expect = nullptr;
    Tolerance tol;
    std::vector<std::string> failures;

    bool has(const char *k) const {
        return expect != nullptr && expect->contains(k);
    }
    void fail(const std::string &why) { failures.push_back(why); }
    void check_bool(const char *k, bool actual) {
        if (has(k) && (*expect)[k].get<bool>() != actual) {
            fail(std::string(k) + " is " + (actual ? "true" : "false"));
        }
    }
    void check_int(const char *k, long actual) {
        if (has(k) && (*expect)[k].get<long>() != actual) {
            fail(std::string(k) + " is " + std::to_string(actual));
        }
    }
    void check_min_int(const char *k, long actual) {
        if (has(k) && actual < (*expect)[k].get<long>()) {
            fail(std::string(k) + " is only " + std::to_string(actual));
        }
    }
    void check_near(const char *k, double actual) {
        if (has(k)) {
            const double want = parse_real((*expect)[k], k);
            if (std::abs(actual - want) > tol.threshold(std::abs(want))) {
                fail(std::string(k) + " is " + std::to_string(actual));
            }
        }
    }
    void check_max(const char *k, double actual) {
        if (has(k) && actual > parse_real((*expect)[k], k)) {
            fail(std::string(k) + " is " + std::to_string(actual));
        }
    }
};

void check_solution_expect(ExpectChecker &ec, const SolutionSpace &sol,
                           Eigen::Index dim) {
    ec.check_bool("feasible", sol.feasible);
    ec.check_int("dimension", sol.linear_basis.count());
    if (ec.has("span")) {
        std::vector<CVector> vs;
        for (const auto &v : (*ec.expect)["span"]) {
            vs.push_back(parse_vector(v, dim, "expect span"));
        }
        const SubspaceBasis want = SubspaceBasis::span_of(vs, ec.tol);
        if (!same_subspace(sol.linear_basis, want, ec.tol)) {
            ec.fail("span differs");
        }
    }
}

} // namespace

Report execute(const Scenario &scenario) {
    Report report;
    json queries_out = json::array();

    for (std::size_t qi = 0; qi < scenario.queries.size(); ++qi) {
        const Query &query = scenario.queries[qi];
        const json &q = query.spec;
        const std::uint64_t seed = derive_seed(scenario.seed, qi);
        const Tolerance &tol = scenario.tol;

        const auto obs = [&](const char *key) -> const Observable & {
            return scenario.observables.at(q[key].get<std::string>());
        };
        const auto value = [&](const char *key) {
            return parse_real(q[key], key);
        };
        const auto state = [&](const char *key = "state") {
            const json &st = q[key];
            if (st.is_string()) {
                return scenario.states.at(st.get<std::string>());
            }
            return StateVector::normalized(
                parse_vector(st, scenario.dimension, "inline state"));
        };
        const auto gamma_of = [&](const char *key) {
            GammaSet g;
            for (const auto &p : q[key]) {
                g.pairs.push_back({parse_real(p[0], "pair alpha"),
                                   parse_real(p[1], "pair beta")});
            }
            return g;
        };

        ExpectChecker ec;
        ec.tol = tol;
        if (q.contains("expect")) {
            ec.expect = &q["expect"];
        }

        json result;
        bool errored = false;
        std::string error_kind;
        try {
            const std::string &kind = query.kind;
            if (kind == "born") {
                const double p = born(obs("observable"), value("value"),
                                      state(), tol);
                result["probability"] = p;
                ec.check_near("value", p);
            } else if (kind == "conditional") {
                const double p =
                    conditional(obs("target"), value("target_value"),
                                obs("given"), value("given_value"), state(),
                                tol);
                result["probability"] = p;
                ec.check_near("value", p);
            } else if (kind == "chain") {
                Chain chain;
                for (const auto &e : q["events"]) {
                    chain.events.push_back(
                        {scenario.observables.at(
                             e["observable"].get<std::string>()),
                         parse_real(e["value"], "event value")});
                }
                const MeasurementEvent target{
                    scenario.observables.at(
                        q["target"]["observable"].get<std::string>()),
                    parse_real(q["target"]["value"], "target value")};
                const double p = chain_conditional(chain, target, state(), tol);
                result["probability"] = p;
                ec.check_near("value", p);
            } else if (kind == "check_pcc") {
                const PccVerdict v = check_pcc(obs("a"), value("alpha"),
                                               obs("b"), value("beta"),
                                               state(), tol);
                result = verdict_to_json(v);
                ec.check_bool("holds", v.holds);
                ec.check_bool("degenerate", v.degenerate);
            } else if (kind == "solve_pair") {
                const SolutionSpace sol =
                    solve_pair(obs("a"), value("alpha"), obs("b"),
                               value("beta"), tol, seed);
                result = solution_to_json(sol);
                result["basis_labels"] = basis_labels(
                    sol.linear_basis, {&obs("a"), &obs("b")}, tol);
                check_solution_expect(ec, sol, scenario.dimension);
            } else if (kind == "solve_gamma") {
                const GammaSet gamma = gamma_of("pairs");
                const bool symmetric =
                    q.contains("symmetric") && q["symmetric"].get<bool>();
                const SolutionSpace sol = solve_gamma(obs("a"), obs("b"),
                                                      gamma, symmetric, tol,
                                                      seed);
                const bool complete = gamma.complete(obs("a"), obs("b"));
                result = solution_to_json(sol, "complete", complete);
                result["basis_labels"] = basis_labels(
                    sol.linear_basis, {&obs("a"), &obs("b")}, tol);
                check_solution_expect(ec, sol, scenario.dimension);
                ec.check_bool("complete", complete);
            } else if (kind == "symmetric") {
                const SymmetryReport r =
                    is_symmetric_state(obs("a"), value("alpha"), obs("b"),
                                       value("beta"), state(), tol);
                result = {{"symmetric", r.symmetric},
                          {"commuting", r.commuting},
                          {"difference", r.difference},
                          {"norm_a", r.norm_a},
                          {"norm_b", r.norm_b}};
                ec.check_bool("symmetric", r.symmetric);
                ec.check_bool("commuting", r.commuting);
            } else if (kind == "joint_eigenspaces") {
                const auto spaces = joint_eigenspaces(obs("a"), obs("b"), tol);
                json arr = json::array();
                for (const auto &sp : spaces) {
                    arr.push_back({{"alpha", sp.alpha},
                                   {"beta", sp.beta},
                                   {"dimension", sp.basis.count()},
                                   {"basis", basis_to_json(sp.basis)}});
                }
                result["spaces"] = arr;
                if (ec.has("dimensions")) {
                    for (const auto &want : (*ec.expect)["dimensions"]) {
                        const double alpha = parse_real(want[0], "alpha");
                        const double beta = parse_real(want[1], "beta");
                        const long dim = want[2].get<long>();
                        bool found = false;
                        for (const auto &sp : spaces) {
                            if (values_equal(sp.alpha, alpha) &&
                                values_equal(sp.beta, beta)) {
                                found = true;
                                if (sp.basis.count() != dim) {
                                    ec.fail("joint dimension mismatch");
                                }
                            }
                        }
                        if (!found) {
                            ec.fail("joint eigenspace not present");
                        }
                    }
                }
            } else if (kind == "characterize") {
                const SolutionSpace sol = characterize_dichotomous(
                    obs("a"), obs("b"), static_cast<int>(value("sign")), tol,
                    seed);
                result = solution_to_json(sol);
                result["basis_labels"] = basis_labels(
                    sol.linear_basis, {&obs("a"), &obs("b")}, tol);
                check_solution_expect(ec, sol, scenario.dimension);
            } else if (kind == "correlation") {
                const CorrelationReport r =
                    correlation(obs("a"), obs("b"), state());
                result = {{"value", complex_to_json(r.value)},
                          {"residual_minus", r.residual_minus},
                          {"residual_plus", r.residual_plus}};
                if (ec.has("value")) {
                    const double want = parse_real((*ec.expect)["value"],
                                                   "value");
                    if (std::abs(r.value - Complex(want, 0.0)) >
                        tol.threshold(std::abs(want))) {
                        ec.fail("correlation differs");
                    }
                }
                ec.check_max("residual_minus_max", r.residual_minus);
                ec.check_max("residual_plus_max", r.residual_plus);
            } else if (kind == "shared_outcome") {
                const bool branch = !q.contains("dichotomous_branch") ||
                                    q["dichotomous_branch"].get<bool>();
                const SharedOutcomeReport r = shared_outcome_analysis(
                    obs("a"), obs("b"), value("beta"), state(), tol, branch);
                json ex = json::array();
                bool all_certified = true;
                for (const auto &e : r.exclusions) {
                    ex.push_back({{"alpha", e.alpha},
                                  {"beta_other", e.beta_other},
                                  {"infeasible", e.infeasible},
                                  {"certified", e.certified}});
                    all_certified =
                        all_certified && e.infeasible && e.certified;
                }
                result["exclusions"] = ex;
                ec.check_bool("exclusions_certified", all_certified);
                if (r.dichotomous_branch) {
                    result["eigenstate"] = r.eigenstate_of_beta;
                    result["eigenstate_residual"] = r.eigenstate_residual;
                    json comm = json::array();
                    for (const auto &[g, res] : r.commutation_residuals) {
                        comm.push_back(json::array({g, res}));
                    }
                    result["commutation_residuals"] = comm;
                    json verdicts = json::array();
                    bool all_hold = true;
                    for (const auto &[g, v] : r.verdicts) {
                        json one = verdict_to_json(v);
                        one["gamma"] = g;
                        verdicts.push_back(one);
                        all_hold = all_hold && v.holds;
                    }
                    result["verdicts"] = verdicts;
                    json sym = json::array();
                    bool any_symmetric = false;
                    for (const auto &[g, flag] : r.symmetric) {
                        sym.push_back(json::array({g, flag}));
                        any_symmetric = any_symmetric || flag;
                    }
                    result["symmetric"] = sym;
                    result["max_reversed_conditional"] =
                        r.max_reversed_conditional;
                    ec.check_bool("eigenstate", r.eigenstate_of_beta);
                    ec.check_bool("all_hold", all_hold);
                    ec.check_bool("any_symmetric", any_symmetric);
                    ec.check_max("max_reversed_below",
                                 r.max_reversed_conditional);
                }
            } else if (kind == "commutators") {
                const CommutatorReport r = commutator_identities(
                    obs("a1"), obs("a2"), obs("b1"), obs("b2"), state(), tol);
                result = {{"premises_hold", r.premises_hold},
                          {"premise_residual_1", r.premise_residual_1},
                          {"premise_residual_2", r.premise_residual_2},
                          {"vector_residual", r.vector_residual},
                          {"scalar_residual", r.scalar_residual},
                          {"product_residual", r.product_residual}};
                ec.check_bool("premises_hold", r.premises_hold);
                const double worst =
                    std::max({r.vector_residual, r.scalar_residual,
                              r.product_residual});
                result["max_residual"] = worst;
                ec.check_max("residual_max", worst);
            } else if (kind == "covariance") {
                const GammaSet gamma = gamma_of("pairs");
                bool invariant = true;
                long trials = 0;
                if (q.contains("unitary")) {
                    const CMatrix u = parse_matrix(q["unitary"], "unitary");
                    invariant = unitary_covariance_check(obs("a"), obs("b"),
                                                         gamma, u, tol, seed)
                                    .invariant;
                    trials = 1;
                } else {
                    trials = q.contains("trials")
                                 ? parse_count(q["trials"], "trials")
                                 : 20;
                    for (long t = 0; t < trials; ++t) {
                        const CMatrix u = random_unitary(
                            scenario.dimension, derive_seed(seed, t));
                        if (!unitary_covariance_check(obs("a"), obs("b"),
                                                      gamma, u, tol, seed)
                                 .invariant) {
                            invariant = false;
                        }
                    }
                }
                result = {{"invariant", invariant}, {"trials", trials}};
                ec.check_bool("invariant", invariant);
            } else if (kind == "family_invariance") {
                const long trials = q.contains("trials")
                                        ? parse_count(q["trials"], "trials")
                                        : 20;
                const FamilyInvarianceReport r = family_invariance_check(
                    obs("a"), obs("b"), static_cast<int>(trials), seed, tol);
                result = {{"identity_ok", r.identity_ok},
                          {"trials", r.trials},
                          {"singlet_passes", r.singlet_passes},
                          {"control_failures", r.control_failures}};
                ec.check_bool("identity_ok", r.identity_ok);
                ec.check_int("singlet_passes", r.singlet_passes);
                ec.check_min_int("min_control_failures", r.control_failures);
            } else if (kind == "solve_triple") {
                std::vector<ValueTriple> triples;
                for (const auto &t : q["triples"]) {
                    triples.push_back({parse_real(t[0], "alpha"),
                                       parse_real(t[1], "beta"),
                                       parse_real(t[2], "gamma")});
                }
                const bool joint =
                    q.contains("joint") && q["joint"].get<bool>();
                const SolutionSpace sol =
                    solve_triple(obs("a"), obs("b"), obs("c"), triples, joint,
                                 tol, seed);
                result = solution_to_json(sol);
                result["basis_labels"] = basis_labels(
                    sol.linear_basis, {&obs("a"), &obs("b"), &obs("c")}, tol);
                check_solution_expect(ec, sol, scenario.dimension);
            } else {
                throw ValidationError("unknown query kind '" + kind + "'");
            }
        } catch (const Error &e) {
            errored = true;
            error_kind = e.kind();
            result = json{{"error", e.kind()}, {"message", e.what()}};
        }

        bool ok;
        if (ec.has("error")) {
            ok = errored && error_kind == (*ec.expect)["error"].get<std::string>();
        } else if (errored) {
            ok = false;
        } else {
            ok = ec.failures.empty();
        }
        if (!ec.failures.empty()) {
            result["expect_failures"] = ec.failures;
        }

        json entry = q;
        entry["result"] = result;
        entry["ok"] = ok;
        queries_out.push_back(entry);
        report.queries_total += 1;
        report.queries_ok += ok ? 1 : 0;
    }

    report.document["name"] = scenario.name;
    report.document["queries"] = queries_out;
    report.document["seed"] = scenario.seed;
    report.document["tolerance"] = {{"abs", scenario.tol.abs},
                                    {"rel", scenario.tol.rel}};
    report.document["summary"] = {{"total", report.queries_total},
                                  {"ok", report.queries_ok}};
    return report;
}

} // namespace qpcc
