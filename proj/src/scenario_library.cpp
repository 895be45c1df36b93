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

#include "qpcc/scenario_library.hpp"

namespace qpcc {

namespace {

// Eigenspace vectors may be given unnormalized; the parser orthonormalizes
// them. States are normalized on input as well.

const char *kDim5AeqB = R"json({
  "name": "dim5_AeqB",
  "dimension": 5,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0]],
                          [[0,0,0,1,0],[0,0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0,0],[0,1,0,0,0]],
                          [[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]]}
  },
  "states": {"sample": [1, 1, 0, 1, 1]},
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "label": "Eq. (nt1)",
     "expect": {"feasible": true, "dimension": 4, "complete": true,
                "span": [[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]}},
    {"kind": "characterize", "a": "A", "b": "B", "sign": 1,
     "label": "Sec. 5.3",
     "expect": {"feasible": true, "dimension": 4,
                "span": [[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]}},
    {"kind": "joint_eigenspaces", "a": "A", "b": "B",
     "label": "Eq. (Lmb1)",
     "expect": {"dimensions": [[1,1,2],[1,-1,1],[-1,1,0],[-1,-1,2]]}},
    {"kind": "correlation", "a": "A", "b": "B", "state": "sample",
     "label": "Eq. (nu4)",
     "expect": {"value": 1, "residual_plus_max": 1e-9}},
    {"kind": "symmetric", "a": "A", "alpha": 1, "b": "B", "beta": 1,
     "state": "sample", "label": "Eq. (Lx3z2)",
     "expect": {"symmetric": true, "commuting": true}},
    {"kind": "born", "observable": "A", "value": 1, "state": "sample",
     "label": "Eq. (L2a1)", "expect": {"value": 0.5}},
    {"kind": "born", "observable": "B", "value": 1, "state": "sample",
     "expect": {"value": 0.5}}
  ]
})json";

const char *kDim5AmB = R"json({
  "name": "dim5_AmB",
  "dimension": 5,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0]],
                          [[0,0,0,1,0],[0,0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0,0],[0,1,0,0,0]],
                          [[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]]}
  },
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Sec. 5.1.1",
     "expect": {"feasible": false, "dimension": 1, "span": [[0,0,1,0,0]]}},
    {"kind": "characterize", "a": "A", "b": "B", "sign": -1,
     "label": "Eq. (Lm1)", "expect": {"feasible": false}},
    {"kind": "check_pcc", "a": "A", "alpha": -1, "b": "B", "beta": 1,
     "state": [0, 0, 1, 0, 0], "label": "Eq. (Lx2a)",
     "expect": {"holds": false, "degenerate": true}}
  ]
})json";

const char *kDim4AmB = R"json({
  "name": "dim4_AmB",
  "dimension": 4,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,1,0,0]], [[0,0,1,0],[0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,0,1,0]], [[0,1,0,0],[0,0,0,1]]]}
  },
  "states": {"entangled": [0, 1, 1, 0], "weighted": [0, 0.8, 0.6, 0]},
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Eq. (e1)",
     "expect": {"feasible": true, "dimension": 2, "complete": true,
                "span": [[0,1,0,0],[0,0,1,0]]}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "label": "Sec. 5.1.2",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0,0],[0,0,0,1]]}},
    {"kind": "characterize", "a": "A", "b": "B", "sign": -1,
     "label": "Eq. (Lm27)",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[0,1,0,0],[0,0,1,0]]}},
    {"kind": "check_pcc", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "state": "entangled", "label": "Eq. (Lx3)", "expect": {"holds": true}},
    {"kind": "symmetric", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "state": "entangled", "label": "Eq. (Lx10)",
     "expect": {"symmetric": true}},
    {"kind": "correlation", "a": "A", "b": "B", "state": "entangled",
     "label": "Eq. (nu2)",
     "expect": {"value": -1, "residual_minus_max": 1e-9}},
    {"kind": "born", "observable": "A", "value": 1, "state": "weighted",
     "label": "Eq. (Lx3f)", "expect": {"value": 0.64}},
    {"kind": "born", "observable": "B", "value": -1, "state": "weighted",
     "expect": {"value": 0.64}},
    {"kind": "covariance", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "trials": 20, "label": "Sec. 3.1", "expect": {"invariant": true}}
  ]
})json";

const char *kDim4Split31 = R"json({
  "name": "dim4_split31",
  "dimension": 4,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,1,0,0],[0,0,1,0]], [[0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0]], [[0,1,0,0],[0,0,1,0],[0,0,0,1]]]}
  },
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Sec. 5.1.2",
     "expect": {"feasible": false, "dimension": 2,
                "span": [[0,1,0,0],[0,0,1,0]]}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0,0],[0,0,0,1]]}}
  ]
})json";

const char *kDim3Oneway = R"json({
  "name": "dim3_oneway",
  "dimension": 3,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0],[0,1,0]], [[0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0]], [[0,1,0],[0,0,1]]]}
  },
  "states": {"middle": [0, 1, 0]},
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Sec. 5.1.3",
     "expect": {"feasible": false, "dimension": 1, "span": [[0,1,0]]}},
    {"kind": "check_pcc", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "state": "middle", "expect": {"holds": true}},
    {"kind": "conditional", "target": "B", "target_value": 1,
     "given": "A", "given_value": -1, "state": "middle",
     "label": "Eq. (Lx2a)", "expect": {"error": "DegenerateCondition"}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0],[0,0,1]]}}
  ]
})json";

const char *kDim2AmB = R"json({
  "name": "dim2_AmB",
  "dimension": 2,
  "observables": {
    "A": {"eigenvalues": [1, -1], "eigenspaces": [[[1,0]], [[0,1]]]},
    "B": {"eigenvalues": [1, -1], "eigenspaces": [[[0,1]], [[1,0]]]}
  },
  "states": {"generic": [0.6, 0.8]},
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Sec. 5.1.4",
     "expect": {"feasible": true, "dimension": 2}},
    {"kind": "check_pcc", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "state": "generic", "expect": {"holds": true}},
    {"kind": "check_pcc", "a": "A", "alpha": -1, "b": "B", "beta": 1,
     "state": "generic", "expect": {"holds": true}},
    {"kind": "correlation", "a": "A", "b": "B", "state": "generic",
     "expect": {"value": -1, "residual_minus_max": 1e-9}}
  ]
})json";

const char *kDim4Rotated = R"json({
  "name": "dim4_rotated",
  "dimension": 4,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,1,0,0]], [[0,0,1,0],[0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,1,0],[0,1,0,1]], [[1,0,-1,0],[0,1,0,-1]]]}
  },
  "queries": [
    {"kind": "solve_pair", "a": "A", "alpha": 1, "b": "B", "beta": 1,
     "label": "Sec. 3.2",
     "expect": {"feasible": false, "dimension": 2,
                "span": [[0,0,1,0],[0,0,0,1]]}},
    {"kind": "solve_pair", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "expect": {"feasible": false, "dimension": 2}}
  ]
})json";

const char *kTensor22 = R"json({
  "name": "tensor22",
  "factors": [2, 2],
  "observables": {
    "z": {"dimension": 2, "eigenvalues": [1, -1],
          "eigenspaces": [[[1,0]], [[0,1]]]},
    "A": {"local": "z", "slot": 0},
    "B": {"local": "z", "slot": 1}
  },
  "states": {"partial": [0.6, 0.5, 0, 0.4]},
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Eq. (Ltp)",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[0,1,0,0],[0,0,1,0]]}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "label": "Eq. (Ltp1)",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0,0],[0,0,0,1]]}},
    {"kind": "characterize", "a": "A", "b": "B", "sign": 1,
     "label": "Eq. (e2)",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0,0],[0,0,0,1]]}},
    {"kind": "check_pcc", "a": "A", "alpha": 1, "b": "B", "beta": -1,
     "state": "partial", "label": "Sec. 5.2",
     "expect": {"holds": false}},
    {"kind": "covariance", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "trials": 20, "label": "Sec. 8", "expect": {"invariant": true}}
  ]
})json";

const char *kTensor22Pairs = R"json({
  "name": "tensor22_pairs",
  "factors": [2, 2],
  "observables": {
    "z": {"dimension": 2, "eigenvalues": [1, -1],
          "eigenspaces": [[[1,0]], [[0,1]]]},
    "x": {"dimension": 2, "eigenvalues": [1, -1],
          "eigenspaces": [[[1,1]], [[1,-1]]]},
    "A1": {"local": "z", "slot": 0},
    "A2": {"local": "x", "slot": 0},
    "B1": {"local": "z", "slot": 1},
    "B2": {"local": "x", "slot": 1}
  },
  "states": {"singlet": [0, 1, -1, 0]},
  "queries": [
    {"kind": "commutators", "a1": "A1", "a2": "A2", "b1": "B1", "b2": "B2",
     "state": "singlet", "label": "Eq. (Lf8)",
     "expect": {"premises_hold": true, "residual_max": 1e-9}},
    {"kind": "check_pcc", "a": "A1", "alpha": 1, "b": "B1", "beta": -1,
     "state": "singlet", "label": "Eq. (Lx8f1)", "expect": {"holds": true}},
    {"kind": "check_pcc", "a": "A2", "alpha": 1, "b": "B2", "beta": -1,
     "state": "singlet", "expect": {"holds": true}},
    {"kind": "symmetric", "a": "A1", "alpha": 1, "b": "B1", "beta": -1,
     "state": "singlet", "expect": {"symmetric": true}}
  ]
})json";

const char *kTensor22Family = R"json({
  "name": "tensor22_family",
  "factors": [2, 2],
  "observables": {
    "za": {"dimension": 2, "eigenvalues": [1, -1],
           "eigenspaces": [[[1,0]], [[0,1]]]},
    "xb": {"dimension": 2, "eigenvalues": [1, -1],
           "eigenspaces": [[[1,1]], [[1,-1]]]}
  },
  "queries": [
    {"kind": "family_invariance", "a": "za", "b": "xb", "trials": 20,
     "label": "Eq. (A77a)",
     "expect": {"identity_ok": true, "singlet_passes": 20,
                "min_control_failures": 1}}
  ]
})json";

const char *kDim4Shared = R"json({
  "name": "dim4_shared",
  "dimension": 4,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,1,0,0]], [[0,0,1,0],[0,0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0,0],[0,0,1,0]], [[0,1,0,0],[0,0,0,1]]]}
  },
  "states": {"beta_plus": [1, 0, 1, 0]},
  "queries": [
    {"kind": "conditional", "target": "B", "target_value": 1,
     "given": "A", "given_value": 1, "state": "beta_plus",
     "label": "Sec. 6.2", "expect": {"value": 1}},
    {"kind": "conditional", "target": "B", "target_value": 1,
     "given": "A", "given_value": -1, "state": "beta_plus",
     "expect": {"value": 1}},
    {"kind": "conditional", "target": "A", "target_value": 1,
     "given": "B", "given_value": 1, "state": "beta_plus",
     "expect": {"value": 0.5}},
    {"kind": "shared_outcome", "a": "A", "b": "B", "beta": 1,
     "state": "beta_plus", "label": "Eq. (Lx8f)",
     "expect": {"eigenstate": true, "all_hold": true,
                "any_symmetric": false, "exclusions_certified": true,
                "max_reversed_below": 0.6}}
  ]
})json";

const char *kGhz = R"json({
  "name": "ghz",
  "factors": [2, 2, 2],
  "observables": {
    "z": {"dimension": 2, "eigenvalues": [1, -1],
          "eigenspaces": [[[1,0]], [[0,1]]]},
    "A": {"local": "z", "slot": 0},
    "B": {"local": "z", "slot": 1},
    "C": {"local": "z", "slot": 2}
  },
  "states": {"branch2": [1, 0, 0, 0, 0, 0, 0, 1]},
  "queries": [
    {"kind": "solve_triple", "a": "A", "b": "B", "c": "C",
     "triples": [[1,1,1],[-1,-1,-1]], "joint": true, "label": "Eq. (A9)",
     "expect": {"feasible": true, "dimension": 2,
                "span": [[1,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,1]]}},
    {"kind": "chain", "events": [{"observable": "A", "value": 1},
                                 {"observable": "B", "value": 1}],
     "target": {"observable": "C", "value": 1}, "state": "branch2",
     "label": "Eq. (A1)", "expect": {"value": 1}},
    {"kind": "chain", "events": [{"observable": "A", "value": 1},
                                 {"observable": "B", "value": -1}],
     "target": {"observable": "C", "value": 1}, "state": "branch2",
     "label": "Eq. (A4)", "expect": {"error": "DegenerateCondition"}},
    {"kind": "solve_triple", "a": "A", "b": "B", "c": "C",
     "triples": [[1,1,1],[1,1,-1]], "joint": true, "label": "Appendix B",
     "expect": {"feasible": false}},
    {"kind": "solve_triple", "a": "A", "b": "B", "c": "C",
     "triples": [[1,1,1]], "joint": false, "label": "Eq. (A3)",
     "expect": {"feasible": true}}
  ]
})json";

const char *kAeqB = R"json({
  "name": "AeqB",
  "dimension": 3,
  "observables": {
    "A": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0],[0,1,0]], [[0,0,1]]]},
    "B": {"eigenvalues": [1, -1],
          "eigenspaces": [[[1,0,0],[0,1,0]], [[0,0,1]]]}
  },
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "label": "Sec. 5.1.5",
     "expect": {"feasible": true, "dimension": 3}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "expect": {"feasible": false, "dimension": 0}}
  ]
})json";

const char *kEmbedded8 = R"json({
  "name": "embedded8",
  "factors": [4, 2],
  "observables": {
    "a4": {"dimension": 4, "eigenvalues": [1, -1],
           "eigenspaces": [[[1,0,0,0],[0,1,0,0]], [[0,0,1,0],[0,0,0,1]]]},
    "b2": {"dimension": 2, "eigenvalues": [1, -1],
           "eigenspaces": [[[1,0]], [[0,1]]]},
    "A": {"local": "a4", "slot": 0},
    "B": {"local": "b2", "slot": 1}
  },
  "queries": [
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,-1],[-1,1]],
     "label": "Sec. 5.5",
     "expect": {"feasible": true, "dimension": 4,
                "span": [[0,1,0,0,0,0,0,0],[0,0,0,1,0,0,0,0],
                         [0,0,0,0,1,0,0,0],[0,0,0,0,0,0,1,0]]}},
    {"kind": "solve_gamma", "a": "A", "b": "B", "pairs": [[1,1],[-1,-1]],
     "expect": {"feasible": true, "dimension": 4,
                "span": [[1,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0],
                         [0,0,0,0,0,1,0,0],[0,0,0,0,0,0,0,1]]}}
  ]
})json";

std::vector<Scenario> parse_all() {
    std::vector<Scenario> out;
    for (const char *text :
         {kDim5AeqB, kDim5AmB, kDim4AmB, kDim4Split31, kDim3Oneway, kDim2AmB,
          kDim4Rotated, kTensor22, kTensor22Pairs, kTensor22Family,
          kDim4Shared, kGhz, kAeqB, kEmbedded8}) {
        out.push_back(parse_scenario(text));
    }
    return out;
}

} // namespace

const std::vector<Scenario> &builtin_scenarios() {
    static const std::vector<Scenario> scenarios = parse_all();
    return scenarios;
}

const Scenario *find_builtin(const std::string &name) {
    for (const auto &s : builtin_scenarios()) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

} // namespace qpcc
