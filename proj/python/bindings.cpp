// Copyright 2026 The ffval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Python bindings.  The heavy state lives in C++; the Python surface trades
// JSON documents (as strings), which keeps the binding layer thin and the
// artifacts identical to what the CLI writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffval/json_io.hpp"
#include "ffval/oracles.hpp"

namespace py = pybind11;
using namespace ffval;

namespace {

std::string validate_config_json(const std::string& text) {
  Json j = parse_json_text(text);
  if (j.contains("indices")) {
    validate_config(construction_config_from_json(j));
    return "construction";
  }
  if (j.contains("Q")) {
    validate_theory_config(theory_config_from_json(j));
    return "theory";
  }
  throw SchemaError("config is neither a construction nor a theory config");
}

std::string run_construction_json(const std::string& config_text, int steps) {
  ConstructionConfig cfg =
      construction_config_from_json(parse_json_text(config_text));
  validate_config(cfg);
  if (steps < 0) steps = cfg.max_steps;
  ConstructionState st = new_state(cfg);
  for (int k = 0; k < steps; ++k) st = step(st);
  return dump_json(construction_state_to_json(st));
}

std::string resume_construction_json(const std::string& state_text,
                                     int steps) {
  ConstructionState st =
      construction_state_from_json(parse_json_text(state_text));
  for (int k = 0; k < steps; ++k) st = step(st);
  return dump_json(construction_state_to_json(st));
}

std::string check_state_json(const std::string& state_text) {
  ConstructionState st =
      construction_state_from_json(parse_json_text(state_text));
  Json out;
  out["eqOdd"] = report_to_json(check_eq_odd(st));
  out["eqEven"] = report_to_json(check_eq_even(st, st.cfg.witness_pairs));
  out["properties"] = report_to_json(properties_report(st));
  return dump_json(out);
}

std::string theory_report_json(const std::string& config_text, int depth) {
  TheoryConfig cfg = theory_config_from_json(parse_json_text(config_text));
  validate_theory_config(cfg);
  TowerPtr tw = build_G_prefix(cfg, depth);
  std::vector<TowerElement> sample{tw->t()};
  for (int l = 0; l + 1 < tw->num_levels(); ++l) sample.push_back(tw->beta(l));
  Report rep = check_axioms(tw, cfg, sample);
  Json out = report_to_json(rep);
  out["item1Failures"] = count_item1_failures(rep);
  return dump_json(out);
}

py::dict run_oracle(const std::string& suite, unsigned long long seed,
                    long long trials) {
  OracleResult res = run_oracle_suite(suite, seed, trials);
  py::dict d;
  d["suite"] = res.suite;
  d["trials"] = res.trials;
  d["failures"] = res.failures;
  d["detail"] = res.detail;
  d["pass"] = res.pass();
  return d;
}

long long ord_at_py(long long p_char, const std::string& pi_text,
                    const std::string& ratfunc_text) {
  FieldPtr F = p_char == 0 ? Field::rationals() : Field::prime(p_char);
  Place pl = pi_text == "inf"
                 ? Place::infinite(F)
                 : Place::finite(poly_from_json(parse_json_text(pi_text), F));
  RatFunc f = ratfunc_from_json(parse_json_text(ratfunc_text), F);
  return ord_at(pl, f);
}

}  // namespace

PYBIND11_MODULE(_ffval, m) {
  m.doc() = "Exact valuation engine for Kummer towers over F(t)";

  py::register_exception<SchemaError>(m, "SchemaError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<InvariantFailure>(m, "InvariantFailure");

  m.def("validate_config", &validate_config_json, py::arg("config_json"),
        "Validates a construction or theory config; returns its kind.");
  m.def("run_construction", &run_construction_json, py::arg("config_json"),
        py::arg("steps") = -1,
        "Runs the construction and returns the state as JSON text.");
  m.def("resume_construction", &resume_construction_json,
        py::arg("state_json"), py::arg("steps"),
        "Continues a saved state for the given number of stages.");
  m.def("check_state", &check_state_json, py::arg("state_json"),
        "Re-runs all invariant checkers on a saved state.");
  m.def("theory_report", &theory_report_json, py::arg("config_json"),
        py::arg("depth"),
        "Builds the depth-d prefix and reports the axiom checks.");
  m.def("run_oracle", &run_oracle, py::arg("suite"), py::arg("seed"),
        py::arg("trials"), "Runs a seeded randomized verification suite.");
  m.def("oracle_suites", &oracle_suite_names);
  m.def("ord_at", &ord_at_py, py::arg("characteristic"), py::arg("place"),
        py::arg("ratfunc"),
        "Order of a rational function at a place of F(t); place is a "
        "polynomial JSON document or \"inf\".");
}
