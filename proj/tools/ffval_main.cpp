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
// Batch front-end.  Subcommands:
//   validate  parse + semantic-check a construction or theory config
//   run       execute construction stages, emit state/log/report artifacts
//   check     re-check invariants and formula evaluations on a saved state
//   theory    build a model prefix and report on the axiom sample
//   oracle    run a seeded randomized property suite
//
// Exit codes: 0 pass, 1 semantic validation failure, 2 I/O or schema
// problem (including usage errors), 3 invariant failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffval/json_io.hpp"
#include "ffval/oracles.hpp"

namespace {

using namespace ffval;

constexpr int kExitPass = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << text;
}

std::string log_text(const ConstructionState& st) {
  std::ostringstream os;
  for (const LogRecord& lr : st.log)
    os << lr.i << "\t" << lr.kind << "\t" << lr.detail << "\n";
  return os.str();
}

// Witness pairs file: either {"pairs": [...]} or a bare array of
// {"u": int, "r1": felem, "r2": felem}.
std::vector<std::tuple<int, FElem, FElem>> load_pairs(const std::string& path,
                                                      const FieldPtr& F) {
  Json j = parse_json_text(read_file(path));
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("pairs"))
      throw SchemaError("witness file: expected key \"pairs\"");
    arr = &j.at("pairs");
  }
  if (!arr->is_array()) throw SchemaError("witness file: expected an array");
  std::vector<std::tuple<int, FElem, FElem>> out;
  for (const Json& p : *arr) {
    if (!p.is_object() || !p.contains("u") || !p.contains("r1") ||
        !p.contains("r2"))
      throw SchemaError("witness file: each pair needs u, r1, r2");
    out.emplace_back(p.at("u").get<int>(), felem_from_json(p.at("r1"), F),
                     felem_from_json(p.at("r2"), F));
  }
  return out;
}

int cmd_validate(const std::string& config_path) {
  Json j = parse_json_text(read_file(config_path));
  try {
    if (j.is_object() && j.contains("indices")) {
      validate_config(construction_config_from_json(j));
      std::cout << "ok: construction config is valid\n";
    } else if (j.is_object() && j.contains("Q")) {
      validate_theory_config(theory_config_from_json(j));
      std::cout << "ok: theory config is valid\n";
    } else {
      throw SchemaError(
          "config: expected a construction config (key \"indices\") or a "
          "theory config (key \"Q\")");
    }
  } catch (const ValidationError& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitPass;
}

int cmd_run(const std::string& config_path, const std::string& resume_path,
            int steps, long long seed, const std::string& out_dir) {
  ConstructionState st = [&] {
    if (!resume_path.empty())
      return construction_state_from_json(
          parse_json_text(read_file(resume_path)));
    ConstructionConfig cfg =
        construction_config_from_json(parse_json_text(read_file(config_path)));
    if (seed >= 0) cfg.seed = static_cast<unsigned long long>(seed);
    validate_config(cfg);
    return new_state(cfg);
  }();
  if (steps < 0) steps = st.cfg.max_steps;

  namespace fs = std::filesystem;
  if (!out_dir.empty()) fs::create_directories(out_dir);
  auto out_path = [&](const char* name) {
    return (fs::path(out_dir) / name).string();
  };

  try {
    for (int k = 0; k < steps; ++k) st = step(st);
  } catch (const InvariantFailure& e) {
    std::cout << "invariant failure at stage " << st.i << ": " << e.what()
              << "\n";
    if (!out_dir.empty()) {
      write_file(out_path("dump.json"), e.dump());
      std::cout << "forensic dump: " << out_path("dump.json") << "\n";
    }
    return kExitInvariant;
  }

  Report odd = check_eq_odd(st);
  Report even = check_eq_even(st, st.cfg.witness_pairs);
  Report props = properties_report(st);
  Json report{{"oddStage", report_to_json(odd)},
              {"evenStage", report_to_json(even)},
              {"properties", report_to_json(props)}};
  if (!out_dir.empty()) {
    write_file(out_path("state.json"), dump_json(construction_state_to_json(st)));
    write_file(out_path("log.txt"), log_text(st));
    write_file(out_path("report.json"), dump_json(report));
  }
  std::cout << "stages executed: " << st.i << "\n"
            << "tower: " << st.tower->str() << "\n";
  for (size_t u = 0; u < st.S.size(); ++u)
    std::cout << "|S_" << (u + 1) << "| = " << st.S[u].size() << "\n";
  std::cout << odd.str() << even.str() << props.str();
  bool ok = odd.all_pass() && even.all_pass() && props.all_pass();
  std::cout << (ok ? "all checks pass\n" : "CHECK FAILURES\n");
  return ok ? kExitPass : kExitInvariant;
}

int cmd_check(const std::string& state_path, const std::string& formulas,
              const std::string& witness_path) {
  ConstructionState st =
      construction_state_from_json(parse_json_text(read_file(state_path)));
  std::vector<std::string> wanted;
  {
    std::istringstream is(formulas);
    std::string tok;
    while (std::getline(is, tok, ',')) wanted.push_back(tok);
  }
  std::vector<std::tuple<int, FElem, FElem>> extra = st.cfg.witness_pairs;
  if (!witness_path.empty())
    for (auto& p : load_pairs(witness_path, st.cfg.F)) extra.push_back(p);

  bool ok = true;
  for (const std::string& f : wanted) {
    if (f == "invariants") {
      Report odd = check_eq_odd(st);
      Report even = check_eq_even(st, extra);
      std::cout << odd.str() << even.str();
      ok = ok && odd.all_pass() && even.all_pass();
    } else if (f == "properties") {
      Report props = properties_report(st);
      std::cout << props.str();
      ok = ok && props.all_pass();
    } else if (f == "defF") {
      // Constant-field formula on the canonical sample {0, 1} + A_1 with the
      // S_1 elements as the fragment.
      std::vector<TowerElement> fragment;
      for (const SEntry& se : st.S.empty() ? std::vector<SEntry>{} : st.S[0])
        fragment.push_back(se.s);
      std::vector<FElem> sample{st.cfg.F->zero(), st.cfg.F->one()};
      if (!st.cfg.indices.empty())
        for (const FElem& a : st.cfg.indices[0].A) sample.push_back(a);
      for (const FElem& a : sample) {
        DefFResult r = eval_def_F(
            st, st.tower->from_ratfunc(RatFunc::constant(a)), fragment);
        const char* verdict = r.outcome == DefFOutcome::Accepted ? "accepted"
                              : r.outcome == DefFOutcome::Rejected
                                  ? "rejected"
                                  : "undetermined";
        std::cout << "defF(" << a.str() << ") = " << verdict << "\n";
        ok = ok && r.outcome != DefFOutcome::Rejected;
      }
    } else if (f == "defAu") {
      if (extra.empty() && st.generated_pairs.empty())
        throw SchemaError(
            "check: --formulas=defAu needs witness pairs (--witnesses FILE) "
            "or a state with engine-generated pairs");
      std::vector<std::tuple<int, FElem, FElem>> all = st.generated_pairs;
      for (auto& p : extra) all.push_back(p);
      for (const auto& [u, r1, r2] : all) {
        std::vector<std::pair<FElem, FElem>> none;
        DefAuOutcome o = eval_def_Au(st, u, r1 + r2, none);
        const char* verdict = o == DefAuOutcome::In    ? "in"
                              : o == DefAuOutcome::Out ? "out"
                                                       : "undetermined";
        std::cout << "defA_" << u << "(" << (r1 + r2).str() << ") = "
                  << verdict << "\n";
      }
    } else {
      throw SchemaError("check: unknown formula \"" + f +
                        "\" (known: invariants, properties, defF, defAu)");
    }
  }
  return ok ? kExitPass : kExitInvariant;
}

int cmd_theory(const std::string& config_path, int depth,
               const std::string& out_dir) {
  TheoryConfig cfg =
      theory_config_from_json(parse_json_text(read_file(config_path)));
  validate_theory_config(cfg);
  TowerPtr tw = build_G_prefix(cfg, depth);
  TowerPtr prev = depth > 0 ? build_G_prefix(cfg, depth - 1) : tw;
  // Sample: t plus every root adjoined strictly before the last round --
  // exactly the elements whose own roots the last round added.
  std::vector<TowerElement> sample{prev->t()};
  for (int l = 0; l < prev->num_levels(); ++l) sample.push_back(prev->beta(l));
  Report rep = check_axioms(tw, cfg, sample);
  std::cout << "prefix tower: " << tw->str() << "\n" << rep.str();
  std::cout << "root-closure misses: " << count_item1_failures(rep) << "\n";
  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "report.json").string(),
               dump_json(report_to_json(rep)));
  }
  return rep.all_pass() ? kExitPass : kExitValidation;
}

int cmd_oracle(const std::string& suite, unsigned long long seed,
               long long trials) {
  std::vector<std::string> names = oracle_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string all;
    for (const std::string& n : names) all += (all.empty() ? "" : ", ") + n;
    throw SchemaError("oracle: unknown suite \"" + suite + "\" (known: " +
                      all + ")");
  }
  OracleResult r = run_oracle_suite(suite, seed, trials);
  std::cout << r.suite << ": " << r.trials << " trials, " << r.failures
            << " failures";
  if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
  std::cout << "\n" << (r.pass() ? "PASS" : "FAIL") << "\n";
  return r.pass() ? kExitPass : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact valuation engine for Kummer towers over F(t)"};
  app.require_subcommand(1);

  std::string config_path, resume_path, state_path, witness_path, out_dir;
  std::string formulas = "invariants,properties";
  std::string suite;
  int steps = -1, depth = 0;
  long long seed_override = -1, trials = 1000;
  unsigned long long oracle_seed = 1;

  CLI::App* validate = app.add_subcommand("validate", "validate a config");
  validate->add_option("config", config_path, "config JSON path")->required();

  CLI::App* run = app.add_subcommand("run", "run construction stages");
  run->add_option("--config", config_path, "construction config JSON");
  run->add_option("--resume", resume_path, "saved state JSON to continue");
  run->add_option("--steps", steps, "stages to execute (default: maxSteps)");
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--out", out_dir, "artifact directory");

  CLI::App* check = app.add_subcommand("check", "re-check a saved state");
  check->add_option("state", state_path, "state JSON path")->required();
  check->add_option("--formulas", formulas,
                    "comma list: invariants,properties,defF,defAu");
  check->add_option("--witnesses", witness_path, "witness pairs JSON");

  CLI::App* theory = app.add_subcommand("theory", "axiom report on a prefix");
  theory->add_option("--config", config_path, "theory config JSON")
      ->required();
  theory->add_option("--depth", depth, "prefix depth")->required();
  theory->add_option("--out", out_dir, "artifact directory");

  CLI::App* oracle = app.add_subcommand("oracle", "run a property suite");
  oracle->add_option("--suite", suite, "suite name")->required();
  oracle->add_option("--seed", oracle_seed, "RNG seed");
  oracle->add_option("--trials", trials, "trial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitIo;
  }

  try {
    if (validate->parsed()) return cmd_validate(config_path);
    if (run->parsed()) {
      if (config_path.empty() == resume_path.empty()) {
        std::cerr << "run: exactly one of --config / --resume is required\n";
        return kExitIo;
      }
      return cmd_run(config_path, resume_path, steps, seed_override, out_dir);
    }
    if (check->parsed()) return cmd_check(state_path, formulas, witness_path);
    if (theory->parsed()) return cmd_theory(config_path, depth, out_dir);
    if (oracle->parsed()) return cmd_oracle(suite, oracle_seed, trials);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitIo;
}
