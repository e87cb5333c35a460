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

#include <doctest.h>

#include "fixtures.hpp"

using namespace ffval;
using namespace ffval_tests;

TEST_CASE("config validation names the violated clause") {
  ConstructionConfig cfg = f7_single_config();
  CHECK_NOTHROW(validate_config(cfg));

  SUBCASE("family primes must be distinct") {
    cfg.indices.push_back(cfg.indices[0]);
    CHECK_THROWS_AS(validate_config(cfg), ValidationError);
  }
  SUBCASE("witness stream must not be empty") {
    cfg.witness_stream.clear();
    CHECK_THROWS_AS(validate_config(cfg), ValidationError);
  }
  SUBCASE("enumeration must not be empty") {
    cfg.enumeration.clear();
    CHECK_THROWS_AS(validate_config(cfg), ValidationError);
  }
  SUBCASE("witness pair index must exist") {
    cfg.witness_pairs.emplace_back(9, cfg.F->one(), cfg.F->one());
    CHECK_THROWS_AS(validate_config(cfg), ValidationError);
  }
  SUBCASE("A_u elements must live in the configured field") {
    cfg.indices[0].A.push_back(Field::prime(5)->one());
    CHECK_THROWS_AS(validate_config(cfg), ValidationError);
  }
}

TEST_CASE("sixteen stages of the F7 fixture") {
  ConstructionState st = f7_single_state();
  CHECK(st.i == 16);
  // Three cube roots were adjoined along the way.
  CHECK(st.tower->num_levels() == 3);
  CHECK(st.tower->degree() == 27);
  CHECK(st.S.size() == 1);
  CHECK(st.S[0].size() == 4);
  // Standing invariants hold on the final state.
  CHECK(check_eq_odd(st).all_pass());
  CHECK(check_eq_even(st, st.cfg.witness_pairs).all_pass());
  CHECK(properties_report(st).all_pass());
  // The split stage recorded its generated pair.
  REQUIRE(!st.generated_pairs.empty());
  auto [u, r1, r2] = st.generated_pairs[0];
  CHECK(u == 1);
  CHECK(r1 + r2 == st.cfg.F->one());
}

TEST_CASE("determinism: identical config gives identical history") {
  ConstructionState a = f7_single_state();
  ConstructionState b = f7_single_state();
  REQUIRE(a.log.size() == b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].kind == b.log[i].kind);
    CHECK(a.log[i].detail == b.log[i].detail);
  }
  CHECK(Tower::same(a.tower, b.tower));
}

TEST_CASE("subset formula evaluations") {
  ConstructionState st = f7_single_state();
  const FieldPtr& F = st.cfg.F;
  std::vector<std::pair<FElem, FElem>> none;
  // The engine produced a pair for some r outside A_1 = {0}: must be out.
  for (auto& [u, r1, r2] : st.generated_pairs)
    CHECK(eval_def_Au(st, u, r1 + r2, none) == DefAuOutcome::Out);
  // Elements of A_1 are never excluded.
  for (const FElem& a : st.cfg.indices[0].A)
    CHECK(eval_def_Au(st, 1, a, none) != DefAuOutcome::Out);
}

TEST_CASE("constant-field formula accepts the fragment") {
  ConstructionState st = f7_single_state();
  std::vector<TowerElement> fragment;
  for (const SEntry& e : st.S[0]) fragment.push_back(e.s);
  for (long long v : {0, 1}) {
    DefFResult r = eval_def_F(
        st,
        st.tower->from_ratfunc(RatFunc::constant(st.cfg.F->from_int(v))),
        fragment);
    CHECK(r.outcome != DefFOutcome::Rejected);
  }
}

TEST_CASE("negative controls: every corruption is flagged") {
  ConstructionState healthy = f7_single_state();
  auto scenarios = corruption_scenarios();
  REQUIRE(scenarios.size() >= 10);
  for (const Corruption& c : scenarios) {
    CAPTURE(c.name);
    CHECK(corruption_flagged(healthy, c));
  }
}

TEST_CASE("healthy state passes what the corruptions break") {
  ConstructionState st = f7_single_state();
  CHECK(check_eq_odd(st).all_pass());
  CHECK(check_eq_even(st, st.cfg.witness_pairs).all_pass());
  CHECK(properties_report(st).all_pass());
}
