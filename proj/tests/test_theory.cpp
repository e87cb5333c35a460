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

#include "ffval/theory.hpp"

using namespace ffval;

namespace {
TheoryConfig f7_theory() {
  FieldPtr U = Field::prime(7);
  TheoryConfig cfg;
  cfg.U = U;
  cfg.Q = {3};
  cfg.R.emplace(3, RuSpec(3, {{U->zero(), 1}}, {}));
  cfg.P.push_back(Poly::from_ints(U, {-3, 0, 1}));
  cfg.Z.push_back(Poly::from_ints(U, {-1, 1}));
  cfg.closure_sample = {U->zero(), U->one(), U->from_int(6)};
  return cfg;
}
}  // namespace

TEST_CASE("theory config validation") {
  TheoryConfig cfg = f7_theory();
  CHECK_NOTHROW(validate_theory_config(cfg));

  SUBCASE("the characteristic must not be sampled") {
    // No R with q equal to the characteristic can even be built, so the
    // config check only ever sees the missing-R violation.
    CHECK_THROWS_AS(RuSpec(7, {{cfg.U->zero(), 1}}, {}), ValidationError);
    cfg.Q.push_back(7);
    CHECK_THROWS_AS(validate_theory_config(cfg), ValidationError);
  }
  SUBCASE("every sampled prime needs its R") {
    cfg.Q.push_back(2);
    CHECK_THROWS_AS(validate_theory_config(cfg), ValidationError);
  }
  SUBCASE("closure sample must consist of attainable values") {
    // 3 is not a cube mod 7, so y^3 = R_3(3) = 3 has no solution in U.
    cfg.closure_sample.push_back(cfg.U->from_int(3));
    CHECK_THROWS_AS(validate_theory_config(cfg), ValidationError);
  }
}

TEST_CASE("prefix growth and axiom checks") {
  TheoryConfig cfg = f7_theory();
  TowerPtr t0 = build_G_prefix(cfg, 0);
  TowerPtr t1 = build_G_prefix(cfg, 1);
  TowerPtr t2 = build_G_prefix(cfg, 2);
  CHECK(t0->num_levels() == 0);
  CHECK(t1->num_levels() == 1);
  CHECK(t2->num_levels() == 2);
  // Every adjunction degree is a sampled prime.
  for (const KummerStep& s : t2->steps()) CHECK(s.q == 3);

  std::vector<TowerElement> sample{t1->t(), t1->beta(0)};
  Report r0 = check_axioms(t0, cfg, {t0->t()});
  Report r1 = check_axioms(t1, cfg, sample);
  Report r2 = check_axioms(t2, cfg, sample);

  // Items 2 and 3 never depend on the prefix depth.
  for (const Report* r : {&r0, &r1, &r2})
    for (const CheckItem& it : r->items)
      if (it.what.rfind("axiom1", 0) != 0) CHECK(it.pass);

  // Root closure misses are non-increasing in depth and vanish at depth 2.
  int f1 = count_item1_failures(r1), f2 = count_item1_failures(r2);
  CHECK(f2 <= f1);
  CHECK(f2 == 0);
  CHECK(r2.all_pass());
}

TEST_CASE("degree obstruction in axiom 2") {
  TheoryConfig cfg = f7_theory();
  // A cubic that is irreducible over F7 but whose degree is the sampled
  // prime: the degree obstruction cannot certify it, so the item fails.
  cfg.P.clear();
  cfg.P.push_back(Poly::from_ints(cfg.U, {-2, 0, 0, 1}));  // T^3 - 2
  REQUIRE(poly_is_irreducible(cfg.P[0]));
  TowerPtr t1 = build_G_prefix(cfg, 1);
  Report r = check_axioms(t1, cfg, {t1->t()});
  bool found = false;
  for (const CheckItem& it : r.items)
    if (it.what.rfind("axiom2", 0) == 0) {
      found = true;
      CHECK_FALSE(it.pass);
    }
  CHECK(found);
}
