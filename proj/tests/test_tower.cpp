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

#include "ffval/tower.hpp"

using namespace ffval;

TEST_CASE("adjoining a cube root") {
  FieldPtr F = Field::prime(7);
  TowerPtr base = Tower::make_base(F);
  CHECK(base->degree() == 1);
  TowerPtr tw = adjoin_root(base, 3, base->t());
  CHECK(tw->degree() == 3);
  TowerElement b = tw->beta(0);
  CHECK(b.pow(3) == tw->t());
  CHECK(b.pow(4) == tw->t() * b);
  // Arithmetic in the monomial basis.
  TowerElement one = tw->one();
  CHECK((b + one) * (b - one) == b * b - one);
  CHECK((b + one) * (b + one).inverse() == one);
}

TEST_CASE("degree collapse is rejected") {
  FieldPtr F = Field::prime(7);
  TowerPtr base = Tower::make_base(F);
  // t^3 is already a cube.
  CHECK_THROWS_AS(adjoin_root(base, 3, base->t().pow(3)), ValueError);
  TowerPtr tw = adjoin_root(base, 3, base->t());
  // t is a cube now (of the adjoined root).
  CHECK_THROWS_AS(adjoin_root(tw, 3, tw->t()), ValueError);
}

TEST_CASE("compositum degree is the product of the primes") {
  FieldPtr F = Field::prime(7);
  TowerPtr tw = Tower::make_base(F);
  tw = adjoin_root(tw, 3, tw->t());
  TowerElement w2 = tw->from_ratfunc(
      RatFunc::t(F) + RatFunc::constant(F->one()));
  tw = adjoin_root(tw, 5, w2);
  CHECK(tw->degree() == 15);
  CHECK(tw->num_levels() == 2);
  // Exponents stay in canonical range under multiplication.
  TowerElement prod = (tw->beta(0) * tw->beta(1)).pow(7);
  for (const auto& [e, c] : prod.terms()) {
    CHECK(e[0] >= 0);
    CHECK(e[0] < 3);
    CHECK(e[1] >= 0);
    CHECK(e[1] < 5);
  }
}

TEST_CASE("q-th power witnesses") {
  FieldPtr F = Field::prime(7);
  TowerPtr tw = adjoin_root(Tower::make_base(F), 3, Tower::make_base(F)->t());
  // t is the cube of the root.
  auto w = is_qth_power(tw, tw->t(), 3);
  REQUIRE(w.has_value());
  CHECK(w->pow(3) == tw->t());
  // t + 1 is not a cube: valuation obstruction at the place (t + 1).
  CHECK_FALSE(
      is_qth_power(tw, tw->from_ratfunc(RatFunc::t(F) +
                                        RatFunc::constant(F->one())),
                   3)
          .has_value());
}

TEST_CASE("prefix and lift") {
  FieldPtr F = Field::prime(7);
  TowerPtr base = Tower::make_base(F);
  TowerPtr t1 = adjoin_root(base, 3, base->t());
  TowerElement w2 =
      t1->from_ratfunc(RatFunc::t(F) + RatFunc::constant(F->one()));
  TowerPtr t2 = adjoin_root(t1, 5, w2);
  CHECK(Tower::is_prefix(t1, t2));
  CHECK_FALSE(Tower::is_prefix(t2, t1));
  CHECK(Tower::same(t2->prefix(1), t1));
  TowerElement lifted = t2->lift(t1->beta(0));
  CHECK(lifted.pow(3) == t2->t());
  // radicand() lifts the step data.
  CHECK(t2->radicand(0) == t2->t());
}

TEST_CASE("base elements round-trip") {
  FieldPtr F = Field::prime(5);
  TowerPtr tw = adjoin_root(Tower::make_base(F), 2, Tower::make_base(F)->t());
  RatFunc r = (RatFunc::t(F) + RatFunc::constant(F->one())) / RatFunc::t(F);
  TowerElement x = tw->from_ratfunc(r);
  CHECK(x.is_base());
  CHECK(x.as_ratfunc() == r);
  CHECK_FALSE(tw->beta(0).is_base());
}
