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

#include "ffval/lemmas.hpp"

using namespace ffval;

namespace {
long long mod3(long long v) { return ((v % 3) + 3) % 3; }
}  // namespace

TEST_CASE("order case analysis") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}, {F->one(), 3}}, {{F->from_int(2), 2}});
  RatFunc t = RatFunc::t(F);

  SUBCASE("root coincidence") {
    // s = t, place (t): s - 0 has order 1, n(0) = 1.
    auto out = order_of_R_at(R, t, Place::finite(Poly::x(F)));
    CHECK(out.tag == OrderCase::RootCoincidence);
    CHECK(out.value == 1);
    REQUIRE(out.c.has_value());
    CHECK(*out.c == F->zero());
  }
  SUBCASE("no coincidence") {
    // place (t - 3): s - c is a unit at it for every root c of R.
    auto out = order_of_R_at(R, t, Place::finite(Poly::from_ints(F, {-3, 1})));
    CHECK(out.tag == OrderCase::NoCoincidence);
    CHECK(out.value == 0);
  }
  SUBCASE("pole of s") {
    // ord_inf(t) = -1, deg num - deg den = 4 - 2 = 2.
    auto out = order_of_R_at(R, t, Place::infinite(F));
    CHECK(out.tag == OrderCase::Pole);
    CHECK(out.value == -2);
  }
  SUBCASE("constant s equal to a zero root gives infinite order") {
    auto out =
        order_of_R_at(R, RatFunc::constant(F->one()), Place::infinite(F));
    CHECK(out.value == kOrdInfinity);
  }
  SUBCASE("s identically a pole root is rejected") {
    CHECK_THROWS_AS(
        order_of_R_at(R, RatFunc::constant(F->from_int(2)), Place::infinite(F)),
        ValueError);
  }
}

TEST_CASE("mod-q classification fires exactly one justifying id") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}}, {});
  RatFunc t = RatFunc::t(F);

  // w = t, u = 0, place (t): ord R(w - u) = 1, not divisible; w has no pole
  // there, so id 4.
  auto out = classify_mod_q(R, t, F->zero(), Place::finite(Poly::x(F)));
  CHECK_FALSE(out.divisible);
  CHECK(out.condition_id == 4);

  // w = t^3, u = 0, place at infinity: ord w < 0 and ord R(w) = -3.
  auto out2 = classify_mod_q(R, t.pow(3), F->zero(), Place::infinite(F));
  CHECK(out2.divisible);
  CHECK(out2.condition_id == 3);

  // w = t, u = 0, unrelated place: every w - u - c is a unit, id 2.
  auto out3 =
      classify_mod_q(R, t, F->zero(), Place::finite(Poly::from_ints(F, {-3, 1})));
  CHECK(out3.divisible);
  CHECK(out3.condition_id == 2);

  // w = t, place at infinity: ord w < 0, ord R(w - u) = -1 not divisible: id 5.
  auto out4 = classify_mod_q(R, t, F->zero(), Place::infinite(F));
  CHECK_FALSE(out4.divisible);
  CHECK(out4.condition_id == 5);
}

TEST_CASE("canfind witness satisfies all three congruences") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}}, {});
  RatFunc t = RatFunc::t(F);
  RatFunc a = t + RatFunc::constant(F->one());
  std::vector<Place> T{Place::infinite(F), Place::finite(Poly::x(F))};
  RatFunc b = find_b_canfind(R, a, T);
  RatFunc Rb = R.apply(b), Raq = R.apply(a).pow(3);
  CHECK(mod3(ord_at(Place::infinite(F), Rb)) != 0);
  for (const Place& p : T) {
    CHECK(mod3(ord_at(p, Raq - Rb)) == 0);
    CHECK(mod3(ord_at(p, Raq - Rb.inverse())) == 0);
  }
}

TEST_CASE("canfind respects the avoid list") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}}, {});
  RatFunc a = RatFunc::t(F);
  std::vector<Place> T{Place::infinite(F)};
  Place avoid = Place::finite(Poly::x(F));
  RatFunc b = find_b_canfind(R, a, T, {avoid});
  CHECK(ord_at(avoid, b) == 0);
}

TEST_CASE("canfind preconditions") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}}, {});
  // a constant: no pole inside T.
  CHECK_THROWS_AS(find_b_canfind(R, RatFunc::constant(F->one()),
                                 {Place::infinite(F)}),
                  ValueError);
}

TEST_CASE("forevery: conclusion holds whenever the hypothesis does") {
  FieldPtr F = Field::prime(7);
  RatFunc t = RatFunc::t(F);
  // w an exact cube: the conclusion holds unconditionally.
  auto r = check_forevery(t.pow(3), F->from_int(2), 3);
  CHECK(r.conclusion_holds);
  // w = t: divisor exponent 1, so the hypothesis must fail (vacuous pass).
  auto r2 = check_forevery(t, F->from_int(2), 3);
  CHECK_FALSE(r2.hypothesis_satisfied);
  CHECK(r2.conclusion_holds);
}
