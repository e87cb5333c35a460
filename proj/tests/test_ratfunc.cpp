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

#include "ffval/ratfunc.hpp"

using namespace ffval;

TEST_CASE("canonical form: monic denominator, reduced") {
  FieldPtr F = Field::prime(7);
  Poly x = Poly::x(F);
  // (2t + 2) / (2t^2 - 2) = 1 / (t - 1)
  RatFunc f(Poly::from_ints(F, {2, 2}), Poly::from_ints(F, {-2, 0, 2}));
  CHECK(f.num() == Poly::constant(F->one()));
  CHECK(f.den() == x - Poly::constant(F->one()));
  CHECK(f.den().is_monic());
}

TEST_CASE("arithmetic and inverses") {
  FieldPtr F = Field::prime(7);
  RatFunc t = RatFunc::t(F);
  RatFunc one = RatFunc::constant(F->one());
  RatFunc f = one / (t - one);
  CHECK(f * (t - one) == one);
  CHECK(f.inverse() == t - one);
  CHECK((f + f) == RatFunc::constant(F->from_int(2)) / (t - one));
  CHECK(f.pow(3) * (t - one).pow(3) == one);
  CHECK(f - f == RatFunc(F));
  CHECK((t * t - one) / (t - one) == t + one);
}

TEST_CASE("constants and zero") {
  FieldPtr F = Field::prime(5);
  RatFunc z(F);
  CHECK(z.is_zero());
  RatFunc c = RatFunc::constant(F->from_int(3));
  CHECK(c.is_constant());
  CHECK(c.constant_value() == F->from_int(3));
  CHECK_FALSE(RatFunc::t(F).is_constant());
  CHECK_THROWS_AS(z.inverse(), ValueError);
}

TEST_CASE("deterministic comparison") {
  FieldPtr F = Field::prime(5);
  RatFunc t = RatFunc::t(F);
  CHECK(RatFunc::cmp(t, t) == 0);
  CHECK(RatFunc::cmp(RatFunc::constant(F->one()), t) != 0);
  // Total order is consistent.
  RatFunc a = t + RatFunc::constant(F->one()), b = t;
  CHECK(((a < b) != (b < a)));
}
