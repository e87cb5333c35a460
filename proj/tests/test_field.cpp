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

#include "ffval/field.hpp"

using namespace ffval;

TEST_CASE("prime field arithmetic") {
  FieldPtr F = Field::prime(7);
  FElem a = F->from_int(3), b = F->from_int(5);
  CHECK((a + b) == F->from_int(1));
  CHECK((a * b) == F->from_int(1));
  CHECK((a - b) == F->from_int(5));
  CHECK(-a == F->from_int(4));
  CHECK(a.inverse() == F->from_int(5));
  CHECK(a.pow(6) == F->one());  // Fermat
  CHECK(a.pow(0) == F->one());
  CHECK(F->from_int(-1) == F->from_int(6));
  CHECK(F->order() == 7);
}

TEST_CASE("rationals are exact") {
  FieldPtr Q = Field::rationals();
  FElem third = Q->from_int(1) / Q->from_int(3);
  FElem sixth = Q->from_int(1) / Q->from_int(6);
  CHECK((third + sixth) == Q->from_int(1) / Q->from_int(2));
  CHECK(third.pow(3) == Q->from_int(1) / Q->from_int(27));
  CHECK_FALSE(Q->is_finite());
  CHECK(Q->characteristic() == 0);
}

TEST_CASE("extension fields") {
  FieldPtr F = Field::prime(7);
  FieldPtr E = Field::extension_canonical(7, 2);
  CHECK(E->degree_over_base() == 2);
  CHECK(E->degree_over_prime() == 2);
  CHECK(E->order() == 49);
  FElem g = E->generator();
  // The generator satisfies its modulus, so its high powers reduce.
  CHECK(g.pow(48) == E->one());
  CHECK(g.pow(49) == g);  // Frobenius fixed point count
  // Embedding and projection round-trip.
  FElem three = F->from_int(3);
  FElem lifted = E->embed(three);
  auto back = E->project_to_base(lifted);
  REQUIRE(back.has_value());
  CHECK(*back == three);
  CHECK_FALSE(E->project_to_base(g).has_value());
  // A nested extension knows its subfields.
  CHECK(E->has_subfield(F));
  CHECK(Field::same(E->base(), F));
}

TEST_CASE("enumerate returns all elements in canonical order") {
  FieldPtr F = Field::prime(5);
  auto all = F->enumerate();
  REQUIRE(all.size() == 5);
  for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
  FieldPtr E = Field::extension_canonical(5, 2);
  CHECK(E->enumerate().size() == 25);
}

TEST_CASE("mixed-field operations are rejected") {
  FieldPtr F5 = Field::prime(5), F7 = Field::prime(7);
  CHECK_THROWS_AS(F5->from_int(1) + F7->from_int(1), ValueError);
}

TEST_CASE("division by zero is rejected") {
  FieldPtr F = Field::prime(5);
  CHECK_THROWS_AS(F->one() / F->zero(), ValueError);
  CHECK_THROWS_AS(F->zero().inverse(), ValueError);
}
