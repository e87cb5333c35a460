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

#include "ffval/json_io.hpp"
#include "fixtures.hpp"

using namespace ffval;
using namespace ffval_tests;

TEST_CASE("field round-trips") {
  for (FieldPtr f : {Field::rationals(), Field::prime(7),
                     Field::extension_canonical(5, 2)}) {
    FieldPtr back = field_from_json(field_to_json(f));
    CHECK(Field::same(f, back));
  }
}

TEST_CASE("element, poly, ratfunc, place round-trips") {
  FieldPtr F = Field::prime(7);
  FElem x = F->from_int(5);
  CHECK(felem_from_json(felem_to_json(x), F) == x);

  FieldPtr Q = Field::rationals();
  FElem r = Q->from_int(2) / Q->from_int(3);
  CHECK(felem_from_json(felem_to_json(r), Q) == r);

  Poly p = Poly::from_ints(F, {1, 0, 3});
  CHECK(poly_from_json(poly_to_json(p), F) == p);

  RatFunc f(Poly::from_ints(F, {1, 1}), Poly::from_ints(F, {0, 1}));
  CHECK(ratfunc_from_json(ratfunc_to_json(f), F) == f);

  Place pl = Place::finite(Poly::from_ints(F, {-3, 0, 1}));
  CHECK(place_from_json(place_to_json(pl), F) == pl);
  Place inf = Place::infinite(F);
  CHECK(place_from_json(place_to_json(inf), F) == inf);
}

TEST_CASE("ruspec and tower round-trips") {
  FieldPtr F = Field::prime(7);
  RuSpec R(3, {{F->zero(), 1}, {F->one(), 3}}, {{F->from_int(2), 2}});
  RuSpec back = ruspec_from_json(ruspec_to_json(R), F);
  CHECK(back.q() == R.q());
  CHECK(back.zeros() == R.zeros());
  CHECK(back.poles() == R.poles());

  TowerPtr tw = Tower::make_base(F);
  tw = adjoin_root(tw, 3, tw->t());
  tw = adjoin_root(tw, 5, tw->t() + tw->one());
  TowerPtr tback = tower_from_json(tower_to_json(tw));
  CHECK(Tower::same(tw, tback));

  TowerElement x = tw->beta(0) * tw->beta(1) + tw->t();
  CHECK(tower_element_from_json(tower_element_to_json(x), tw) == x);
}

TEST_CASE("tower place round-trip replays the path") {
  FieldPtr F = Field::prime(7);
  TowerPtr tw = Tower::make_base(F);
  tw = adjoin_root(tw, 3, tw->t());
  for (const TowerPlace& ch :
       places_above(Place::finite(Poly::from_ints(F, {-1, 1})), tw)) {
    TowerPlace back = tower_place_from_json(tower_place_to_json(ch), tw);
    CHECK(back == ch);
    CHECK(back.path() == ch.path());
  }
}

TEST_CASE("construction state round-trip is byte-stable") {
  ConstructionState st = f7_single_state();
  std::string once = dump_json(construction_state_to_json(st));
  ConstructionState back = construction_state_from_json(parse_json_text(once));
  std::string twice = dump_json(construction_state_to_json(back));
  CHECK(once == twice);
  CHECK(back.i == st.i);
  CHECK(Tower::same(back.tower, st.tower));
  REQUIRE(back.S.size() == st.S.size());
  for (size_t u = 0; u < st.S.size(); ++u) {
    REQUIRE(back.S[u].size() == st.S[u].size());
    for (size_t k = 0; k < st.S[u].size(); ++k) {
      CHECK(back.S[u][k].s == st.S[u][k].s);
      CHECK(back.S[u][k].prime == st.S[u][k].prime);
    }
  }
  // The reloaded state still satisfies the invariants.
  CHECK(check_eq_odd(back).all_pass());
  CHECK(check_eq_even(back, back.cfg.witness_pairs).all_pass());
}

TEST_CASE("schema violations raise SchemaError") {
  CHECK_THROWS_AS(parse_json_text("{broken"), SchemaError);
  CHECK_THROWS_AS(field_from_json(Json{{"kind", "septenary"}}), SchemaError);
  CHECK_THROWS_AS(field_from_json(Json{{"p", 7}}), SchemaError);
  FieldPtr F = Field::prime(7);
  CHECK_THROWS_AS(place_from_json(Json{{"pi", Json::array()}}, F), SchemaError);
  CHECK_THROWS_AS(construction_config_from_json(Json::object()), SchemaError);
}

TEST_CASE("dump_json is canonical") {
  Json a{{"zebra", 1}, {"apple", 2}};
  Json b{{"apple", 2}, {"zebra", 1}};
  CHECK(dump_json(a) == dump_json(b));
  CHECK(dump_json(a).back() == '\n');
}
