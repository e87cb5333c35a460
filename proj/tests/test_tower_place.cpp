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

#include "ffval/tower_place.hpp"

using namespace ffval;

namespace {
TowerPtr cube_root_of_t() {
  FieldPtr F = Field::prime(7);
  TowerPtr base = Tower::make_base(F);
  return adjoin_root(base, 3, base->t());
}
}  // namespace

TEST_CASE("ramified chain above the zero of the radicand") {
  TowerPtr tw = cube_root_of_t();
  FieldPtr F = tw->const_field();
  auto chains = places_above(Place::finite(Poly::x(F)), tw);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].chain_e() == 3);
  CHECK(chains[0].chain_f() == 1);
  // The root is a uniformizer: value 1 in the normalized value group.
  CHECK(ord_tower(chains[0], tw->beta(0)) == 1);
  CHECK(ord_tower(chains[0], tw->t()) == 3);
}

TEST_CASE("split chain where the residue has all cube roots") {
  TowerPtr tw = cube_root_of_t();
  FieldPtr F = tw->const_field();
  // At (t - 1) the radicand residue is 1, and F7 contains all three cube
  // roots of 1: three unramified chains of degree 1.
  auto chains = places_above(Place::finite(Poly::from_ints(F, {-1, 1})), tw);
  REQUIRE(chains.size() == 3);
  long long sum = 0;
  for (const auto& ch : chains) {
    CHECK(ch.chain_e() == 1);
    CHECK(ch.chain_f() == 1);
    sum += ch.chain_e() * ch.chain_f();
    CHECK(ord_tower(ch, tw->beta(0)) == 0);
  }
  CHECK(sum == tw->degree());
}

TEST_CASE("inert chain where the residue is not a cube") {
  TowerPtr tw = cube_root_of_t();
  FieldPtr F = tw->const_field();
  // At (t - 2) the radicand residue is 2, not a cube mod 7: one chain, f=3.
  auto chains = places_above(Place::finite(Poly::from_ints(F, {-2, 1})), tw);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].chain_e() == 1);
  CHECK(chains[0].chain_f() == 3);
  CHECK(chains[0].residue_field()->degree_over_prime() == 3);
}

TEST_CASE("infinite place ramifies for the cube root of t") {
  TowerPtr tw = cube_root_of_t();
  auto chains = places_above(Place::infinite(tw->const_field()), tw);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].chain_e() == 3);
  CHECK(ord_tower(chains[0], tw->t()) == -3);
  CHECK(ord_tower(chains[0], tw->beta(0)) == -1);
}

TEST_CASE("e*f sum equals the tower degree above every base place") {
  FieldPtr F = Field::prime(5);
  TowerPtr tw = Tower::make_base(F);
  tw = adjoin_root(tw, 2, tw->t());
  tw = adjoin_root(
      tw, 3, tw->from_ratfunc(RatFunc::t(F) + RatFunc::constant(F->one())));
  for (long long i = 0; i < 10; ++i) {
    Place p = Place::finite(nth_monic_irreducible(F, i));
    long long sum = 0;
    for (const auto& ch : places_above(p, tw))
      sum += ch.chain_e() * ch.chain_f();
    CHECK(sum == tw->degree());
  }
}

TEST_CASE("ramification predictor agrees with the discriminant test") {
  TowerPtr tw = cube_root_of_t();
  FieldPtr F = tw->const_field();
  for (long long i = 0; i < 8; ++i) {
    Place p = Place::finite(nth_monic_irreducible(F, i));
    for (const auto& ch : places_above(p, tw)) {
      TowerElement W =
          tw->from_ratfunc(RatFunc::t(F) - RatFunc::constant(F->from_int(3)));
      long long e = ramification_in_step(ch, 3, W);
      CHECK(((e == 1) == unramified_by_discriminant(ch, 3, W)));
      CHECK((e == 1 || e == 3));
      long long v = ord_tower(ch, W);
      CHECK((e == 3) == (((v % 3) + 3) % 3 != 0));
    }
  }
}

TEST_CASE("chain with e not divisible by q") {
  FieldPtr F = Field::prime(7);
  TowerPtr tw = cube_root_of_t();
  // Tower degree 3; q = 5 does not divide it.
  TowerPlace ch = factor_with_e_not_div_q(Place::finite(Poly::x(F)), tw, 5);
  CHECK(ch.chain_e() % 5 != 0);
  CHECK_THROWS_AS(factor_with_e_not_div_q(Place::finite(Poly::x(F)), tw, 3),
                  ValueError);
}

TEST_CASE("residues along a chain") {
  TowerPtr tw = cube_root_of_t();
  FieldPtr F = tw->const_field();
  auto chains = places_above(Place::finite(Poly::from_ints(F, {-1, 1})), tw);
  // Each chain pins the root to one cube root of 1; the three chains see
  // three distinct residues.
  std::vector<FElem> seen;
  for (const auto& ch : chains) {
    FElem r = tower_residue(ch, tw->beta(0));
    CHECK(r.pow(3) == F->one());
    for (const FElem& s : seen) CHECK(r != s);
    seen.push_back(r);
  }
}

TEST_CASE("cancellation is reported, never mis-valued") {
  TowerPtr tw = cube_root_of_t();
  // x = b - b is zero: infinite order, not ambiguous.
  CHECK(ord_tower(places_above(Place::finite(Poly::x(tw->const_field())),
                               tw)[0],
                  tw->beta(0) - tw->beta(0)) == kOrdInfinity);
}
