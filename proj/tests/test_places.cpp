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

#include <random>

#include "ffval/place.hpp"

using namespace ffval;

namespace {
RatFunc random_rf(const FieldPtr& F, std::mt19937_64& g) {
  auto poly = [&](int maxdeg, bool nonzero) {
    for (;;) {
      int d = static_cast<int>(g() % (maxdeg + 1));
      std::vector<FElem> cs;
      for (int i = 0; i <= d; ++i)
        cs.push_back(F->from_int(
            static_cast<long long>(g() % F->characteristic())));
      Poly p(F, cs);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatFunc(poly(4, false), poly(4, true));
}
}  // namespace

TEST_CASE("ord_at basics") {
  FieldPtr F = Field::prime(7);
  RatFunc t = RatFunc::t(F);
  RatFunc one = RatFunc::constant(F->one());
  Place pt = Place::finite(Poly::x(F));
  Place p1 = Place::finite(Poly::from_ints(F, {-1, 1}));  // (t - 1)
  Place inf = Place::infinite(F);
  RatFunc f = (t - one).pow(2) / t;
  CHECK(ord_at(p1, f) == 2);
  CHECK(ord_at(pt, f) == -1);
  CHECK(ord_at(inf, f) == -1);  // deg num - deg den = 1
  CHECK(ord_at(inf, t.inverse()) == 1);
  CHECK(ord_at(pt, RatFunc(F)) == kOrdInfinity);
  CHECK(ord_at(inf, one) == 0);
}

TEST_CASE("principal divisors have degree zero") {
  for (long long p : {5LL, 7LL}) {
    FieldPtr F = Field::prime(p);
    std::mt19937_64 g(p);
    for (int k = 0; k < 100; ++k) {
      RatFunc f = random_rf(F, g);
      if (f.is_zero()) continue;
      Divisor D = divisor_of(f);
      CHECK(D.degree() == 0);
      // Every listed term is an actual zero or pole.
      for (const auto& [pl, m] : D.terms()) {
        CHECK(m != 0);
        CHECK(ord_at(pl, f) == m);
      }
    }
  }
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  FieldPtr F = Field::prime(5);
  std::mt19937_64 g(17);
  std::vector<Place> places{Place::infinite(F), Place::finite(Poly::x(F)),
                            Place::finite(Poly::from_ints(F, {2, 0, 1}))};
  for (int k = 0; k < 200; ++k) {
    RatFunc f = random_rf(F, g), h = random_rf(F, g);
    if (f.is_zero() || h.is_zero()) continue;
    for (const Place& pl : places) {
      long long vf = ord_at(pl, f), vh = ord_at(pl, h);
      CHECK(ord_at(pl, f * h) == vf + vh);
      if (!(f + h).is_zero()) {
        long long vs = ord_at(pl, f + h);
        CHECK(vs >= std::min(vf, vh));
        if (vf != vh) CHECK(vs == std::min(vf, vh));
      }
    }
  }
}

TEST_CASE("weak approximation hits exact orders") {
  FieldPtr F = Field::prime(7);
  std::vector<std::pair<Place, long long>> constraints{
      {Place::finite(Poly::x(F)), -2},
      {Place::finite(Poly::from_ints(F, {-1, 1})), 3},
      {Place::infinite(F), 1}};
  RatFunc b = weak_approx(F, constraints);
  for (const auto& [pl, m] : constraints) CHECK(ord_at(pl, b) == m);
}

TEST_CASE("residues") {
  FieldPtr F = Field::prime(7);
  RatFunc t = RatFunc::t(F);
  Place p2 = Place::finite(Poly::from_ints(F, {-2, 1}));  // t = 2
  CHECK(residue_at(p2, t * t + RatFunc::constant(F->one())) == F->from_int(5));
  Place quad = Place::finite(Poly::from_ints(F, {-3, 0, 1}));  // t^2 = 3
  FieldPtr R = place_residue_field(quad);
  CHECK(R->degree_over_prime() == 2);
  CHECK(place_residue_root(quad).pow(2) == R->embed(F->from_int(3)));
}

TEST_CASE("q-th power test in F(t)") {
  FieldPtr F = Field::prime(7);
  RatFunc t = RatFunc::t(F);
  RatFunc y = (t + RatFunc::constant(F->one())) / t;
  auto w = is_qth_power_ratfunc(y.pow(3), 3);
  REQUIRE(w.has_value());
  CHECK(w->pow(3) == y.pow(3));
  CHECK_FALSE(is_qth_power_ratfunc(t, 3).has_value());
  CHECK_FALSE(is_qth_power_ratfunc(y.pow(3) * t, 3).has_value());
}

TEST_CASE("irreducible enumeration is deterministic") {
  FieldPtr F = Field::prime(5);
  CHECK(nth_monic_irreducible(F, 0) == Poly::x(F));
  Poly second = nth_monic_irreducible(F, 1);
  CHECK(second == Poly::from_ints(F, {1, 1}));
  // Skipping works.
  CHECK(nth_monic_irreducible(F, 0, {Poly::x(F)}) == second);
  // All returned polynomials are irreducible and strictly ordered.
  Poly prev = Poly::x(F);
  for (long long i = 1; i < 12; ++i) {
    Poly cur = nth_monic_irreducible(F, i);
    CHECK(poly_is_irreducible(cur));
    CHECK(prev < cur);
    prev = cur;
  }
}
