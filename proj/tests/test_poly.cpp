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

#include "ffval/poly.hpp"

using namespace ffval;

namespace {
Poly random_poly(const FieldPtr& F, std::mt19937_64& g, int maxdeg) {
  int d = static_cast<int>(g() % (maxdeg + 1));
  std::vector<FElem> cs;
  for (int i = 0; i <= d; ++i)
    cs.push_back(F->from_int(static_cast<long long>(g() % 7)));
  return Poly(F, cs);
}
}  // namespace

TEST_CASE("divmod round-trip") {
  FieldPtr F = Field::prime(7);
  std::mt19937_64 g(11);
  for (int k = 0; k < 200; ++k) {
    Poly a = random_poly(F, g, 6), b = random_poly(F, g, 3);
    if (b.is_zero()) continue;
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd and xgcd") {
  FieldPtr F = Field::prime(7);
  Poly x = Poly::x(F);
  Poly a = (x - Poly::constant(F->one())) * (x - Poly::constant(F->from_int(2)));
  Poly b = (x - Poly::constant(F->one())) * (x - Poly::constant(F->from_int(3)));
  CHECK(poly_gcd(a, b) == x - Poly::constant(F->one()));
  auto r = poly_xgcd(a, b);
  CHECK(r.s * a + r.t * b == r.g);
}

TEST_CASE("factorization multiplies back") {
  FieldPtr F = Field::prime(5);
  std::mt19937_64 g(3);
  for (int k = 0; k < 100; ++k) {
    Poly f = random_poly(F, g, 6);
    if (f.is_zero()) continue;
    Factorization fac = poly_factor(f);
    CHECK(fac.product() == f);
    for (const auto& [p, m] : fac.factors) {
      CHECK(p.is_monic());
      CHECK(poly_is_irreducible(p));
    }
  }
}

TEST_CASE("irreducibility of known polynomials") {
  FieldPtr F = Field::prime(7);
  // 3 is not a square mod 7, so T^2 - 3 is irreducible.
  CHECK(poly_is_irreducible(Poly::from_ints(F, {-3, 0, 1})));
  // 2 = 3^2 mod 7, so T^2 - 2 splits.
  CHECK_FALSE(poly_is_irreducible(Poly::from_ints(F, {-2, 0, 1})));
  auto roots = poly_roots(Poly::from_ints(F, {-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == F->from_int(3));
  CHECK(roots[1] == F->from_int(4));
}

TEST_CASE("factorization over the rationals") {
  FieldPtr Q = Field::rationals();
  // (T - 1)(T + 2)
  Poly f = Poly::from_ints(Q, {-2, 1, 1});
  auto fac = poly_factor(f);
  CHECK(fac.product() == f);
  CHECK(fac.factors.size() == 2);
  // T^2 + 1 stays irreducible.
  CHECK(poly_is_irreducible(Poly::from_ints(Q, {1, 0, 1})));
}

TEST_CASE("constant q-th power test") {
  FieldPtr F = Field::prime(7);
  // Cubes mod 7: {0, 1, 6}.
  CHECK(is_qth_power_const(F->zero(), 3).has_value());
  CHECK(is_qth_power_const(F->one(), 3).has_value());
  CHECK(is_qth_power_const(F->from_int(6), 3).has_value());
  for (long long v : {2, 3, 4, 5})
    CHECK_FALSE(is_qth_power_const(F->from_int(v), 3).has_value());
  auto w = is_qth_power_const(F->from_int(6), 3);
  CHECK(w->pow(3) == F->from_int(6));
}

TEST_CASE("binomial factorization agrees with the generic machinery") {
  for (long long p : {5LL, 7LL, 13LL}) {
    FieldPtr K = Field::extension_canonical(p, 2);
    for (long long q : {2LL, 3LL, 5LL}) {
      if (q == p) continue;
      std::mt19937_64 g(p * 100 + q);
      for (int k = 0; k < 10; ++k) {
        FElem a = K->make({K->base()->from_int(static_cast<long long>(g() % p)),
                           K->base()->from_int(static_cast<long long>(g() % p))});
        if (a.is_zero()) continue;
        std::vector<FElem> cs(q + 1, K->zero());
        cs[0] = -a;
        cs[q] = K->one();
        auto fast = factor_qth_binomial(q, a);
        auto slow = poly_factor(Poly(K, cs));
        CHECK(fast.factors == slow.factors);
      }
    }
  }
}

TEST_CASE("shift and derivative") {
  FieldPtr F = Field::prime(7);
  Poly f = Poly::from_ints(F, {1, 2, 1});  // (T+1)^2
  Poly s = f.shift_x(F->one());            // (T+2)^2
  CHECK(s == Poly::from_ints(F, {4, 4, 1}));
  CHECK(f.derivative() == Poly::from_ints(F, {2, 2}));
}
