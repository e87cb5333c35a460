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
//
// Shared test fixtures: the F7 single-index construction config, and the
// deliberate state corruptions used to exercise every invariant checker
// (each corruption must be flagged by the checker named in its scenario).

#ifndef FFVAL_TESTS_FIXTURES_HPP
#define FFVAL_TESTS_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "ffval/construction.hpp"

namespace ffval_tests {

using namespace ffval;

inline ConstructionConfig f7_single_config() {
  FieldPtr F = Field::prime(7);
  ConstructionConfig cfg;
  cfg.F = F;
  cfg.indices.push_back({RuSpec(3, {{F->zero(), 1}}, {}), {F->zero()}});
  cfg.enumeration.push_back({RatFunc::t(F), -1});
  cfg.enumeration.push_back({RatFunc::t(F), -1});
  cfg.enumeration.push_back({RatFunc::constant(F->one()), -1});
  for (int r = 1; r <= 6; ++r) cfg.witness_stream.push_back(F->from_int(r));
  cfg.witness_pairs.emplace_back(1, F->from_int(1), F->from_int(6));
  cfg.max_steps = 16;
  cfg.seed = 1;
  return cfg;
}

inline ConstructionState f7_single_state() {
  ConstructionConfig cfg = f7_single_config();
  validate_config(cfg);
  ConstructionState st = new_state(cfg);
  for (int k = 0; k < cfg.max_steps; ++k) st = step(st);
  return st;
}

enum class Checker { Odd, Even, Part1, Part4 };

struct Corruption {
  std::string name;
  Checker checker;
  std::function<void(ConstructionState&)> apply;
};

// A deterministic full-depth chain above the given base place.
inline TowerPlace chain_above(const ConstructionState& st, const Place& p) {
  return places_above(p, st.tower).front();
}

// A full-depth chain at which ord of R_1(t^q - r) is not divisible by q;
// searched over small places.  Throws if none is found (the scenarios below
// rely on one existing).
inline TowerPlace nondivisible_chain_for_shift(const ConstructionState& st,
                                               const FElem& r) {
  const RuSpec& R = st.cfg.indices[0].R;
  long long q = R.q();
  const FieldPtr& F = st.cfg.F;
  RatFunc shift = RatFunc::from_poly(Poly::x(F).pow(q)) -
                  RatFunc::constant(r) + RatFunc::constant(R.a());
  TowerElement val = ru_apply_tower(R, st.tower->from_ratfunc(shift));
  // Only zeros and poles of the shift can give non-divisible base order, so
  // search chains above its irreducible factors (plus infinity).
  std::vector<Place> candidates{Place::infinite(F)};
  for (const Poly& g : {shift.num(), shift.den()})
    for (const auto& [fac, mult] : poly_factor(g).factors)
      if (fac.degree() >= 1) candidates.push_back(Place::finite(fac));
  for (const Place& p : candidates) {
    for (const TowerPlace& ch : places_above(p, st.tower)) {
      try {
        long long v = ord_tower(ch, val);
        if (v != kOrdInfinity && ((v % q) + q) % q != 0) return ch;
      } catch (const AmbiguousValuationError&) {
      }
    }
  }
  throw InternalCheckError("no non-divisible chain found for the corruption");
}

inline std::vector<Corruption> corruption_scenarios() {
  std::vector<Corruption> out;
  auto F = [](const ConstructionState& st) { return st.cfg.F; };

  out.push_back({"odd: chain moved to an unrelated place", Checker::Odd,
                 [&](ConstructionState& st) {
                   st.S[0][0].prime = chain_above(
                       st, Place::finite(Poly::from_ints(st.cfg.F, {3, 1})));
                 }});
  out.push_back({"odd: element replaced by an exact cube", Checker::Odd,
                 [](ConstructionState& st) {
                   RatFunc t1 = RatFunc::t(st.cfg.F) +
                                RatFunc::constant(st.cfg.F->one());
                   st.S[0][0].s = st.tower->from_ratfunc(t1.pow(3));
                 }});
  out.push_back({"odd: element replaced by the constant 1", Checker::Odd,
                 [](ConstructionState& st) {
                   st.S[0][0].s = st.tower->one();
                 }});
  out.push_back({"odd: element replaced by zero", Checker::Odd,
                 [](ConstructionState& st) {
                   st.S[0][0].s = st.tower->zero();
                 }});
  out.push_back({"part1: element replaced by t (a cube of the root)",
                 Checker::Part1, [](ConstructionState& st) {
                   st.S[0][0].s = st.tower->t();
                 }});
  out.push_back({"part1: element replaced by (t+1)^3", Checker::Part1,
                 [](ConstructionState& st) {
                   RatFunc t1 = RatFunc::t(st.cfg.F) +
                                RatFunc::constant(st.cfg.F->one());
                   st.S[0][1].s = st.tower->from_ratfunc(t1.pow(3));
                 }});
  out.push_back({"part1: element replaced by t*(t+1)^3", Checker::Part1,
                 [](ConstructionState& st) {
                   RatFunc t1 = RatFunc::t(st.cfg.F) +
                                RatFunc::constant(st.cfg.F->one());
                   st.S[0][0].s =
                       st.tower->from_ratfunc(RatFunc::t(st.cfg.F) * t1.pow(3));
                 }});
  out.push_back(
      {"even: pair (2,5) with both sides made non-divisible", Checker::Even,
       [](ConstructionState& st) {
         st.S[0][0].prime =
             nondivisible_chain_for_shift(st, st.cfg.F->from_int(2));
         st.S[0][1].prime =
             nondivisible_chain_for_shift(st, st.cfg.F->from_int(5));
         st.generated_pairs.emplace_back(1, st.cfg.F->from_int(2),
                                         st.cfg.F->from_int(5));
       }});
  out.push_back(
      {"even: pair (3,4) with both sides made non-divisible", Checker::Even,
       [](ConstructionState& st) {
         st.S[0][0].prime =
             nondivisible_chain_for_shift(st, st.cfg.F->from_int(3));
         st.S[0][1].prime =
             nondivisible_chain_for_shift(st, st.cfg.F->from_int(4));
         st.generated_pairs.emplace_back(1, st.cfg.F->from_int(3),
                                         st.cfg.F->from_int(4));
       }});
  out.push_back({"part4: tower extended by a prime outside the family",
                 Checker::Part4, [&](ConstructionState& st) {
                   TowerElement w = st.tower->from_ratfunc(
                       RatFunc::t(st.cfg.F) +
                       RatFunc::constant(st.cfg.F->from_int(3)));
                   st.tower = adjoin_root(st.tower, 2, w);
                 }});
  (void)F;
  return out;
}

// True if the corruption is flagged by its checker.
inline bool corruption_flagged(const ConstructionState& healthy,
                               const Corruption& c) {
  ConstructionState st = healthy;
  c.apply(st);
  switch (c.checker) {
    case Checker::Odd:
      return !check_eq_odd(st).all_pass();
    case Checker::Even:
      return !check_eq_even(st, st.cfg.witness_pairs).all_pass();
    case Checker::Part1:
    case Checker::Part4: {
      Report rep = properties_report(st);
      const char* prefix = c.checker == Checker::Part1 ? "part1" : "part4";
      for (const CheckItem& it : rep.items)
        if (it.what.rfind(prefix, 0) == 0 && !it.pass) return true;
      return false;
    }
  }
  return false;
}

}  // namespace ffval_tests

#endif  // FFVAL_TESTS_FIXTURES_HPP
