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

#include "ffval/lemmas.hpp"

#include <algorithm>
#include <cstdlib>

namespace ffval {

namespace {

long long mod_nonneg(long long x, long long q) { return ((x % q) + q) % q; }

// Orders ord_p(s - c) for every signed root of R, in spec order.
std::vector<std::pair<std::pair<FElem, long long>, long long>> root_orders(
    const RuSpec& R, const RatFunc& s, const Place& p) {
  std::vector<std::pair<std::pair<FElem, long long>, long long>> out;
  for (const auto& cn : R.roots_signed())
    out.emplace_back(cn, ord_at(p, s - RatFunc::constant(cn.first)));
  return out;
}

}  // namespace

OrderAtResult order_of_R_at(const RuSpec& R, const RatFunc& s, const Place& p) {
  RatFunc Rs = R.apply(s);  // throws if s is identically a pole root
  long long direct = ord_at(p, Rs);

  OrderAtResult res;
  long long os = ord_at(p, s);
  if (os < 0) {
    res.tag = OrderCase::Pole;
    res.value = os * (R.deg_num() - R.deg_den());
  } else {
    // p is not a pole of s: at most one root can coincide with s locally.
    res.tag = OrderCase::NoCoincidence;
    res.value = 0;
    for (const auto& [cn, o] : root_orders(R, s, p)) {
      if (o <= 0) continue;
      if (res.tag == OrderCase::RootCoincidence)
        throw InternalCheckError("order_of_R_at: two coinciding roots at " + p.str());
      res.tag = OrderCase::RootCoincidence;
      res.c = cn.first;
      res.value = (o == kOrdInfinity) ? kOrdInfinity : cn.second * o;
    }
  }

  if (res.value != direct)
    throw InternalCheckError("order_of_R_at: case analysis disagrees with direct "
                             "evaluation at " + p.str() + " for s = " + s.str());
  return res;
}

ModQResult classify_mod_q(const RuSpec& R, const RatFunc& w, const FElem& u_shift,
                          const Place& p) {
  long long q = R.q();
  if ((R.deg_num() - R.deg_den()) % q == 0)
    throw ValueError("classify_mod_q: deg num - deg den divisible by q");
  if (w.is_constant())
    throw ValueError("classify_mod_q: w must be nonconstant");
  RatFunc s = w - RatFunc::constant(u_shift);

  ModQResult res;
  long long ow = ord_at(p, w);
  if (ow < 0) {
    // Every s - c then has order ow; one mod-q test decides.
    res.divisible = mod_nonneg(ow, q) == 0;
    res.condition_id = res.divisible ? 3 : 5;
  } else {
    const FElem* coincident = nullptr;
    long long signed_val = 0;
    bool infinite = false;
    for (const auto& [cn, o] : root_orders(R, s, p)) {
      if (o <= 0) continue;
      coincident = &cn.first;
      if (o == kOrdInfinity)
        infinite = true;  // s = c identically; R(s) vanishes
      else
        signed_val = cn.second * o;
      break;  // uniqueness is certified by order_of_R_at's cross-check
    }
    if (coincident == nullptr) {
      res.divisible = true;
      res.condition_id = 2;
    } else if (infinite || mod_nonneg(signed_val, q) == 0) {
      res.divisible = true;
      res.condition_id = 1;
    } else {
      res.divisible = false;
      res.condition_id = 4;
    }
  }

  long long direct = ord_at(p, R.apply(s));
  bool direct_div = direct == kOrdInfinity || mod_nonneg(direct, q) == 0;
  if (direct_div != res.divisible)
    throw InternalCheckError("classify_mod_q: case analysis disagrees with direct "
                             "evaluation at " + p.str());
  return res;
}

RatFunc find_b_canfind(const RuSpec& R, const RatFunc& a,
                       const std::vector<Place>& T,
                       const std::vector<Place>& avoid) {
  long long q = R.q();
  if (R.deg_num() <= R.deg_den())
    throw ValueError("find_b_canfind: requires deg num > deg den");
  if (a.is_constant()) throw ValueError("find_b_canfind: a must be nonconstant");
  if (T.empty()) throw ValueError("find_b_canfind: empty place set");
  for (size_t i = 0; i < T.size(); ++i)
    for (size_t j = i + 1; j < T.size(); ++j)
      if (T[i] == T[j]) throw ValueError("find_b_canfind: duplicate places");

  std::vector<Place> places = T;
  std::sort(places.begin(), places.end());
  const Place* pole = nullptr;
  for (const Place& p : places)
    if (ord_at(p, a) < 0) {
      pole = &p;
      break;
    }
  if (!pole) throw ValueError("find_b_canfind: T contains no pole of a");

  RatFunc Ra = R.apply(a);
  std::vector<std::pair<Place, long long>> constraints;
  for (const Place& p : places) {
    if (p == *pole)
      constraints.emplace_back(p, -1);
    else
      constraints.emplace_back(p, -q * (std::abs(ord_at(p, Ra)) + 1));
  }
  for (const Place& p : avoid) {
    bool in_T = false;
    for (const Place& t : places)
      if (t == p) in_T = true;
    for (const auto& [cp, m] : constraints)
      if (cp == p) in_T = true;
    if (!in_T) constraints.emplace_back(p, 0);
  }
  RatFunc b = weak_approx(a.coeff_field(), constraints);

  RatFunc Rb = R.apply(b);
  RatFunc Raq = Ra.pow(q);
  auto div_q = [&](long long o) {
    return o == kOrdInfinity || ((o % q) + q) % q == 0;
  };
  if (div_q(ord_at(*pole, Rb)))
    throw InternalCheckError("find_b_canfind: ord R(b) divisible by q at the pole place");
  for (const Place& p : places) {
    if (!div_q(ord_at(p, Raq - Rb)))
      throw InternalCheckError("find_b_canfind: ord(R(a)^q - R(b)) not divisible by q at " +
                               p.str());
    if (!div_q(ord_at(p, Raq - Rb.inverse())))
      throw InternalCheckError(
          "find_b_canfind: ord(R(a)^q - R(b)^-1) not divisible by q at " + p.str());
  }
  return b;
}

ForeveryResult check_forevery(const RatFunc& w, const FElem& v, long long q) {
  if (w.is_zero()) throw ValueError("check_forevery: w must be nonzero");
  RatFunc vf = RatFunc::constant(v);
  bool hyp = is_qth_power_ratfunc(vf - w, q).has_value() &&
             is_qth_power_ratfunc(vf - w.inverse(), q).has_value();
  ForeveryResult res{hyp, true};
  if (!hyp) return res;
  if (!w.is_constant()) {
    Divisor D = divisor_of(w);
    for (const auto& [p, m] : D.terms())
      if (((m % q) + q) % q != 0) res.conclusion_holds = false;
  }
  return res;
}

}  // namespace ffval
