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

#ifndef FFVAL_LEMMAS_HPP
#define FFVAL_LEMMAS_HPP

#include "ffval/ruspec.hpp"

namespace ffval {

/// The case analysis for ord_p R(s).
///   RootCoincidence: p is not a pole of s and s - c has positive order at p
///                    for a (necessarily unique) root c of R; value is
///                    n(c) * ord_p(s - c).
///   NoCoincidence:   p is not a pole of s and every s - c is a unit at p;
///                    value 0.
///   Pole:            p is a pole of s; value ord_p(s) * (deg num - deg den).
enum class OrderCase { RootCoincidence = 1, NoCoincidence = 2, Pole = 3 };

struct OrderAtResult {
  long long value;  // kOrdInfinity when R(s) = 0 locally everywhere (s = c_i)
  OrderCase tag;
  std::optional<FElem> c;  // the coinciding root, when tag = RootCoincidence
};

/// ord_p R(s) computed through the case analysis, cross-checked against the
/// direct evaluation ord_at(p, R(s)); a mismatch raises InternalCheckError.
/// Constant s is allowed (all orders are then 0 or infinite).
OrderAtResult order_of_R_at(const RuSpec& R, const RatFunc& s, const Place& p);

/// Divisibility verdict for ord_p R(w - u) mod q, together with the id of
/// the disjunct that decided it.  Ids 1-3 justify divisibility:
///   1: some root c has ord_p(w-u-c) != 0 with n(c)*ord_p(w-u-c) = 0 mod q;
///   2: every w-u-c is a unit at p;
///   3: ord_p w < 0 and ord_p(w-u-c) = 0 mod q.
/// Ids 4-5 justify non-divisibility:
///   4: ord_p w >= 0 and some root c has n(c)*ord_p(w-u-c) != 0 mod q;
///   5: ord_p w < 0 and ord_p(w-u-c) != 0 mod q.
/// Exactly one id fires.  The verdict is recomputed directly from
/// ord_at(p, R(w-u)); a discrepancy raises InternalCheckError.
struct ModQResult {
  bool divisible;
  int condition_id;  // 1..5
};
ModQResult classify_mod_q(const RuSpec& R, const RatFunc& w, const FElem& u_shift,
                          const Place& p);

/// Witness search: given a with a pole inside T, produce b such that
///   (i)   ord at the pole place of R(b) is not divisible by q,
///   (ii)  ord_p(R(a)^q - R(b))     = 0 mod q for every p in T,
///   (iii) ord_p(R(a)^q - R(b)^-1)  = 0 mod q for every p in T.
/// b is the deterministic weak-approximation solution with ord -1 at the
/// (smallest) pole place and order -q*(|ord_p R(a)| + 1) at every other
/// place of T.  All three postconditions are re-verified by direct
/// evaluation; failure raises InternalCheckError.  Requires
/// deg num > deg den in R and a nonconstant.  Places in `avoid` (and not in
/// T) are additionally pinned to order 0, which steers the support of b away
/// from them without affecting the postconditions.
RatFunc find_b_canfind(const RuSpec& R, const RatFunc& a,
                       const std::vector<Place>& T,
                       const std::vector<Place>& avoid = {});

/// Divisibility property of q-th power shifts: if both v - w and v - w^-1
/// are q-th powers in F(t), then every exponent in the divisor of w is
/// divisible by q.  The checker evaluates hypothesis and conclusion
/// separately so property tests can distinguish vacuous passes.
struct ForeveryResult {
  bool hypothesis_satisfied;
  bool conclusion_holds;  // true when the hypothesis fails (vacuous)
};
ForeveryResult check_forevery(const RatFunc& w, const FElem& v, long long q);

}  // namespace ffval

#endif  // FFVAL_LEMMAS_HPP
