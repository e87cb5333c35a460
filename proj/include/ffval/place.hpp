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

#ifndef FFVAL_PLACE_HPP
#define FFVAL_PLACE_HPP

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffval/ratfunc.hpp"

namespace ffval {

/// Sentinel returned by ord_at for the zero function.
inline constexpr long long kOrdInfinity = std::numeric_limits<long long>::max();

/// A place of F(t): either a finite place given by a monic irreducible
/// polynomial pi(t), or the place at infinity (uniformizer 1/t).
class Place {
 public:
  static Place finite(Poly pi);
  static Place infinite(FieldPtr constant_field);

  bool is_infinite() const { return infinite_; }
  const Poly& pi() const;
  const FieldPtr& constant_field() const { return k_; }
  int degree() const { return infinite_ ? 1 : pi_.degree(); }

  /// Deterministic total order: finite places by polynomial order, the
  /// infinite place last.
  static int cmp(const Place& a, const Place& b);
  friend bool operator<(const Place& a, const Place& b) { return cmp(a, b) < 0; }
  friend bool operator==(const Place& a, const Place& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Place& a, const Place& b) { return cmp(a, b) != 0; }

  std::string str() const;

 private:
  Place(FieldPtr k, Poly pi, bool infinite)
      : k_(std::move(k)), pi_(std::move(pi)), infinite_(infinite) {}
  FieldPtr k_;
  Poly pi_;  // meaningful only for finite places
  bool infinite_;
};

/// Order of f at the place; kOrdInfinity for f = 0.
long long ord_at(const Place& p, const RatFunc& f);

/// Residue field of the place: F itself for the infinite place and for
/// finite places of degree one; otherwise the extension F[t]/(pi).  Finite
/// places of degree >= 2 over the rationals are not supported.
FieldPtr place_residue_field(const Place& p);

/// Image of t in the residue field of a finite place (the root of pi).
FElem place_residue_root(const Place& p);

/// Value of f in the residue field; requires ord_at(p, f) >= 0.
FElem residue_at(const Place& p, const RatFunc& f);

/// A divisor of F(t): finite formal sum of places with nonzero integer
/// coefficients.
class Divisor {
 public:
  Divisor() = default;

  void add(const Place& p, long long m);
  long long coeff(const Place& p) const;
  const std::map<Place, long long>& terms() const { return terms_; }
  long long degree() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<Place, long long> terms_;
};

/// Principal divisor of a nonzero f: ord at every zero/pole place, including
/// the infinite one.  Always has degree zero.
Divisor divisor_of(const RatFunc& f, unsigned long long seed = 1);

/// Weak approximation: a rational function with exactly the prescribed order
/// at each listed place (at most one entry per place, possibly including the
/// infinite place).  Deterministic: the finite-place part is prod pi^m, and
/// any needed correction at infinity uses the first monic irreducible (by
/// degree, then polynomial order) coprime to every constrained place.
RatFunc weak_approx(const FieldPtr& constant_field,
                    const std::vector<std::pair<Place, long long>>& constraints);

/// Witness y with y^q = x in F(t), or nullopt (q prime != characteristic).
/// Decision: every divisor exponent of x must be divisible by q; then the
/// constant q-th power test on the unit part; the result is verified by
/// exponentiation.  Canonical witness (least constant-field root).
std::optional<RatFunc> is_qth_power_ratfunc(const RatFunc& x, long long q,
                                            unsigned long long seed = 1);

/// Monic irreducibles of F[t] in deterministic order (degree ascending, then
/// polynomial order), skipping entries listed in `avoid`.  `index` = 0 gives
/// the first.  Over the rationals only a canonical infinite family t - n is
/// enumerated.
Poly nth_monic_irreducible(const FieldPtr& constant_field, long long index,
                           const std::vector<Poly>& avoid = {});

}  // namespace ffval

#endif  // FFVAL_PLACE_HPP
