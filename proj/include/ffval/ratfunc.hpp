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

#ifndef FFVAL_RATFUNC_HPP
#define FFVAL_RATFUNC_HPP

#include <string>
#include <utility>

#include "ffval/poly.hpp"

namespace ffval {

/// Element of F(t) in canonical form: monic denominator, gcd(num, den) = 1,
/// zero represented as 0/1.
class RatFunc {
 public:
  explicit RatFunc(FieldPtr k);  // zero
  RatFunc(Poly num, Poly den);   // canonicalizes

  static RatFunc t(const FieldPtr& k) { return RatFunc(Poly::x(k), Poly::constant(k->one())); }
  static RatFunc constant(const FElem& c) { return RatFunc(Poly::constant(c), Poly::constant(c.field()->one())); }
  static RatFunc from_poly(Poly p);

  const FieldPtr& coeff_field() const { return num_.coeff_field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  FElem constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long long e) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  static int cmp(const RatFunc& a, const RatFunc& b);
  friend bool operator<(const RatFunc& a, const RatFunc& b) { return cmp(a, b) < 0; }

  std::string str() const;

 private:
  Poly num_, den_;
};

}  // namespace ffval

#endif  // FFVAL_RATFUNC_HPP
