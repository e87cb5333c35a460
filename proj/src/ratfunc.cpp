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

#include "ffval/ratfunc.hpp"

namespace ffval {

RatFunc::RatFunc(FieldPtr k)
    : num_(Poly(k)), den_(Poly::constant(k->one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!Field::same(num_.coeff_field(), den_.coeff_field()))
    throw ValueError("RatFunc: mismatched coefficient fields");
  if (den_.is_zero()) throw ValueError("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.coeff_field()->one());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FElem lead = den_.lc();
  if (!lead.is_one()) {
    FElem inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::from_poly(Poly p) {
  FieldPtr k = p.coeff_field();
  return RatFunc(std::move(p), Poly::constant(k->one()));
}

FElem RatFunc::constant_value() const {
  if (!is_constant()) throw ValueError("constant_value of nonconstant rational function");
  return num_.is_zero() ? coeff_field()->zero() : num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ValueError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result = RatFunc::constant(coeff_field()->one());
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

int RatFunc::cmp(const RatFunc& a, const RatFunc& b) {
  int c = Poly::cmp(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::cmp(a.den_, b.den_);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str("t");
  return "(" + num_.str("t") + ")/(" + den_.str("t") + ")";
}

}  // namespace ffval
