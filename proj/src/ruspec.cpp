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

#include "ffval/ruspec.hpp"

#include <sstream>

namespace ffval {

namespace {

bool is_prime_small(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

RuSpec::RuSpec(long long q, std::vector<std::pair<FElem, long long>> zeros,
               std::vector<std::pair<FElem, long long>> poles)
    : q_(q), zeros_(std::move(zeros)), poles_(std::move(poles)) {
  if (!is_prime_small(q_)) throw ValidationError("R-spec: q must be prime");
  if (zeros_.empty())
    throw ValidationError("R-spec: at least one zero (the distinguished a) required");
  const FieldPtr& k = zeros_[0].first.field();
  if (q_ == k->characteristic())
    throw ValidationError("R-spec: q must differ from the field characteristic");
  std::vector<FElem> roots;
  for (const auto& [c, n] : zeros_) {
    if (!Field::same(c.field(), k))
      throw ValidationError("R-spec: roots must share one constant field");
    if (n <= 0) throw ValidationError("R-spec: zero multiplicities must be positive");
    roots.push_back(c);
  }
  for (const auto& [b, j] : poles_) {
    if (!Field::same(b.field(), k))
      throw ValidationError("R-spec: roots must share one constant field");
    if (j <= 0) throw ValidationError("R-spec: pole multiplicities must be positive");
    roots.push_back(b);
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw ValidationError("R-spec: all zero/pole locations must be distinct");
  if (zeros_[0].second % q_ == 0)
    throw ValidationError(
        "R-spec: the multiplicity of the distinguished zero must not be divisible by q");
  long long diff = deg_num() - deg_den();
  if (diff <= 0)
    throw ValidationError("R-spec: numerator degree must exceed denominator degree");
  if (diff % q_ == 0)
    throw ValidationError("R-spec: deg num - deg den must not be divisible by q");
}

long long RuSpec::deg_num() const {
  long long s = 0;
  for (const auto& [c, n] : zeros_) s += n;
  return s;
}

long long RuSpec::deg_den() const {
  long long s = 0;
  for (const auto& [b, j] : poles_) s += j;
  return s;
}

std::vector<std::pair<FElem, long long>> RuSpec::roots_signed() const {
  std::vector<std::pair<FElem, long long>> r;
  for (const auto& [c, n] : zeros_) r.emplace_back(c, n);
  for (const auto& [b, j] : poles_) r.emplace_back(b, -j);
  return r;
}

Poly RuSpec::num_poly() const {
  Poly f = Poly::constant(const_field()->one());
  for (const auto& [c, n] : zeros_)
    f = f * (Poly::x(const_field()) - Poly::constant(c)).pow(n);
  return f;
}

Poly RuSpec::den_poly() const {
  Poly f = Poly::constant(const_field()->one());
  for (const auto& [b, j] : poles_)
    f = f * (Poly::x(const_field()) - Poly::constant(b)).pow(j);
  return f;
}

RatFunc RuSpec::apply(const RatFunc& s) const {
  for (const auto& [b, j] : poles_)
    if (s.is_constant() && s.constant_value() == b)
      throw ValueError("R(s) undefined: s is identically a pole of R");
  RatFunc r = RatFunc::constant(const_field()->one());
  for (const auto& [c, n] : zeros_) r = r * (s - RatFunc::constant(c)).pow(n);
  for (const auto& [b, j] : poles_)
    r = r * (s - RatFunc::constant(b)).pow(j).inverse();
  return r;
}

std::string RuSpec::str() const {
  std::ostringstream os;
  os << "R(T) =";
  for (const auto& [c, n] : zeros_) os << " (T - " << c.str() << ")^" << n;
  if (!poles_.empty()) {
    os << " /";
    for (const auto& [b, j] : poles_) os << " (T - " << b.str() << ")^" << j;
  }
  os << "  [q = " << q_ << "]";
  return os.str();
}

}  // namespace ffval
