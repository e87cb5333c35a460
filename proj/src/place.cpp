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

#include "ffval/place.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffval {

Place Place::finite(Poly pi) {
  if (pi.degree() < 1) throw ValueError("finite place: pi must be nonconstant");
  if (!pi.is_monic()) throw ValueError("finite place: pi must be monic");
  if (!poly_is_irreducible(pi)) throw ValueError("finite place: pi must be irreducible");
  FieldPtr k = pi.coeff_field();
  return Place(std::move(k), std::move(pi), false);
}

Place Place::infinite(FieldPtr constant_field) {
  Poly none(constant_field);
  return Place(std::move(constant_field), std::move(none), true);
}

const Poly& Place::pi() const {
  if (infinite_) throw ValueError("the infinite place has no polynomial");
  return pi_;
}

int Place::cmp(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_ ? 1 : -1;
  if (a.infinite_) return 0;
  return Poly::cmp(a.pi_, b.pi_);
}

std::string Place::str() const {
  return infinite_ ? "(1/t)" : "(" + pi_.str("t") + ")";
}

long long ord_at(const Place& p, const RatFunc& f) {
  if (f.is_zero()) return kOrdInfinity;
  if (p.is_infinite())
    return static_cast<long long>(f.den().degree()) - f.num().degree();
  return static_cast<long long>(f.num().multiplicity_of(p.pi())) -
         f.den().multiplicity_of(p.pi());
}

FieldPtr place_residue_field(const Place& p) {
  const FieldPtr& k = p.constant_field();
  if (p.is_infinite() || p.degree() == 1) return k;
  if (!k->is_finite())
    throw UnsupportedError("residue field of a higher-degree place over Q");
  return Field::extension(k, p.pi().coeffs());
}

FElem place_residue_root(const Place& p) {
  if (p.is_infinite()) throw ValueError("the infinite place has no root of pi");
  if (p.degree() == 1) return -p.pi().coeff(0);
  return place_residue_field(p)->generator();
}

namespace {

// Evaluate a polynomial over F at a point of an extension of F.
FElem eval_embedded(const Poly& f, const FieldPtr& K, const FElem& at) {
  FElem acc = K->zero();
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * at + K->embed_from_subfield(f.coeff(i));
  return acc;
}

}  // namespace

FElem residue_at(const Place& p, const RatFunc& f) {
  if (f.is_zero()) return place_residue_field(p)->zero();
  if (p.is_infinite()) {
    long long o = ord_at(p, f);
    if (o < 0) throw ValueError("residue_at: pole at the place");
    if (o > 0) return p.constant_field()->zero();
    return f.num().lc() / f.den().lc();
  }
  FieldPtr K = place_residue_field(p);
  FElem theta = place_residue_root(p);
  FElem d = eval_embedded(f.den(), K, theta);
  if (d.is_zero()) throw ValueError("residue_at: pole at the place");
  return eval_embedded(f.num(), K, theta) / d;
}

void Divisor::add(const Place& p, long long m) {
  if (m == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, m);
  } else {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

long long Divisor::coeff(const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [p, m] : terms_) d += m * p.degree();
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, m] : b.terms_) r.add(p, m);
  return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, m] : b.terms_) r.add(p, -m);
  return r;
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << m << "*" << p.str();
  }
  return os.str();
}

Divisor divisor_of(const RatFunc& f, unsigned long long seed) {
  if (f.is_zero()) throw ValueError("divisor of the zero function");
  Divisor d;
  for (const auto& [pi, m] : poly_factor(f.num(), seed).factors)
    d.add(Place::finite(pi), m);
  for (const auto& [pi, m] : poly_factor(f.den(), seed).factors)
    d.add(Place::finite(pi), -m);
  d.add(Place::infinite(f.coeff_field()),
        static_cast<long long>(f.den().degree()) - f.num().degree());
  if (d.degree() != 0)
    throw InternalCheckError("principal divisor has nonzero degree for " + f.str());
  return d;
}

std::optional<RatFunc> is_qth_power_ratfunc(const RatFunc& x, long long q,
                                            unsigned long long seed) {
  const FieldPtr& k = x.coeff_field();
  if (q == k->characteristic())
    throw UnsupportedError("q-th power test with q equal to the characteristic");
  if (x.is_zero()) return RatFunc(k);
  RatFunc y = RatFunc::constant(k->one());
  for (const auto& [pi, m] : poly_factor(x.num(), seed).factors) {
    if (m % q != 0) return std::nullopt;
    y = y * RatFunc::from_poly(pi).pow(m / q);
  }
  for (const auto& [pi, m] : poly_factor(x.den(), seed).factors) {
    if (m % q != 0) return std::nullopt;
    y = y * RatFunc::from_poly(pi).pow(-(m / q));
  }
  RatFunc unit = x / y.pow(q);
  if (!unit.is_constant())
    throw InternalCheckError("q-th power test: unit part not constant");
  std::optional<FElem> root = is_qth_power_const(unit.constant_value(), q);
  if (!root) return std::nullopt;
  y = y * RatFunc::constant(*root);
  if (y.pow(q) != x)
    throw InternalCheckError("q-th power test: witness verification failed");
  return y;
}

Poly nth_monic_irreducible(const FieldPtr& constant_field, long long index,
                           const std::vector<Poly>& avoid) {
  if (index < 0) throw ValueError("nth_monic_irreducible: negative index");
  auto skipped = [&](const Poly& f) {
    return std::any_of(avoid.begin(), avoid.end(),
                       [&](const Poly& a) { return a == f; });
  };
  if (!constant_field->is_finite()) {
    // Over Q: the canonical family t - n.
    for (long long n = 0;; ++n) {
      Poly f = Poly::x(constant_field) - Poly::constant(constant_field->from_int(n));
      if (skipped(f)) continue;
      if (index == 0) return f;
      --index;
    }
  }
  std::vector<FElem> elems = constant_field->enumerate();
  for (int d = 1;; ++d) {
    // Odometer over the d lower coefficients, c_0 fastest.
    std::vector<size_t> digits(d, 0);
    for (;;) {
      std::vector<FElem> cs;
      cs.reserve(d + 1);
      for (int i = 0; i < d; ++i) cs.push_back(elems[digits[i]]);
      cs.push_back(constant_field->one());
      Poly f(constant_field, std::move(cs));
      if (!skipped(f) && poly_is_irreducible(f)) {
        if (index == 0) return f;
        --index;
      }
      int pos = 0;
      while (pos < d && ++digits[pos] == elems.size()) digits[pos++] = 0;
      if (pos == d) break;
    }
  }
}

namespace {

// s*a + t*b = gcd(a, b) over the integers.
void int_xgcd(long long a, long long b, long long& g, long long& s, long long& t) {
  if (b == 0) {
    g = a;
    s = 1;
    t = 0;
    return;
  }
  long long g1, s1, t1;
  int_xgcd(b, a % b, g1, s1, t1);
  g = g1;
  s = t1;
  t = s1 - (a / b) * t1;
}

}  // namespace

RatFunc weak_approx(const FieldPtr& constant_field,
                    const std::vector<std::pair<Place, long long>>& constraints) {
  std::vector<Poly> pis;
  bool has_inf = false;
  long long m_inf = 0;
  for (const auto& [p, m] : constraints) {
    if (!Field::same(p.constant_field(), constant_field))
      throw ValueError("weak_approx: place over a different constant field");
    if (p.is_infinite()) {
      if (has_inf) throw ValueError("weak_approx: duplicate infinite place");
      has_inf = true;
      m_inf = m;
    } else {
      for (const Poly& q : pis)
        if (q == p.pi()) throw ValueError("weak_approx: duplicate place");
      pis.push_back(p.pi());
    }
  }

  RatFunc f = RatFunc::constant(constant_field->one());
  for (const auto& [p, m] : constraints)
    if (!p.is_infinite()) f = f * RatFunc::from_poly(p.pi()).pow(m);

  if (has_inf) {
    long long delta = m_inf - ord_at(Place::infinite(constant_field), f);
    if (delta != 0) {
      // Correct the order at infinity by a product of irreducibles coprime to
      // every constrained place: u1^a * u2^b with a*d1 + b*d2 = -delta.
      Poly u1 = nth_monic_irreducible(constant_field, 0, pis);
      long long d1 = u1.degree();
      if (delta % d1 == 0) {
        f = f * RatFunc::from_poly(u1).pow(-delta / d1);
      } else {
        for (long long j = 1;; ++j) {
          Poly u2 = nth_monic_irreducible(constant_field, j, pis);
          long long d2 = u2.degree();
          long long g, a, b;
          int_xgcd(d1, d2, g, a, b);
          if (delta % g != 0) continue;
          long long k = -delta / g;
          f = f * RatFunc::from_poly(u1).pow(a * k) *
              RatFunc::from_poly(u2).pow(b * k);
          break;
        }
      }
    }
  }

  for (const auto& [p, m] : constraints)
    if (ord_at(p, f) != m)
      throw InternalCheckError("weak_approx: postcondition failed at " + p.str());
  return f;
}

}  // namespace ffval
