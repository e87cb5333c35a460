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

#include "ffval/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ffval {

namespace {

long long mod_ll(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_mod_ll(long long a, long long p) {
  // extended euclid
  long long t = 0, newt = 1, r = p, newr = mod_ll(a, p);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw ValueError("element not invertible mod " + std::to_string(p));
  return mod_ll(t, p);
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- raw dense polynomial helpers over FElem vectors (lowest degree
// first).  Used internally for extension-field arithmetic; the public Poly
// type lives in poly.hpp and is built on top of Field.

using Vec = std::vector<FElem>;

void vtrim(Vec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vadd(const Field& k, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), k.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  vtrim(r);
  return r;
}

Vec vscale(const Vec& a, const FElem& c) {
  Vec r = a;
  for (auto& x : r) x = x * c;
  vtrim(r);
  return r;
}

Vec vmul(const Field& k, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, k.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  vtrim(r);
  return r;
}

// a mod m, m monic
Vec vmod(const Field& k, Vec a, const Vec& m) {
  vtrim(a);
  while (a.size() >= m.size()) {
    FElem c = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = a[shift + i] - c * m[i];
    vtrim(a);
  }
  return a;
}

Vec vsub(const Field& k, const Vec& a, const Vec& b) {
  Vec nb = b;
  for (auto& x : nb) x = -x;
  return vadd(k, a, nb);
}

Vec vgcd(const Field& k, Vec a, Vec b) {
  vtrim(a);
  vtrim(b);
  while (!b.empty()) {
    // make b monic for stable division
    Vec bm = vscale(b, b.back().inverse());
    Vec r = vmod(k, a, bm);
    a = std::move(bm);
    b = std::move(r);
  }
  if (!a.empty()) a = vscale(a, a.back().inverse());
  return a;
}

// x^e mod m over field k, with arbitrary-size exponent
Vec vpowmod_x(const Field& k, const mpz_class& e, const Vec& m) {
  Vec result{k.one()};
  Vec base{k.zero(), k.one()};  // X
  base = vmod(k, base, m);
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = vmod(k, vmul(k, result, base), m);
    base = vmod(k, vmul(k, base, base), m);
    n >>= 1;
  }
  return result;
}

// Rabin irreducibility test of a monic polynomial over a finite field k.
bool virreducible(const Field& k, const Vec& f) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  mpz_class q = k.order();
  // gcd(x^{q^{d/l}} - x, f) must be 1 for every prime l | d
  std::vector<int> prime_divs;
  int dd = d;
  for (int l = 2; l <= dd; ++l)
    if (dd % l == 0) {
      prime_divs.push_back(l);
      while (dd % l == 0) dd /= l;
    }
  Vec x{k.zero(), k.one()};
  for (int l : prime_divs) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d / l);
    Vec h = vpowmod_x(k, e, f);
    Vec g = vgcd(k, vsub(k, h, x), f);
    if (g.size() != 1) return false;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
  Vec h = vpowmod_x(k, e, f);
  return vsub(k, h, x).empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// Field construction

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rationals;
    f->p_ = 0;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(long long p) {
  if (!is_prime_ll(p)) throw ValueError("characteristic must be prime, got " + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<FElem> modulus) {
  if (!base) throw ValueError("extension: null base field");
  if (base->kind() == Kind::Rationals) {
    // Supported: needed for residue fields of nonlinear situations over Q
    // never arise in-spec, but the arithmetic itself is generic.  Keep the
    // construction available; callers guard usage.
  }
  while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
  if (modulus.size() < 3) throw ValueError("extension modulus must have degree >= 2");
  for (auto& c : modulus) {
    if (!c.valid() || !Field::same(c.field(), base))
      throw ValueError("extension modulus coefficients must lie in the base field");
  }
  if (!modulus.back().is_one()) throw ValueError("extension modulus must be monic");
  if (base->is_finite() && !virreducible(*base, modulus))
    throw ValueError("extension modulus is not irreducible");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Extension;
  f->p_ = base->characteristic();
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  return f;
}

FieldPtr Field::extension_canonical(long long p, int d) {
  FieldPtr fp = prime(p);
  if (d == 1) return fp;
  if (d < 1) throw ValueError("extension degree must be positive");
  // first irreducible X^d + c_{d-1}X^{d-1} + ... + c_0 in counting order
  std::vector<long long> digits(d, 0);
  for (;;) {
    Vec m;
    m.reserve(d + 1);
    for (int i = 0; i < d; ++i) m.push_back(fp->from_int(digits[i]));
    m.push_back(fp->one());
    if (virreducible(*fp, m)) return extension(fp, m);
    int i = 0;
    while (i < d && ++digits[i] == p) digits[i++] = 0;
    if (i == d) throw InternalCheckError("no irreducible modulus found");
  }
}

int Field::degree_over_base() const {
  return kind_ == Kind::Extension ? static_cast<int>(modulus_.size()) - 1 : 1;
}

int Field::degree_over_prime() const {
  int d = 1;
  for (const Field* f = this; f->kind_ == Kind::Extension; f = f->base_.get())
    d *= f->degree_over_base();
  return d;
}

mpz_class Field::order() const {
  if (!is_finite()) throw ValueError("order(): field is infinite");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(degree_over_prime()));
  return r;
}

// ---------------------------------------------------------------------------
// Element construction

FElem Field::zero() const {
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(0));
    case Kind::Prime: return FElem(shared_from_this(), 0LL);
    case Kind::Extension: return FElem(shared_from_this(), Vec{});
  }
  throw InternalCheckError("unreachable");
}

FElem Field::one() const { return from_int(1); }

FElem Field::from_int(long long n) const {
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(static_cast<long>(n)));
    case Kind::Prime: return FElem(shared_from_this(), mod_ll(n, p_));
    case Kind::Extension: {
      FElem c = base_->from_int(n);
      if (c.is_zero()) return zero();
      return FElem(shared_from_this(), Vec{c});
    }
  }
  throw InternalCheckError("unreachable");
}

FElem Field::from_mpz(const mpz_class& n) const {
  if (kind_ == Kind::Rationals) return FElem(shared_from_this(), mpq_class(n));
  mpz_class r = n % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return from_int(r.get_si());
}

FElem Field::from_mpq(const mpq_class& q) const {
  if (kind_ != Kind::Rationals) throw ValueError("from_mpq on non-rational field");
  mpq_class c = q;
  c.canonicalize();
  return FElem(shared_from_this(), c);
}

FElem Field::make(std::vector<FElem> coeffs) const {
  if (kind_ != Kind::Extension) throw ValueError("make(): not an extension field");
  for (auto& c : coeffs)
    if (!c.valid() || !same(c.field(), base_))
      throw ValueError("make(): coefficients must lie in the base field");
  Vec v = vmod(*base_, std::move(coeffs), modulus_);
  return FElem(shared_from_this(), std::move(v));
}

FElem Field::generator() const {
  if (kind_ != Kind::Extension) throw ValueError("generator(): not an extension field");
  return make({base_->zero(), base_->one()});
}

FElem Field::embed(const FElem& x) const {
  if (kind_ != Kind::Extension) throw ValueError("embed(): not an extension field");
  if (!same(x.field(), base_)) throw ValueError("embed(): element not in base field");
  if (x.is_zero()) return zero();
  return FElem(shared_from_this(), Vec{x});
}

FElem Field::embed_from_subfield(const FElem& x) const {
  if (same(x.field(), shared_from_this())) return x;
  if (kind_ != Kind::Extension)
    throw ValueError("embed_from_subfield(): element field is not a subfield");
  return embed(base_->embed_from_subfield(x));
}

std::optional<FElem> Field::project_to_base(const FElem& x) const {
  if (kind_ != Kind::Extension) throw ValueError("project_to_base(): not an extension field");
  const Vec& v = x.ext_coeffs();
  if (v.empty()) return base_->zero();
  if (v.size() == 1) return v[0];
  return std::nullopt;
}

bool Field::has_subfield(const FieldPtr& sub) const {
  if (same(shared_from_this(), sub)) return true;
  if (kind_ != Kind::Extension) return false;
  return base_->has_subfield(sub);
}

std::vector<FElem> Field::enumerate(long long limit) const {
  if (!is_finite()) throw ValueError("enumerate(): field is infinite");
  if (order() > static_cast<long>(limit)) throw ValueError("enumerate(): field too large");
  std::vector<FElem> out;
  if (kind_ == Kind::Prime) {
    for (long long i = 0; i < p_; ++i) out.push_back(from_int(i));
    return out;
  }
  std::vector<FElem> base_elems = base_->enumerate(limit);
  int d = degree_over_base();
  std::vector<size_t> digits(d, 0);
  for (;;) {
    Vec v;
    for (int i = 0; i < d; ++i) v.push_back(base_elems[digits[i]]);
    vtrim(v);
    out.push_back(FElem(shared_from_this(), v));
    int i = 0;
    while (i < d && ++digits[i] == base_elems.size()) digits[i++] = 0;
    if (i == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Field::same(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind_ != b->kind_ || a->p_ != b->p_) return false;
  if (a->kind_ != Kind::Extension) return true;
  if (a->modulus_.size() != b->modulus_.size()) return false;
  if (!same(a->base_, b->base_)) return false;
  for (size_t i = 0; i < a->modulus_.size(); ++i)
    if (!(a->modulus_[i] == b->modulus_[i])) return false;
  return true;
}

std::string Field::str() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p_);
    case Kind::Extension: {
      std::ostringstream os;
      os << base_->str() << "[x]/(";
      for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << "+";
        os << modulus_[i].str() << "*x^" << i;
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Element arithmetic

void require_same_field(const FElem& a, const FElem& b, const char* op) {
  if (!a.valid() || !b.valid()) throw ValueError(std::string(op) + ": invalid element");
  if (!Field::same(a.field(), b.field()))
    throw ValueError(std::string(op) + ": mismatched coefficient fields (" +
                     a.field()->str() + " vs " + b.field()->str() + ")");
}

FElem Field::add(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(a.rational_value() + b.rational_value()));
    case Kind::Prime: return FElem(shared_from_this(), mod_ll(a.prime_value() + b.prime_value(), p_));
    case Kind::Extension: return FElem(shared_from_this(), vadd(*base_, a.ext_coeffs(), b.ext_coeffs()));
  }
  throw InternalCheckError("unreachable");
}

FElem Field::sub(const FElem& a, const FElem& b) const { return add(a, neg(b)); }

FElem Field::mul(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(a.rational_value() * b.rational_value()));
    case Kind::Prime: return FElem(shared_from_this(), mod_ll(a.prime_value() * b.prime_value(), p_));
    case Kind::Extension:
      return FElem(shared_from_this(),
                   vmod(*base_, vmul(*base_, a.ext_coeffs(), b.ext_coeffs()), modulus_));
  }
  throw InternalCheckError("unreachable");
}

FElem Field::neg(const FElem& a) const {
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(-a.rational_value()));
    case Kind::Prime: return FElem(shared_from_this(), mod_ll(-a.prime_value(), p_));
    case Kind::Extension: {
      Vec v = a.ext_coeffs();
      for (auto& c : v) c = -c;
      return FElem(shared_from_this(), std::move(v));
    }
  }
  throw InternalCheckError("unreachable");
}

FElem Field::inv(const FElem& a) const {
  if (a.is_zero()) throw ValueError("division by zero");
  switch (kind_) {
    case Kind::Rationals: return FElem(shared_from_this(), mpq_class(1 / a.rational_value()));
    case Kind::Prime: return FElem(shared_from_this(), inv_mod_ll(a.prime_value(), p_));
    case Kind::Extension: {
      // extended euclid of a against the modulus over the base field
      Vec r0 = modulus_, r1 = a.ext_coeffs();
      Vec s0{}, s1{base_->one()};
      while (!r1.empty()) {
        // divide r0 by r1 (r1 need not be monic)
        FElem lc_inv = r1.back().inverse();
        Vec q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 0, base_->zero());
        Vec rem = r0;
        while (rem.size() >= r1.size()) {
          FElem c = rem.back() * lc_inv;
          size_t shift = rem.size() - r1.size();
          q[shift] = c;
          for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] = rem[shift + i] - c * r1[i];
          vtrim(rem);
        }
        Vec s2 = vsub(*base_, s0, vmul(*base_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      if (r0.size() != 1) throw InternalCheckError("inv: modulus not irreducible?");
      Vec res = vscale(s0, r0[0].inverse());
      return FElem(shared_from_this(), vmod(*base_, std::move(res), modulus_));
    }
  }
  throw InternalCheckError("unreachable");
}

bool Field::eq(const FElem& a, const FElem& b) const {
  switch (kind_) {
    case Kind::Rationals: return a.rational_value() == b.rational_value();
    case Kind::Prime: return a.prime_value() == b.prime_value();
    case Kind::Extension: {
      const Vec &x = a.ext_coeffs(), &y = b.ext_coeffs();
      if (x.size() != y.size()) return false;
      for (size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == y[i])) return false;
      return true;
    }
  }
  throw InternalCheckError("unreachable");
}

// ---------------------------------------------------------------------------
// FElem methods

bool FElem::is_zero() const {
  if (!valid()) throw ValueError("is_zero on invalid element");
  switch (f_->kind()) {
    case Field::Kind::Rationals: return rational_value() == 0;
    case Field::Kind::Prime: return prime_value() == 0;
    case Field::Kind::Extension: return ext_coeffs().empty();
  }
  return false;
}

bool FElem::is_one() const { return *this == f_->one(); }

FElem FElem::operator-() const { return f_->neg(*this); }
FElem FElem::inverse() const { return f_->inv(*this); }

FElem FElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  FElem result = f_->one();
  FElem base = *this;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

FElem operator+(const FElem& a, const FElem& b) {
  require_same_field(a, b, "+");
  return a.field()->add(a, b);
}
FElem operator-(const FElem& a, const FElem& b) {
  require_same_field(a, b, "-");
  return a.field()->sub(a, b);
}
FElem operator*(const FElem& a, const FElem& b) {
  require_same_field(a, b, "*");
  return a.field()->mul(a, b);
}
FElem operator/(const FElem& a, const FElem& b) {
  require_same_field(a, b, "/");
  return a.field()->mul(a, b.inverse());
}
bool operator==(const FElem& a, const FElem& b) {
  require_same_field(a, b, "==");
  return a.field()->eq(a, b);
}

int FElem::cmp(const FElem& a, const FElem& b) {
  require_same_field(a, b, "cmp");
  switch (a.field()->kind()) {
    case Field::Kind::Rationals: {
      int c = ::cmp(a.rational_value(), b.rational_value());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Field::Kind::Prime:
      return a.prime_value() < b.prime_value() ? -1 : (a.prime_value() > b.prime_value() ? 1 : 0);
    case Field::Kind::Extension: {
      const auto &x = a.ext_coeffs(), &y = b.ext_coeffs();
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (size_t i = x.size(); i-- > 0;) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  throw InternalCheckError("unreachable");
}

std::string FElem::str() const {
  if (!valid()) return "<invalid>";
  switch (f_->kind()) {
    case Field::Kind::Rationals: return rational_value().get_str();
    case Field::Kind::Prime: return std::to_string(prime_value());
    case Field::Kind::Extension: {
      if (ext_coeffs().empty()) return "0";
      std::ostringstream os;
      os << "[";
      for (size_t i = 0; i < ext_coeffs().size(); ++i) {
        if (i) os << ",";
        os << ext_coeffs()[i].str();
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

}  // namespace ffval
