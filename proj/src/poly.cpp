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

#include "ffval/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace ffval {

namespace {

void check_same_field(const Poly& a, const Poly& b, const char* op) {
  if (!Field::same(a.coeff_field(), b.coeff_field()))
    throw ValueError(std::string(op) + ": mismatched coefficient fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// Basic arithmetic

Poly::Poly(FieldPtr k, std::vector<FElem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (!c.valid() || !Field::same(c.field(), k_))
      throw ValueError("Poly: coefficient not in the stated field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(const FieldPtr& k) { return Poly(k, {k->zero(), k->one()}); }

Poly Poly::constant(const FElem& c) {
  if (!c.valid()) throw ValueError("Poly::constant: invalid element");
  return Poly(c.field(), {c});
}

Poly Poly::from_ints(const FieldPtr& k, const std::vector<long long>& cs) {
  std::vector<FElem> v;
  v.reserve(cs.size());
  for (long long c : cs) v.push_back(k->from_int(c));
  return Poly(k, std::move(v));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FElem Poly::lc() const {
  if (is_zero()) throw ValueError("lc of zero polynomial");
  return c_.back();
}

FElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return k_->zero();
  return c_[i];
}

FElem Poly::eval(const FElem& at) const {
  FElem r = k_->zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b, "+");
  std::vector<FElem> r(std::max(a.c_.size(), b.c_.size()), a.k_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
  return Poly(a.k_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b, "*");
  if (a.is_zero() || b.is_zero()) return Poly(a.k_);
  std::vector<FElem> r(a.c_.size() + b.c_.size() - 1, a.k_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
  return Poly(a.k_, std::move(r));
}

Poly Poly::operator*(const FElem& c) const {
  Poly r = *this;
  for (auto& x : r.c_) x = x * c;
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  check_same_field(a, b, "==");
  if (a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b, "divmod");
  if (b.is_zero()) throw ValueError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(a.k_), a};
  FElem lc_inv = b.lc().inverse();
  std::vector<FElem> q(a.c_.size() - b.c_.size() + 1, a.k_->zero());
  std::vector<FElem> r = a.c_;
  while (r.size() >= b.c_.size()) {
    FElem c = r.back() * lc_inv;
    size_t shift = r.size() - b.c_.size();
    q[shift] = c;
    for (size_t i = 0; i < b.c_.size(); ++i) r[shift + i] = r[shift + i] - c * b.c_[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return {Poly(a.k_, std::move(q)), Poly(a.k_, std::move(r))};
}

bool Poly::divides(const Poly& a) const {
  if (is_zero()) return a.is_zero();
  return divmod(a, *this).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(k_);
  std::vector<FElem> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * k_->from_int(static_cast<long long>(i)));
  return Poly(k_, std::move(r));
}

Poly Poly::pow(long long e) const {
  if (e < 0) throw ValueError("Poly::pow: negative exponent");
  Poly result = Poly::constant(k_->one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly Poly::shift_x(const FElem& a) const {
  Poly xa = Poly(k_, {a, k_->one()});
  Poly r(k_);
  for (size_t i = c_.size(); i-- > 0;) r = r * xa + Poly::constant(c_[i]);
  return r;
}

int Poly::multiplicity_of(const Poly& pi) const {
  if (pi.is_constant()) throw ValueError("multiplicity_of: constant divisor");
  int m = 0;
  Poly f = *this;
  if (f.is_zero()) throw ValueError("multiplicity_of: zero polynomial");
  for (;;) {
    auto [q, r] = divmod(f, pi);
    if (!r.is_zero()) return m;
    f = q;
    ++m;
  }
}

int Poly::cmp(const Poly& a, const Poly& b) {
  check_same_field(a, b, "cmp");
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (size_t i = a.c_.size(); i-- > 0;) {
    int c = FElem::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].str();
    if (i > 0) {
      if (!c_[i].is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Gcd

Poly poly_gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b, "gcd");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  check_same_field(a, b, "xgcd");
  const FieldPtr& k = a.coeff_field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(k->one()), s1(k);
  Poly t0(k), t1 = Poly::constant(k->one());
  while (!r1.is_zero()) {
    auto [q, r2] = Poly::divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FElem u = r0.lc().inverse();
  return {r0 * u, s0 * u, t0 * u};
}

// ---------------------------------------------------------------------------
// Factorization over finite fields

namespace {

FElem random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  switch (k->kind()) {
    case Field::Kind::Prime:
      return k->from_int(static_cast<long long>(rng() % static_cast<unsigned long long>(k->characteristic())));
    case Field::Kind::Extension: {
      std::vector<FElem> v;
      for (int i = 0; i < k->degree_over_base(); ++i) v.push_back(random_elem(k->base(), rng));
      return k->make(std::move(v));
    }
    default:
      throw ValueError("random_elem over infinite field");
  }
}

Poly random_poly_below(const FieldPtr& k, int deg, std::mt19937_64& rng) {
  std::vector<FElem> v;
  for (int i = 0; i < deg; ++i) v.push_back(random_elem(k, rng));
  return Poly(k, std::move(v));
}

Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly result = Poly::constant(base.coeff_field()->one()) % mod;
  Poly b = base % mod;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = (result * b) % mod;
    b = (b * b) % mod;
    n >>= 1;
  }
  return result;
}

// p-th root of a finite-field element: Frobenius is an automorphism of
// order degree_over_prime, so a^(p^(e-1)) is the unique p-th root.
FElem pth_root_const(const FElem& a) {
  const FieldPtr& k = a.field();
  long long p = k->characteristic();
  int e = k->degree_over_prime();
  mpz_class exp;
  mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e - 1));
  return a.pow(exp);
}

// f(X) = g(X^p) with g's coefficients the p-th roots of f's.
Poly pth_root_poly(const Poly& f) {
  const FieldPtr& k = f.coeff_field();
  long long p = k->characteristic();
  std::vector<FElem> g;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
    if (i % p != 0) continue;
    g.push_back(pth_root_const(f.coeff(i)));
  }
  for (int i = 0; i <= f.degree(); ++i)
    if (i % p != 0 && !f.coeff(i).is_zero())
      throw InternalCheckError("pth_root_poly: not a polynomial in X^p");
  return Poly(k, std::move(g));
}

// Squarefree decomposition of a monic f: f = prod parts[i].first^parts[i].second.
void squarefree_decompose(const Poly& f, int outer_mult,
                          std::map<int, Poly>* parts) {
  const FieldPtr& k = f.coeff_field();
  if (f.is_one()) return;
  Poly df = f.derivative();
  if (df.is_zero()) {
    // char p, f = g(X^p)
    if (k->characteristic() == 0) throw InternalCheckError("zero derivative in char 0");
    squarefree_decompose(pth_root_poly(f), outer_mult * static_cast<int>(k->characteristic()), parts);
    return;
  }
  Poly c = poly_gcd(f, df);
  Poly w = (f / c).monic();
  int i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly z = (w / y).monic();
    if (!z.is_one()) {
      auto it = parts->find(i * outer_mult);
      if (it == parts->end())
        parts->emplace(i * outer_mult, z);
      else
        it->second = it->second * z;
    }
    w = y;
    c = (c / y).monic();
    ++i;
  }
  if (!c.is_one()) squarefree_decompose(c, outer_mult, parts);
}

// Distinct-degree factorization of a monic squarefree f over a finite field.
std::vector<std::pair<Poly, int>> ddf(const Poly& f) {
  const FieldPtr& k = f.coeff_field();
  mpz_class Q = k->order();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = Poly::x(k) % rest;
  int d = 0;
  while (rest.degree() > 2 * (d + 1) - 1) {
    ++d;
    h = poly_powmod(h, Q, rest);
    Poly g = poly_gcd(h - Poly::x(k), rest);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = (rest / g).monic();
      h = h % rest;
    }
  }
  if (!rest.is_one()) out.emplace_back(rest, rest.degree());
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
// of irreducibles all of degree d.
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>* out) {
  const FieldPtr& k = f.coeff_field();
  if (f.degree() == d) {
    out->push_back(f);
    return;
  }
  long long p = k->characteristic();
  int e = k->degree_over_prime();
  for (;;) {
    Poly a = random_poly_below(k, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g = poly_gcd(a, f);
    if (!g.is_one() && g != f) {
      edf(g, d, rng, out);
      edf((f / g).monic(), d, rng, out);
      return;
    }
    Poly b(k);
    if (p == 2) {
      // trace map over F_2
      b = a % f;
      Poly t = b;
      for (int i = 1; i < e * d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      mpz_class Q = k->order(), Qd;
      mpz_pow_ui(Qd.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(d));
      mpz_class exp = (Qd - 1) / 2;
      b = poly_powmod(a, exp, f) - Poly::constant(k->one());
    }
    g = poly_gcd(b, f);
    if (!g.is_one() && g != f) {
      edf(g, d, rng, out);
      edf((f / g).monic(), d, rng, out);
      return;
    }
  }
}

Factorization factor_finite(const Poly& f, unsigned long long seed) {
  const FieldPtr& k = f.coeff_field();
  Factorization result{f.lc(), {}};
  std::map<int, Poly> parts;
  squarefree_decompose(f.monic(), 1, &parts);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (auto& [mult, part] : parts) {
    for (auto& [g, d] : ddf(part)) {
      std::vector<Poly> irreds;
      edf(g, d, rng, &irreds);
      for (auto& irr : irreds) result.factors.emplace_back(irr, mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return Poly::cmp(a.first, b.first) < 0; });
  return result;
}

// ---------------------------------------------------------------------------
// Factorization over Q (rational roots + closed forms up to degree 4)

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) return {};
  if (n > mpz_class("1000000000000"))
    throw UnsupportedError("rational root search: constant term too large");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FElem> rational_roots(const Poly& f) {
  const FieldPtr& k = f.coeff_field();
  std::vector<FElem> roots;
  Poly g = f;
  // strip zero roots
  if (!g.coeff(0).is_zero() || g.is_zero()) {
    // fallthrough
  }
  while (!g.is_zero() && g.coeff(0).is_zero() && g.degree() >= 1) {
    roots.push_back(k->zero());
    std::vector<FElem> c(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly(k, std::move(c));
    break;  // squarefree input: at most one zero root
  }
  if (g.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // clear denominators to an integer polynomial
  mpz_class den_lcm = 1;
  for (int i = 0; i <= g.degree(); ++i) {
    mpz_class d = g.coeff(i).rational_value().get_den();
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / gg * d;
  }
  std::vector<mpz_class> ic;
  for (int i = 0; i <= g.degree(); ++i) {
    mpq_class c = g.coeff(i).rational_value() * mpq_class(den_lcm);
    ic.push_back(c.get_num());
  }
  for (const mpz_class& pnum : divisors_of(ic.front())) {
    for (const mpz_class& pden : divisors_of(ic.back())) {
      for (int sign = 0; sign < 2; ++sign) {
        mpq_class cand(sign ? -pnum : pnum, pden);
        cand.canonicalize();
        FElem r = k->from_mpq(cand);
        if (g.eval(r).is_zero()) {
          if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Factor a monic squarefree rational polynomial with no rational roots,
// degree 2..4.  Returns monic irreducible factors.
std::vector<Poly> factor_rootfree_q(const Poly& f) {
  const FieldPtr& k = f.coeff_field();
  int n = f.degree();
  if (n <= 1) return n == 1 ? std::vector<Poly>{f} : std::vector<Poly>{};
  if (n == 2 || n == 3) return {f};  // no rational roots => irreducible
  if (n != 4) throw UnsupportedError("factorization over Q above degree 4");
  // f = X^4 + aX^3 + bX^2 + cX + d; look for a split into two monic
  // quadratics via rational roots of the resolvent cubic.
  FElem a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  FElem four = k->from_int(4);
  Poly resolvent(k, {-(a * a * d - four * b * d + c * c), a * c - four * d, -b, k->one()});
  for (const FElem& y : rational_roots(resolvent)) {
    // p + r = a, p*r = b - y
    FElem disc = a * a - four * (b - y);
    auto sd = is_qth_power_const(disc, 2);
    if (!sd) continue;
    FElem two = k->from_int(2);
    FElem p = (a + *sd) / two, r = (a - *sd) / two;
    // q + s = y, q*s = d, p*s + q*r = c
    FElem q, s;
    if (!(p == r)) {
      q = (c - p * y) / (r - p);
      s = y - q;
    } else {
      FElem d2 = y * y - four * d;
      auto sq = is_qth_power_const(d2, 2);
      if (!sq) continue;
      q = (y + *sq) / two;
      s = y - q;
    }
    Poly f1(k, {q, p, k->one()});
    Poly f2(k, {s, r, k->one()});
    if (f1 * f2 == f) {
      std::vector<Poly> out{f1, f2};
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {f};  // no quadratic split: irreducible
}

Factorization factor_rationals(const Poly& f) {
  const FieldPtr& k = f.coeff_field();
  Factorization result{f.lc(), {}};
  std::map<int, Poly> parts;
  squarefree_decompose(f.monic(), 1, &parts);
  for (auto& [mult, part] : parts) {
    Poly rest = part;
    for (const FElem& r : rational_roots(part)) {
      Poly lin(k, {-r, k->one()});
      result.factors.emplace_back(lin, mult);
      rest = (rest / lin).monic();
    }
    if (rest.degree() >= 1)
      for (const Poly& g : factor_rootfree_q(rest)) result.factors.emplace_back(g, mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return Poly::cmp(a.first, b.first) < 0; });
  return result;
}

}  // namespace

Poly Factorization::product() const {
  Poly r = Poly::constant(unit);
  for (const auto& [g, m] : factors) r = r * g.pow(m);
  return r;
}

Factorization poly_factor(const Poly& f, unsigned long long seed) {
  if (f.is_zero()) throw ValueError("poly_factor: zero polynomial");
  if (f.is_constant()) return {f.lc(), {}};
  if (f.coeff_field()->is_finite()) return factor_finite(f, seed);
  return factor_rationals(f);
}

namespace {

bool is_small_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

FElem pseudo_random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  if (k->kind() != Field::Kind::Extension)
    return k->from_int(static_cast<long long>(
        rng() % static_cast<unsigned long long>(k->characteristic())));
  std::vector<FElem> cs;
  for (int i = 0; i < k->degree_over_base(); ++i)
    cs.push_back(pseudo_random_elem(k->base(), rng));
  return k->make(std::move(cs));
}

// Deterministic seeded search for z with z^e != 1 (e = m/k for prime k | m);
// such z make up a (k-1)/k fraction of the multiplicative group.
FElem find_power_nonresidue(const FieldPtr& k, const mpz_class& e) {
  std::mt19937_64 rng(0x6b3a0d5c9e172f41ULL);
  for (int i = 0; i < 4096; ++i) {
    FElem z = pseudo_random_elem(k, rng);
    if (z.is_zero()) continue;
    if (z.pow(e) != k->one()) return z;
  }
  throw InternalCheckError("find_power_nonresidue: no nonresidue found");
}

// k-th root in a finite field, for prime k != characteristic.  The element
// must be a k-th power (checked); when k | |K*| this is the
// discrete-log-digit descent in the k-Sylow subgroup, otherwise the root is
// a single exponentiation.
FElem kth_root_finite(const FElem& a, long long k) {
  const FieldPtr& K = a.field();
  const FElem one = K->one();
  mpz_class m = K->order() - 1;
  if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(k)) == 0) {
    mpz_class s;
    mpz_class kz(static_cast<long>(k));
    if (mpz_invert(s.get_mpz_t(), kz.get_mpz_t(), m.get_mpz_t()) == 0)
      throw InternalCheckError("kth_root_finite: k not invertible mod |K*|");
    FElem x = a.pow(s);
    if (x.pow(k) != a) throw InternalCheckError("kth_root_finite: bad root");
    return x;
  }
  // m = k^e * u with k not dividing u
  mpz_class u = m, ke(1);
  long long e = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(k))) {
    u /= static_cast<long>(k);
    ke *= static_cast<long>(k);
    ++e;
  }
  FElem rho = find_power_nonresidue(K, m / static_cast<long>(k));
  FElem h = rho.pow(u);                 // generator of the k-Sylow subgroup
  FElem omega = h.pow(ke / static_cast<long>(k));  // primitive k-th root of 1
  // Digits of j with a^u = h^j, maintaining cur = a^u * h^-j so far.
  FElem cur = a.pow(u);
  FElem hinv = h.inverse();
  mpz_class j = 0, kpow = 1;
  for (long long i = 0; i < e; ++i) {
    mpz_class shift = ke / (kpow * static_cast<long>(k));
    FElem probe = cur.pow(shift);
    long long digit = -1;
    FElem w = one;
    for (long long d = 0; d < k; ++d) {
      if (probe == w) {
        digit = d;
        break;
      }
      w = w * omega;
    }
    if (digit < 0)
      throw InternalCheckError("kth_root_finite: discrete log digit missing");
    j += kpow * static_cast<long>(digit);
    cur = cur * hinv.pow(kpow * static_cast<long>(digit));
    kpow *= static_cast<long>(k);
  }
  if (mpz_divisible_ui_p(j.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
    throw InternalCheckError("kth_root_finite: element is not a k-th power");
  mpz_class jk = j / static_cast<long>(k);
  FElem x;
  if (u == 1) {
    x = h.pow(jk);
  } else {
    mpz_class alpha, kz(static_cast<long>(k));
    if (mpz_invert(alpha.get_mpz_t(), kz.get_mpz_t(), u.get_mpz_t()) == 0)
      throw InternalCheckError("kth_root_finite: k not invertible mod u");
    mpz_class t = (kz * alpha - 1) / u;
    // x^k = a^(k*alpha) * h^(-j*t) = a * (a^u)^t * h^(-j*t) = a
    x = a.pow(alpha) * hinv.pow(jk * t % ke);
  }
  if (x.pow(k) != a) throw InternalCheckError("kth_root_finite: bad root");
  return x;
}

}  // namespace

Factorization factor_qth_binomial(long long q, const FElem& a) {
  if (!a.valid()) throw ValueError("factor_qth_binomial: invalid element");
  const FieldPtr& K = a.field();
  auto binomial = [&] {
    std::vector<FElem> cs(static_cast<size_t>(q) + 1, K->zero());
    cs[0] = -a;
    cs[static_cast<size_t>(q)] = K->one();
    return Poly(K, std::move(cs));
  };
  if (!K->is_finite() || a.is_zero() || !is_small_prime(q) ||
      q == K->characteristic())
    return poly_factor(binomial());

  const FElem one = K->one();
  mpz_class m = K->order() - 1;
  long long r = static_cast<long long>(
      mpz_fdiv_ui(m.get_mpz_t(), static_cast<unsigned long>(q)));
  Factorization res{one, {}};
  if (r != 0) {
    // q-th powering is injective on the k-Sylow-free part: unique root b.
    FElem b = kth_root_finite(a, q);
    res.factors.emplace_back(Poly::x(K) - Poly::constant(b), 1);
    if (q > 2) {
      Poly cof = (binomial() / (Poly::x(K) - Poly::constant(b))).monic();
      // The other roots are b*zeta with zeta a primitive q-th root of 1;
      // they all have degree d = ord of |K| mod q over K.
      long long sz = (r + 1) % q, d = 1, acc = sz;
      while (acc != 1) {
        acc = (acc * sz) % q;
        ++d;
      }
      if (d == q - 1) {
        res.factors.emplace_back(cof, 1);
      } else if (q == 5 && d == 2 && K->characteristic() != 2) {
        // Two quadratics X^2 - u*b*X + b^2 and X^2 - v*b*X + b^2, where
        // u = zeta + zeta^4 and v = zeta^2 + zeta^3 are the roots of
        // Y^2 + Y - 1, i.e. (-1 +- sqrt(5))/2.
        FElem w = kth_root_finite(K->from_int(5), 2);
        FElem half = K->from_int(2).inverse();
        FElem b2 = b * b;
        for (const FElem& uu : {(w - one) * half, (-w - one) * half}) {
          std::vector<FElem> cs{b2, -(uu * b), one};
          res.factors.emplace_back(Poly(K, std::move(cs)), 1);
        }
      } else {
        // Rare shapes (e.g. characteristic 2) fall back to the generic
        // machinery for the cofactor.
        for (auto& [g, mult] : poly_factor(cof).factors)
          res.factors.emplace_back(g, mult);
      }
    }
  } else {
    FElem pw = a.pow(m / static_cast<long>(q));
    if (pw != one) {
      // Not a q-th power: X^q - a is irreducible.
      res.factors.emplace_back(binomial(), 1);
    } else {
      FElem b = kth_root_finite(a, q);
      FElem zeta =
          find_power_nonresidue(K, m / static_cast<long>(q)).pow(m / static_cast<long>(q));
      FElem root = b;
      for (long long i = 0; i < q; ++i) {
        res.factors.emplace_back(Poly::x(K) - Poly::constant(root), 1);
        root = root * zeta;
      }
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& x, const auto& y) { return Poly::cmp(x.first, y.first) < 0; });
  if (res.product() != binomial())
    throw InternalCheckError("factor_qth_binomial: product check failed");
  return res;
}

bool poly_is_irreducible(const Poly& f, unsigned long long seed) {
  if (f.degree() < 1) return false;
  auto fac = poly_factor(f, seed);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<FElem> poly_roots(const Poly& f, unsigned long long seed) {
  std::vector<FElem> out;
  if (f.degree() < 1) return out;
  for (const auto& [g, m] : poly_factor(f, seed).factors)
    if (g.degree() == 1) out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FElem> is_qth_power_const(const FElem& a, long long q) {
  if (!a.valid()) throw ValueError("is_qth_power_const: invalid element");
  if (q < 2) throw ValueError("is_qth_power_const: q must be a prime >= 2");
  const FieldPtr& k = a.field();
  if (a.is_zero()) return k->zero();
  if (k->kind() == Field::Kind::Rationals) {
    const mpq_class& v = a.rational_value();
    if (v < 0 && q % 2 == 0) return std::nullopt;
    mpz_class num = abs(v.get_num()), den = v.get_den();
    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
    if (!en || !ed) return std::nullopt;
    if (v < 0) rn = -rn;
    mpq_class r(rn, rd);
    r.canonicalize();
    return k->from_mpq(r);
  }
  if (q == k->characteristic()) return pth_root_const(a);
  // roots of X^q - a; least root is canonical
  std::vector<FElem> roots;
  for (const auto& [g, mult] : factor_qth_binomial(q, a).factors)
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  if (roots.empty()) return std::nullopt;
  return *std::min_element(roots.begin(), roots.end());
}

}  // namespace ffval
