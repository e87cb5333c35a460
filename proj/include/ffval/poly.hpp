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

#ifndef FFVAL_POLY_HPP
#define FFVAL_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffval/field.hpp"

namespace ffval {

/// Dense univariate polynomial over a constant field, lowest degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class Poly {
 public:
  explicit Poly(FieldPtr k) : k_(std::move(k)) {}
  Poly(FieldPtr k, std::vector<FElem> coeffs);

  static Poly x(const FieldPtr& k);
  static Poly constant(const FElem& c);
  static Poly from_ints(const FieldPtr& k, const std::vector<long long>& cs);

  const FieldPtr& coeff_field() const { return k_; }
  const std::vector<FElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FElem lc() const;
  FElem coeff(int i) const;
  FElem eval(const FElem& at) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const FElem& c) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly operator/(const Poly& b) const { return divmod(*this, b).first; }
  Poly operator%(const Poly& b) const { return divmod(*this, b).second; }
  bool divides(const Poly& a) const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(long long e) const;
  Poly shift_x(const FElem& a) const;  // p(X + a)

  /// Multiplicity of the (monic) factor pi in *this.
  int multiplicity_of(const Poly& pi) const;

  /// Deterministic total order: degree, then coefficients from the top.
  static int cmp(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b) { return cmp(a, b) < 0; }

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  FieldPtr k_;
  std::vector<FElem> c_;
};

/// Monic gcd; gcd(0, f) = monic f; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// g = gcd(a,b) together with s, t such that s*a + t*b = g.
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

/// Full factorization: unit * prod factors[i].first ^ factors[i].second.
/// Factors are monic irreducible, sorted by degree then coefficient order.
/// Finite coefficient fields: complete (squarefree + distinct-degree +
/// equal-degree splitting, seeded).  Rationals: rational roots plus closed
/// forms up to degree 4; beyond that throws UnsupportedError.
struct Factorization {
  FElem unit;
  std::vector<std::pair<Poly, int>> factors;
  Poly product() const;  // unit * prod, for checking
};
Factorization poly_factor(const Poly& f, unsigned long long seed = 1);

bool poly_is_irreducible(const Poly& f, unsigned long long seed = 1);

/// Factorization of X^q - a (q prime, a nonzero, coefficient field finite of
/// characteristic != q).  Exploits the binomial shape: the factors are read
/// off from root extraction and roots of unity, all computed by plain
/// exponentiation.  This matters over deep residue fields, where generic
/// distinct-degree factorization is far more expensive.  Inputs outside the
/// preconditions fall back to poly_factor.  The result is verified by
/// re-multiplication.
Factorization factor_qth_binomial(long long q, const FElem& a);

/// Roots of f in its coefficient field, sorted, without multiplicity.
std::vector<FElem> poly_roots(const Poly& f, unsigned long long seed = 1);

/// b with b^q = a if one exists (q prime; canonical: least such root).
/// a = 0 returns 0.  Exhaustively correct on finite fields.
std::optional<FElem> is_qth_power_const(const FElem& a, long long q);

}  // namespace ffval

#endif  // FFVAL_POLY_HPP
