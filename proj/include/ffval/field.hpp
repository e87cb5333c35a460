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

#ifndef FFVAL_FIELD_HPP
#define FFVAL_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffval/errors.hpp"

namespace ffval {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a constant field (prime field, finite extension field, or
/// the rationals).  Immutable value type; representatives are canonical:
/// least non-negative mod p, reduced mod the extension modulus, lowest terms.
class FElem {
 public:
  FElem() = default;  // invalid element; usable only as a placeholder

  bool valid() const { return f_ != nullptr; }
  const FieldPtr& field() const { return f_; }

  bool is_zero() const;
  bool is_one() const;

  FElem operator-() const;
  FElem inverse() const;
  FElem pow(const mpz_class& e) const;
  FElem pow(long long e) const { return pow(mpz_class(static_cast<long>(e))); }

  friend FElem operator+(const FElem& a, const FElem& b);
  friend FElem operator-(const FElem& a, const FElem& b);
  friend FElem operator*(const FElem& a, const FElem& b);
  friend FElem operator/(const FElem& a, const FElem& b);
  friend bool operator==(const FElem& a, const FElem& b);
  friend bool operator!=(const FElem& a, const FElem& b) { return !(a == b); }

  /// Total order used wherever determinism requires one (canonical roots,
  /// sorted factor lists).  Compares within one field only.
  static int cmp(const FElem& a, const FElem& b);
  friend bool operator<(const FElem& a, const FElem& b) { return cmp(a, b) < 0; }

  std::string str() const;

  // Representation accessors (used by serialization and the field itself).
  long long prime_value() const { return std::get<long long>(v_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }
  const std::vector<FElem>& ext_coeffs() const {
    return std::get<std::vector<FElem>>(v_);
  }

 private:
  friend class Field;
  FElem(FieldPtr f, std::variant<long long, mpq_class, std::vector<FElem>> v)
      : f_(std::move(f)), v_(std::move(v)) {}

  FieldPtr f_;
  std::variant<long long, mpq_class, std::vector<FElem>> v_;
};

/// A constant field.  Three kinds: the rationals Q, a prime field F_p, or a
/// finite extension of another finite field by a monic irreducible modulus.
/// Extensions nest, so residue-field towers are representable directly.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Rationals, Prime, Extension };

  static FieldPtr rationals();
  static FieldPtr prime(long long p);
  /// Extension of `base` by a monic irreducible `modulus` (coefficients in
  /// `base`, lowest degree first, leading coefficient one, degree >= 2).
  static FieldPtr extension(FieldPtr base, std::vector<FElem> modulus);
  /// F_{p^d} with the deterministically chosen modulus: the first monic
  /// irreducible of degree d in counting order of the coefficient vector
  /// (c_0 + c_1 p + ... ascending).
  static FieldPtr extension_canonical(long long p, int d);

  Kind kind() const { return kind_; }
  long long characteristic() const { return p_; }
  bool is_finite() const { return kind_ != Kind::Rationals; }
  const FieldPtr& base() const { return base_; }
  const std::vector<FElem>& modulus() const { return modulus_; }
  int degree_over_base() const;
  int degree_over_prime() const;
  /// Number of elements; only valid for finite fields.
  mpz_class order() const;

  FElem zero() const;
  FElem one() const;
  FElem from_int(long long n) const;
  FElem from_mpz(const mpz_class& n) const;
  FElem from_mpq(const mpq_class& q) const;
  /// Extension element from base-field coefficients (lowest degree first);
  /// reduced mod the modulus and trimmed.
  FElem make(std::vector<FElem> coeffs) const;
  /// The class of X in an extension field.
  FElem generator() const;
  /// Lift an element of base() into this field.
  FElem embed(const FElem& x) const;
  /// Lift an element of any field on the base chain into this field.
  FElem embed_from_subfield(const FElem& x) const;
  /// Inverse of embed: defined when all higher coordinates vanish.
  std::optional<FElem> project_to_base(const FElem& x) const;
  /// True if this field equals `sub` or has it on its base chain.
  bool has_subfield(const FieldPtr& sub) const;

  /// All elements, in cmp order.  Guarded: throws for infinite or large
  /// fields (order > limit).
  std::vector<FElem> enumerate(long long limit = 100000) const;

  /// Structural equality of field descriptors.
  static bool same(const FieldPtr& a, const FieldPtr& b);

  std::string str() const;

  // Element operations (dispatched from FElem operators).
  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem inv(const FElem& a) const;
  bool eq(const FElem& a, const FElem& b) const;

 private:
  Field() = default;

  Kind kind_ = Kind::Rationals;
  long long p_ = 0;  // characteristic
  FieldPtr base_;
  std::vector<FElem> modulus_;  // monic, over base_, size d+1
};

/// Throws ValueError unless a and b live in structurally equal fields.
void require_same_field(const FElem& a, const FElem& b, const char* op);

}  // namespace ffval

#endif  // FFVAL_FIELD_HPP
