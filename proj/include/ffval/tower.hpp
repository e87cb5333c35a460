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

#ifndef FFVAL_TOWER_HPP
#define FFVAL_TOWER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffval/place.hpp"

namespace ffval {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Element of a radical tower F(t)(b_0, ..., b_{n-1}) with b_j^{q_j} = W_j,
/// written in the monomial basis {prod b_j^{e_j} : 0 <= e_j < q_j}:
/// a map from exponent vectors (length = number of tower levels) to nonzero
/// F(t)-coefficients.  The zero element has an empty map.
class TowerElement {
 public:
  TowerElement() = default;  // invalid placeholder

  bool valid() const { return tw_ != nullptr; }
  const TowerPtr& tower() const { return tw_; }
  const std::map<std::vector<int>, RatFunc>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// True if the element lies in the base field F(t) (single all-zero
  /// exponent term, or zero).
  bool is_base() const;
  RatFunc as_ratfunc() const;  // requires is_base
  bool is_monomial() const { return c_.size() == 1; }

  TowerElement operator-() const;
  TowerElement inverse() const;
  TowerElement pow(long long e) const;
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b);
  friend bool operator==(const TowerElement& a, const TowerElement& b);
  friend bool operator!=(const TowerElement& a, const TowerElement& b) {
    return !(a == b);
  }

  static int cmp(const TowerElement& a, const TowerElement& b);
  friend bool operator<(const TowerElement& a, const TowerElement& b) {
    return cmp(a, b) < 0;
  }

  std::string str() const;

 private:
  friend class Tower;
  TowerElement(TowerPtr tw, std::map<std::vector<int>, RatFunc> c)
      : tw_(std::move(tw)), c_(std::move(c)) {}

  TowerPtr tw_;
  std::map<std::vector<int>, RatFunc> c_;
};

/// One radical adjunction: a root of X^q - W over the tower below it.
struct KummerStep {
  long long q;
  TowerElement W;  // element of the prefix tower (earlier levels only)
};

/// An immutable radical tower over F(t).  Levels are appended by
/// adjoin_root, which certifies that each radicand is not already a q-th
/// power, so the degree over F(t) is exactly the product of the step primes.
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  static TowerPtr make_base(FieldPtr constant_field);

  const FieldPtr& const_field() const { return k_; }
  const std::vector<KummerStep>& steps() const { return steps_; }
  int num_levels() const { return static_cast<int>(steps_.size()); }
  long long degree() const;  // product of the step primes

  // Element factories.
  TowerElement zero() const;
  TowerElement one() const;
  TowerElement from_ratfunc(RatFunc r) const;
  TowerElement from_const(const FElem& c) const;
  TowerElement t() const;
  /// The adjoined root b_level.
  TowerElement beta(int level) const;
  /// Element from explicit terms; exponents are reduced to canonical range.
  TowerElement element(std::map<std::vector<int>, RatFunc> terms) const;

  /// Lift an element of a prefix tower into this tower.
  TowerElement lift(const TowerElement& x) const;
  /// The radicand of step `level`, lifted into this tower.
  TowerElement radicand(int level) const;

  /// The sub-tower consisting of the first k levels (no re-verification of
  /// the radicands; they were certified when first adjoined).
  TowerPtr prefix(int k) const;

  /// Structural equality (same constant field, same steps).
  static bool same(const TowerPtr& a, const TowerPtr& b);
  /// True if a's steps are a prefix of b's.
  static bool is_prefix(const TowerPtr& a, const TowerPtr& b);

  std::string str() const;

 private:
  friend TowerPtr adjoin_root(const TowerPtr&, long long, const TowerElement&);
  Tower() = default;
  FieldPtr k_;
  std::vector<KummerStep> steps_;
};

/// 1 if W is already a q-th power in the tower (witness in *witness if
/// non-null), else q.  q must be a prime different from the characteristic.
long long qth_root_degree(const TowerPtr& tw, long long q, const TowerElement& W,
                          TowerElement* witness = nullptr);

/// Witness y with y^q = x, or nullopt.  Exact for base-field elements and
/// for monomials; for general sums the test is decided through a valuation
/// obstruction when one applies, otherwise UnsupportedError.
std::optional<TowerElement> is_qth_power(const TowerPtr& tw, const TowerElement& x,
                                         long long q);

/// New tower with one more level; rejects radicands that are already q-th
/// powers (degree would collapse).
TowerPtr adjoin_root(const TowerPtr& tw, long long q, const TowerElement& W);

}  // namespace ffval

#endif  // FFVAL_TOWER_HPP
