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

#ifndef FFVAL_TOWER_PLACE_HPP
#define FFVAL_TOWER_PLACE_HPP

#include "ffval/tower.hpp"

namespace ffval {

/// Per-level data of a place chain.  The valuation at every level is
/// normalized to value group Z; v_beta is the value of the adjoined root in
/// that normalization, and ac_beta is the residue of the root after
/// multiplication by a power of the level uniformizer (the "angular
/// component", a unit residue that makes residues of arbitrary products
/// computable multiplicatively).
struct TowerLevel {
  long long q;            // step prime
  long long e;            // ramification index, 1 or q
  long long f;            // relative residue degree
  long long v_beta;       // value of the root at this level
  FieldPtr residue_field; // residue field after this level
  FElem ac_beta;          // angular component of the root
  FElem radicand_residue; // angular component of the radicand below this level
  // Ramified levels only: residue correction per unit of lower-level value,
  // keeping all angular components relative to one uniformizer of the level.
  FElem unit_adjust;
};

/// A chain of places through a tower: a base place of F(t) together with a
/// chosen extension at each level.  Identified deterministically by the base
/// place and the per-level factor index (`path`).
class TowerPlace {
 public:
  const TowerPtr& tower() const { return tw_; }
  const Place& base_place() const { return base_; }
  const std::vector<TowerLevel>& levels() const { return levels_; }
  const std::vector<int>& path() const { return path_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }

  /// Residue field of the full chain (the base place's residue field when
  /// the tower has no levels).
  const FieldPtr& residue_field() const;

  /// Product of ramification indices over levels [from, to).
  long long chain_e(int from, int to) const;
  long long chain_e() const { return chain_e(0, num_levels()); }
  /// Product of relative degrees over all levels, times the base degree 1
  /// factor (the base residue degree is carried by the base place itself).
  long long chain_f() const;

  static int cmp(const TowerPlace& a, const TowerPlace& b);
  friend bool operator<(const TowerPlace& a, const TowerPlace& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator==(const TowerPlace& a, const TowerPlace& b) {
    return cmp(a, b) == 0;
  }

  std::string str() const;

 private:
  friend std::vector<TowerPlace> split_place(const TowerPlace&, const TowerPtr&);
  friend TowerPlace start_chain(const Place&, const TowerPtr&);
  friend struct VacEngine;

  TowerPtr tw_;
  Place base_ = Place::infinite(Field::rationals());  // overwritten
  FieldPtr base_residue_field_;
  std::vector<TowerLevel> levels_;
  std::vector<int> path_;
};

/// Value and angular component of a tower element at a chain.
struct ValAc {
  long long v;
  FElem ac;  // residue of x * (uniformizer)^(-v) in the chain residue field
};

/// Exact valuation of x at the chain, in the top-level normalization
/// (value group Z).  kOrdInfinity for x = 0.  When the minimum of the
/// monomial valuations is attained several times and the corresponding
/// residues cancel, the true value is larger than the minimum and not
/// representable here: AmbiguousValuationError.
long long ord_tower(const TowerPlace& p, const TowerElement& x);

/// Valuation together with the unit residue; same error contract.
ValAc val_ac(const TowerPlace& p, const TowerElement& x);

/// Residue of x at the chain; requires ord_tower(p, x) = 0.
FElem tower_residue(const TowerPlace& p, const TowerElement& x);

/// Chain over `base` through a tower with no levels (or the root of an
/// incremental split through a deeper tower).
TowerPlace start_chain(const Place& base, const TowerPtr& tw);

/// All extensions of a chain on the first k levels to the first k+1 levels.
/// Ramified radicand (value not divisible by q): one chain, e = q, f = 1.
/// Otherwise one chain per irreducible factor of X^q - (radicand residue)
/// over the current residue field, f = factor degree, sorted by (f, factor
/// order).  The e*f sum is checked to equal q.
std::vector<TowerPlace> split_place(const TowerPlace& p, const TowerPtr& tw);

/// All complete chains above a base place, in deterministic order.
std::vector<TowerPlace> places_above(const Place& base, const TowerPtr& tw);

/// Ramification index of the next level if a root of X^q - W were adjoined
/// at the chain: q iff ord_tower(p, W) is not divisible by q, else 1.
long long ramification_in_step(const TowerPlace& p, long long q,
                               const TowerElement& W);

/// Discriminant criterion: true iff after the W -> W * V^q normalization
/// that makes the order of W at p divisible into zero, the discriminant
/// W^(q-1) power has order 0 at p.  Agrees with ramification_in_step == 1.
bool unramified_by_discriminant(const TowerPlace& p, long long q,
                                const TowerElement& W);

/// A chain above basePlace with chain_e not divisible by q; requires q not
/// to divide the tower degree (then every chain qualifies; the first in
/// order is returned).
TowerPlace factor_with_e_not_div_q(const Place& basePlace, const TowerPtr& tw,
                                   long long q);

/// Debug text dump of the splitting tree of a base place through a tower.
std::string splitting_tree_dump(const Place& base, const TowerPtr& tw);

}  // namespace ffval

#endif  // FFVAL_TOWER_PLACE_HPP
