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

#ifndef FFVAL_THEORY_HPP
#define FFVAL_THEORY_HPP

#include <map>

#include "ffval/construction.hpp"

namespace ffval {

/// A finitely sampled theory over the constant field U: a sample Q of the
/// prime set, one shape-checked R_q per sampled prime, polynomials P that
/// must stay irreducible, polynomials Z that must have roots, and a finite
/// sample of U on which the root-closure property ("for any x in U there is
/// y in U with y^q = R_q(x)") is checked.
struct TheoryConfig {
  FieldPtr U;
  std::vector<long long> Q;
  std::map<long long, RuSpec> R;  // one entry per member of Q
  std::vector<Poly> P;
  std::vector<Poly> Z;
  std::vector<FElem> closure_sample;
};

/// Throws ValidationError naming the violated clause.
void validate_theory_config(const TheoryConfig& cfg);

/// A model prefix: starting from U(t), run `depth` rounds; each round
/// adjoins, for every sampled prime q and every element x produced so far
/// (seeded by `seeds`, default {t}), a q-th root of R_q(x) unless R_q(x) is
/// already a q-th power.  Every adjunction degree is in Q by construction.
TowerPtr build_G_prefix(const TheoryConfig& cfg, int depth,
                        const std::vector<RatFunc>& seeds = {});

/// Axiom report over a tower:
///   item 1 (root closure) per sample element x and prime q: a witness
///          y^q = R_q(x) in the tower, or a flagged miss (deeper prefixes
///          may remedy it);
///   item 2 per P_i: irreducible over U, plus the degree obstruction that
///          no sampled prime divides deg P_i (so no tower residue extension
///          can split it);
///   item 3 per Z_i: a root in U.
Report check_axioms(const TowerPtr& tower, const TheoryConfig& cfg,
                    const std::vector<TowerElement>& sample);

/// Number of failing item-1 entries in the report of check_axioms; the
/// monotone-closure property says this is non-increasing in prefix depth.
int count_item1_failures(const Report& rep);

}  // namespace ffval

#endif  // FFVAL_THEORY_HPP
