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

#include "ffval/theory.hpp"

#include <algorithm>

namespace ffval {

void validate_theory_config(const TheoryConfig& cfg) {
  if (!cfg.U) throw ValidationError("the constant field must be set");
  if (cfg.Q.empty())
    throw ValidationError("the prime sample must not be empty");
  for (size_t i = 0; i < cfg.Q.size(); ++i) {
    long long q = cfg.Q[i];
    if (q == cfg.U->characteristic())
      throw ValidationError(
          "no sampled prime may equal the field characteristic");
    for (size_t j = i + 1; j < cfg.Q.size(); ++j)
      if (cfg.Q[j] == q)
        throw ValidationError("the sampled primes must be pairwise distinct");
    auto it = cfg.R.find(q);
    if (it == cfg.R.end())
      throw ValidationError("every sampled prime needs its R_q entry");
    const RuSpec& R = it->second;
    if (R.q() != q)
      throw ValidationError("R_q must be paired with its own prime q");
    if (!Field::same(R.const_field(), cfg.U))
      throw ValidationError("every R_q must be defined over the field U");
    bool some_nondiv = false;
    for (const auto& [c, m] : R.roots_signed())
      if (((m % q) + q) % q != 0) some_nondiv = true;
    if (!some_nondiv)
      throw ValidationError(
          "some zero or pole of R_q must have order not divisible by q");
  }
  for (const Poly& p : cfg.P) {
    if (!Field::same(p.coeff_field(), cfg.U))
      throw ValidationError("every P entry must be defined over the field U");
    if (p.degree() < 1)
      throw ValidationError("every P entry must be nonconstant");
  }
  for (const Poly& z : cfg.Z) {
    if (!Field::same(z.coeff_field(), cfg.U))
      throw ValidationError("every Z entry must be defined over the field U");
    if (z.degree() < 1)
      throw ValidationError("every Z entry must be nonconstant");
  }
  for (const FElem& x : cfg.closure_sample) {
    if (!Field::same(x.field(), cfg.U))
      throw ValidationError("closure-sample elements must lie in the field U");
    for (long long q : cfg.Q) {
      const RuSpec& R = cfg.R.at(q);
      bool is_pole = false;
      for (const auto& [b, j] : R.poles())
        if (b == x) is_pole = true;
      if (is_pole) continue;
      FElem val = R.apply(RatFunc::constant(x)).constant_value();
      if (!is_qth_power_const(val, q))
        throw ValidationError(
            "the root-closure property fails on the sample: R_" +
            std::to_string(q) + "(" + x.str() + ") has no q-th root in U");
    }
  }
}

TowerPtr build_G_prefix(const TheoryConfig& cfg, int depth,
                        const std::vector<RatFunc>& seeds) {
  if (depth < 0) throw ValueError("build_G_prefix: negative depth");
  validate_theory_config(cfg);
  TowerPtr tw = Tower::make_base(cfg.U);
  std::vector<TowerElement> current;
  if (seeds.empty())
    current.push_back(tw->t());
  else
    for (const RatFunc& s : seeds) current.push_back(tw->from_ratfunc(s));

  for (int round = 0; round < depth; ++round) {
    std::vector<TowerElement> next;
    for (const TowerElement& x0 : current) {
      for (long long q : cfg.Q) {
        TowerElement x = tw->lift(x0);
        TowerElement W;
        try {
          W = ru_apply_tower(cfg.R.at(q), x);
        } catch (const ValueError&) {
          continue;  // R_q undefined at x
        }
        if (W.is_zero()) continue;
        if (is_qth_power(tw, W, q)) continue;
        tw = adjoin_root(tw, q, W);
        next.push_back(tw->beta(tw->num_levels() - 1));
      }
    }
    // Relift survivors produced in earlier rounds of this pass.
    for (TowerElement& e : next) e = tw->lift(e);
    current = std::move(next);
  }
  return tw;
}

Report check_axioms(const TowerPtr& tower, const TheoryConfig& cfg,
                    const std::vector<TowerElement>& sample) {
  validate_theory_config(cfg);
  Report rep;

  for (size_t k = 0; k < sample.size(); ++k) {
    TowerElement x = tower->lift(sample[k]);
    for (long long q : cfg.Q) {
      std::string what =
          "axiom1 q=" + std::to_string(q) + " x#" + std::to_string(k);
      TowerElement W;
      try {
        W = ru_apply_tower(cfg.R.at(q), x);
      } catch (const ValueError&) {
        rep.items.push_back({what, true, "R_q undefined at x: vacuous"});
        continue;
      }
      if (W.is_zero()) {
        rep.items.push_back({what, true, "R_q(x) = 0 = 0^q"});
        continue;
      }
      try {
        std::optional<TowerElement> y = is_qth_power(tower, W, q);
        rep.items.push_back(
            {what, y.has_value(),
             y ? "witness found" : "no witness yet (deeper prefix needed)"});
      } catch (const UnsupportedError& ex) {
        rep.items.push_back({what, false, std::string("undecided: ") + ex.what()});
      }
    }
  }

  for (size_t k = 0; k < cfg.P.size(); ++k) {
    const Poly& p = cfg.P[k];
    std::string what = "axiom2 P#" + std::to_string(k);
    bool irr = poly_is_irreducible(p);
    bool obstructed = true;
    for (long long q : cfg.Q)
      if (p.degree() % q == 0) obstructed = false;
    rep.items.push_back(
        {what, irr && obstructed,
         !irr ? "reducible over U"
              : (obstructed
                     ? "irreducible over U; degree coprime to all sampled "
                       "primes"
                     : "a sampled prime divides the degree: a residue "
                       "extension could split it")});
  }

  for (size_t k = 0; k < cfg.Z.size(); ++k) {
    std::vector<FElem> roots = poly_roots(cfg.Z[k]);
    rep.items.push_back({"axiom3 Z#" + std::to_string(k), !roots.empty(),
                         roots.empty() ? "no root in U"
                                       : "root " + roots.front().str()});
  }
  return rep;
}

int count_item1_failures(const Report& rep) {
  int n = 0;
  for (const CheckItem& it : rep.items)
    if (!it.pass && it.what.rfind("axiom1", 0) == 0) ++n;
  return n;
}

}  // namespace ffval
