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

#include "ffval/tower_place.hpp"

#include <sstream>

namespace ffval {

namespace {

long long mod_nonneg(long long x, long long q) { return ((x % q) + q) % q; }

}  // namespace

const FieldPtr& TowerPlace::residue_field() const {
  return levels_.empty() ? base_residue_field_ : levels_.back().residue_field;
}

long long TowerPlace::chain_e(int from, int to) const {
  if (from < 0 || to > num_levels() || from > to)
    throw ValueError("chain_e: bad level range");
  long long e = 1;
  for (int i = from; i < to; ++i) e *= levels_[i].e;
  return e;
}

long long TowerPlace::chain_f() const {
  long long f = 1;
  for (const auto& l : levels_) f *= l.f;
  return f;
}

int TowerPlace::cmp(const TowerPlace& a, const TowerPlace& b) {
  int c = Place::cmp(a.base_, b.base_);
  if (c != 0) return c;
  if (a.path_ != b.path_) return a.path_ < b.path_ ? -1 : 1;
  return 0;
}

std::string TowerPlace::str() const {
  std::ostringstream os;
  os << base_.str();
  for (size_t i = 0; i < levels_.size(); ++i)
    os << " -> [e=" << levels_[i].e << ",f=" << levels_[i].f << ",#"
       << path_[i] << "]";
  return os.str();
}

// Valuation/angular-component engine.  Works level by level on the exponent
// representation: at each level x = sum_r x_r b^r, combine the (value, ac)
// pairs of the x_r.  Ramified levels have pairwise distinct term values
// (they differ mod q), so the minimum is exact; unramified levels may tie,
// in which case the residue sum decides (zero sum means the true value is
// larger than the monomial minimum and is reported as ambiguous).
struct VacEngine {
  const TowerPlace& P;

  const FieldPtr& res_field(int level) const {
    return level == 0 ? P.base_residue_field_ : P.levels_[level - 1].residue_field;
  }

  ValAc run(int level, const std::map<std::vector<int>, RatFunc>& terms) const {
    if (terms.empty()) return {kOrdInfinity, res_field(level)->zero()};
    if (level == 0) {
      if (terms.size() != 1)
        throw InternalCheckError("valuation engine: unreduced base terms");
      const RatFunc& g = terms.begin()->second;
      long long v = ord_at(P.base_place(), g);
      RatFunc u0 = P.base_place().is_infinite()
                       ? RatFunc::t(g.coeff_field()).inverse()
                       : RatFunc::from_poly(P.base_place().pi());
      return {v, residue_at(P.base_place(), g * u0.pow(-v))};
    }

    const TowerLevel& L = P.levels_[level - 1];
    int idx = level - 1;
    std::map<int, std::map<std::vector<int>, RatFunc>> groups;
    for (const auto& [e, g] : terms) {
      int r = idx < static_cast<int>(e.size()) ? e[idx] : 0;
      std::vector<int> e2 = e;
      if (idx < static_cast<int>(e2.size())) e2[idx] = 0;
      groups[r].emplace(std::move(e2), g);
    }

    if (L.e == L.q) {
      // Ramified: values r*v_beta differ mod q across r; unique minimum.
      bool have = false;
      long long best = 0;
      ValAc besta{0, FElem()};
      int bestr = 0;
      for (const auto& [r, sub] : groups) {
        ValAc a = run(level - 1, sub);
        long long val = L.q * a.v + r * L.v_beta;
        if (!have || val < best) {
          have = true;
          best = val;
          besta = a;
          bestr = r;
        }
      }
      FElem ac = besta.ac * L.unit_adjust.pow(besta.v) * L.ac_beta.pow((long long)bestr);
      return {best, ac};
    }

    // Unramified: combine, refining ties through the residue sum.
    std::vector<std::pair<long long, FElem>> parts;
    long long best = 0;
    bool have = false;
    for (const auto& [r, sub] : groups) {
      ValAc a = run(level - 1, sub);
      long long val = a.v + r * L.v_beta;
      FElem ac = L.residue_field->embed_from_subfield(a.ac) *
                 L.ac_beta.pow((long long)r);
      parts.emplace_back(val, ac);
      if (!have || val < best) {
        have = true;
        best = val;
      }
    }
    FElem sum = L.residue_field->zero();
    for (const auto& [val, ac] : parts)
      if (val == best) sum = sum + ac;
    if (sum.is_zero())
      throw AmbiguousValuationError(
          "valuation exceeds the monomial minimum at " + P.str() +
          "; exact value not representable");
    return {best, sum};
  }
};

TowerPlace start_chain(const Place& base, const TowerPtr& tw) {
  if (!Field::same(base.constant_field(), tw->const_field()))
    throw ValueError("start_chain: place over a different constant field");
  TowerPlace p;
  p.tw_ = tw->prefix(0);
  p.base_ = base;
  p.base_residue_field_ = place_residue_field(base);
  return p;
}

std::vector<TowerPlace> split_place(const TowerPlace& p, const TowerPtr& tw) {
  if (tw->num_levels() != p.num_levels() + 1 ||
      !Tower::is_prefix(p.tower(), tw))
    throw ValueError("split_place: tower must extend the chain by one level");
  const KummerStep& st = tw->steps().back();
  long long q = st.q;

  ValAc w = VacEngine{p}.run(p.num_levels(), st.W.terms());
  if (w.v == kOrdInfinity)
    throw ValueError("split_place: zero radicand");

  std::vector<TowerPlace> out;
  if (mod_nonneg(w.v, q) != 0) {
    // Ramified: single chain, e = q, f = 1.  The root's angular component
    // is a power of the radicand's: with s*v_beta = 1 mod q and
    // c = (s*v_beta - 1)/q, res(b * pi^-v_beta) = acW^-c, and each unit of
    // lower-level value contributes acW^-s.
    long long s = 1;
    while (mod_nonneg(s * w.v, q) != 1) ++s;
    long long c = (s * w.v - 1) / q;
    TowerLevel L;
    L.q = q;
    L.e = q;
    L.f = 1;
    L.v_beta = w.v;
    L.residue_field = p.residue_field();
    L.radicand_residue = w.ac;
    L.ac_beta = w.ac.pow(-c);
    L.unit_adjust = w.ac.pow(-s);
    TowerPlace np = p;
    np.tw_ = tw;
    np.levels_.push_back(std::move(L));
    np.path_.push_back(0);
    out.push_back(std::move(np));
    return out;
  }

  // Unramified: one chain per irreducible factor of X^q - acW over the
  // residue field.
  const FieldPtr& K = p.residue_field();
  Factorization fac = factor_qth_binomial(q, w.ac);
  long long ef_sum = 0;
  int index = 0;
  for (const auto& [phi, mult] : fac.factors) {
    if (mult != 1)
      throw InternalCheckError("split_place: repeated factor of X^q - W");
    TowerLevel L;
    L.q = q;
    L.e = 1;
    L.f = phi.degree();
    L.v_beta = w.v / q;
    L.radicand_residue = w.ac;
    if (phi.degree() == 1) {
      L.residue_field = K;
      L.ac_beta = -phi.coeff(0);
    } else {
      if (!K->is_finite())
        throw UnsupportedError(
            "split_place: residue extension of degree > 1 over the rationals");
      L.residue_field = Field::extension(K, phi.coeffs());
      L.ac_beta = L.residue_field->generator();
    }
    if (L.ac_beta.pow(q) != L.residue_field->embed_from_subfield(w.ac))
      throw InternalCheckError("split_place: root residue verification failed");
    L.unit_adjust = L.residue_field->one();
    ef_sum += L.f;
    TowerPlace np = p;
    np.tw_ = tw;
    np.levels_.push_back(std::move(L));
    np.path_.push_back(index++);
    out.push_back(std::move(np));
  }
  if (ef_sum != q)
    throw InternalCheckError("split_place: sum of e*f differs from the step degree");
  return out;
}

std::vector<TowerPlace> places_above(const Place& base, const TowerPtr& tw) {
  std::vector<TowerPlace> chains{start_chain(base, tw)};
  for (int k = 0; k < tw->num_levels(); ++k) {
    TowerPtr next = tw->prefix(k + 1);
    std::vector<TowerPlace> grown;
    for (const TowerPlace& p : chains)
      for (TowerPlace& np : split_place(p, next)) grown.push_back(std::move(np));
    chains = std::move(grown);
  }
  return chains;
}

long long ord_tower(const TowerPlace& p, const TowerElement& x) {
  if (!Tower::same(x.tower(), p.tower()) &&
      !Tower::is_prefix(x.tower(), p.tower()))
    throw ValueError("ord_tower: element of an incompatible tower");
  return VacEngine{p}.run(p.num_levels(), x.terms()).v;
}

ValAc val_ac(const TowerPlace& p, const TowerElement& x) {
  if (!Tower::same(x.tower(), p.tower()) &&
      !Tower::is_prefix(x.tower(), p.tower()))
    throw ValueError("val_ac: element of an incompatible tower");
  return VacEngine{p}.run(p.num_levels(), x.terms());
}

FElem tower_residue(const TowerPlace& p, const TowerElement& x) {
  ValAc a = val_ac(p, x);
  if (a.v != 0) throw ValueError("tower_residue: element is not a unit at the chain");
  return a.ac;
}

long long ramification_in_step(const TowerPlace& p, long long q,
                               const TowerElement& W) {
  long long v = ord_tower(p, W);
  if (v == kOrdInfinity) throw ValueError("ramification_in_step: zero radicand");
  return mod_nonneg(v, q) != 0 ? q : 1;
}

bool unramified_by_discriminant(const TowerPlace& p, long long q,
                                const TowerElement& W) {
  long long v = ord_tower(p, W);
  if (v == kOrdInfinity)
    throw ValueError("unramified_by_discriminant: zero radicand");
  // After multiplying W by V^q with v(V) = -v/q (possible exactly when q
  // divides v), the discriminant c*W^(q-1) is a unit at the chain.
  long long residual = mod_nonneg(v, q);
  return mod_nonneg(residual * (q - 1), q) == 0;
}

TowerPlace factor_with_e_not_div_q(const Place& basePlace, const TowerPtr& tw,
                                   long long q) {
  if (tw->degree() % q == 0)
    throw ValueError("factor_with_e_not_div_q: q divides the tower degree");
  std::vector<TowerPlace> chains = places_above(basePlace, tw);
  TowerPlace best = chains.front();
  if (mod_nonneg(best.chain_e(), q) == 0)
    throw InternalCheckError("factor_with_e_not_div_q: no qualifying chain");
  return best;
}

std::string splitting_tree_dump(const Place& base, const TowerPtr& tw) {
  std::ostringstream os;
  os << "base " << base.str() << " through " << tw->str() << "\n";
  std::vector<TowerPlace> chains{start_chain(base, tw)};
  for (int k = 0; k < tw->num_levels(); ++k) {
    TowerPtr next = tw->prefix(k + 1);
    std::vector<TowerPlace> grown;
    for (const TowerPlace& p : chains) {
      for (TowerPlace& np : split_place(p, next)) {
        const TowerLevel& L = np.levels().back();
        os << std::string(2 * (k + 1), ' ') << np.str() << "  v(b)=" << L.v_beta
           << " resfield " << L.residue_field->str() << "\n";
        grown.push_back(std::move(np));
      }
    }
    chains = std::move(grown);
  }
  return os.str();
}

}  // namespace ffval
