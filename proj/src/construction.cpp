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

#include "ffval/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ffval {

namespace {

long long mod_nonneg(long long x, long long q) { return ((x % q) + q) % q; }

// Divisibility with the convention that the order of zero is divisible.
bool div_q(long long v, long long q) {
  return v == kOrdInfinity || mod_nonneg(v, q) == 0;
}

std::string ord_str(long long v) {
  return v == kOrdInfinity ? std::string("inf") : std::to_string(v);
}

// t^q - r + a, the shifted radical argument used throughout.
RatFunc shift_rf(const FieldPtr& F, long long q, const FElem& r, const FElem& a) {
  std::vector<FElem> cs(static_cast<size_t>(q) + 1, F->zero());
  cs[0] = a - r;
  cs[static_cast<size_t>(q)] = F->one();
  return RatFunc::from_poly(Poly(F, std::move(cs)));
}

// R(s) for an element s of a prefix of the chain's tower, as an element of
// the chain's tower.
TowerElement ru_for_chain(const RuSpec& R, const TowerElement& s,
                          const TowerPlace& p) {
  if (s.is_base()) return p.tower()->from_ratfunc(R.apply(s.as_ratfunc()));
  return ru_apply_tower(R, p.tower()->lift(s));
}

// ord at the chain of R(t^q - r + a); a is R's distinguished zero.
long long ord_shift(const TowerPlace& p, const RuSpec& R, const FElem& r) {
  RatFunc s = shift_rf(R.const_field(), R.q(), r, R.a());
  return ord_tower(p, p.tower()->from_ratfunc(R.apply(s)));
}

// Residue of t at the chain, projected into the constant field F; nullopt if
// the chain is a pole of t or the residue lies in a proper extension of F.
std::optional<FElem> residue_of_t_in_F(const TowerPlace& p, const FieldPtr& F) {
  ValAc a = val_ac(p, p.tower()->t());
  if (a.v < 0) return std::nullopt;
  if (a.v > 0) return F->zero();
  FElem x = a.ac;
  while (!Field::same(x.field(), F)) {
    if (x.field()->kind() == Field::Kind::Rationals) return std::nullopt;
    std::optional<FElem> pr = x.field()->project_to_base(x);
    if (!pr) return std::nullopt;
    x = *pr;
  }
  return x;
}

std::string state_dump(const ConstructionState& st) {
  std::ostringstream os;
  os << "stage " << st.i << "\n" << st.tower->str() << "\n";
  for (size_t u = 0; u < st.S.size(); ++u)
    for (const SEntry& e : st.S[u])
      os << "S[" << u + 1 << "] " << e.s.str() << " at " << e.prime.str()
         << "\n";
  size_t from = st.log.size() > 8 ? st.log.size() - 8 : 0;
  for (size_t k = from; k < st.log.size(); ++k)
    os << "log[" << st.log[k].i << "] " << st.log[k].kind << ": "
       << st.log[k].detail << "\n";
  return os.str();
}

// Deterministic DFS over all extensions of a partial chain to the full
// tower, returning the first complete chain accepted by `ok`.  Chains whose
// verification runs into an ambiguous valuation are skipped, never accepted.
template <typename Verify>
std::optional<TowerPlace> extend_chain(const TowerPlace& from,
                                       const TowerPtr& full, Verify&& ok) {
  if (from.num_levels() == full->num_levels()) {
    try {
      if (ok(from)) return from;
    } catch (const AmbiguousValuationError&) {
    }
    return std::nullopt;
  }
  for (TowerPlace& ch : split_place(from, full->prefix(from.num_levels() + 1)))
    if (auto r = extend_chain(ch, full, ok)) return r;
  return std::nullopt;
}

// After the tower has grown, extend every designated chain so that the order
// of R_u(s) stays non-divisible by q_u.
void redesignate_all(ConstructionState& st) {
  for (size_t u = 0; u < st.S.size(); ++u) {
    const RuSpec& R = st.cfg.indices[u].R;
    long long q = st.cfg.indices[u].q();
    for (SEntry& e : st.S[u]) {
      if (e.prime.num_levels() == st.tower->num_levels()) continue;
      auto ok = [&](const TowerPlace& p) {
        return !div_q(ord_tower(p, ru_for_chain(R, e.s, p)), q);
      };
      std::optional<TowerPlace> np = extend_chain(e.prime, st.tower, ok);
      if (!np)
        throw InvariantFailure(
            "no chain extension keeps the designated order non-divisible",
            state_dump(st));
      e.prime = *np;
    }
  }
}

// The generator x_n as an element of the tower, when it is representable.
std::optional<TowerElement> resolve_entry(const EnumEntry& en,
                                          const TowerPtr& tw) {
  if (en.base) return tw->from_ratfunc(*en.base);
  if (en.beta_level >= 0 && en.beta_level < tw->num_levels())
    return tw->beta(en.beta_level);
  return std::nullopt;
}

// The degree-one or degree-q base place attached to a nonzero r: t - r^(1/q)
// when r is a q-th power, else the irreducible t^q - r.
Place place_for_r(const FieldPtr& F, long long q, const FElem& r) {
  if (std::optional<FElem> rho = is_qth_power_const(r, q))
    return Place::finite(Poly(F, {-*rho, F->one()}));
  std::vector<FElem> cs(static_cast<size_t>(q) + 1, F->zero());
  cs[0] = -r;
  cs[static_cast<size_t>(q)] = F->one();
  Poly pi(F, std::move(cs));
  if (!poly_is_irreducible(pi))
    throw InternalCheckError(
        "place_for_r: t^q - r reducible although r is not a q-th power");
  return Place::finite(pi);
}

// A chain above the place attached to r at which the order of the shifted
// R-value is not divisible by q; nullopt exactly when r behaves like a
// member of the exceptional set C.
std::optional<TowerPlace> designate_for_r(const ConstructionState& st,
                                          const RuSpec& R, const FElem& r) {
  Place bp = place_for_r(R.const_field(), R.q(), r);
  auto ok = [&](const TowerPlace& p) {
    return !div_q(ord_shift(p, R, r), R.q());
  };
  return extend_chain(start_chain(bp, st.tower), st.tower, ok);
}

// Base places that could ramify somewhere in the tower: the divisor support
// of every radicand's base-field content.  A superset of the true
// ramification locus, used to steer witness functions away from it.
std::vector<Place> ramification_candidate_places(const TowerPtr& tw) {
  std::vector<Place> out;
  auto add = [&](const RatFunc& g) {
    if (g.is_zero() || g.is_constant()) return;
    Divisor D = divisor_of(g);
    for (const auto& [p, m] : D.terms()) {
      bool seen = false;
      for (const Place& q : out)
        if (q == p) seen = true;
      if (!seen) out.push_back(p);
    }
  };
  for (const KummerStep& s : tw->steps())
    for (const auto& [e, g] : s.W.terms()) add(g);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<FElem>& v, const FElem& x) {
  for (const FElem& y : v)
    if (y == x) return true;
  return false;
}

void push_log(ConstructionState& st, std::string kind, std::string detail) {
  st.log.push_back({st.i, std::move(kind), std::move(detail)});
}

// ---------------------------------------------------------------------------
// The four stage cases.  `n` is the generator index, `active_u` the number of
// family indices processed at this stage.

void stage_adjoin(ConstructionState& ns, const EnumEntry& en) {
  std::optional<TowerElement> x = resolve_entry(en, ns.tower);
  if (x)
    push_log(ns, "adjoin-stage", "generator already in the field; no action");
  else
    push_log(ns, "adjoin-stage",
             "generator outside the represented fragment; stage omitted");
}

void stage_powers(ConstructionState& ns, const EnumEntry& en, int active_u) {
  if (!resolve_entry(en, ns.tower)) {
    push_log(ns, "power-stage", "generator not in the field; no action");
    return;
  }
  for (int u = 1; u <= active_u; ++u) {
    const IndexSpec& idx = ns.cfg.indices[u - 1];
    long long q = idx.q();
    // Re-resolve in the possibly grown tower.
    TowerElement x = *resolve_entry(en, ns.tower);
    TowerElement Rx;
    try {
      Rx = ru_apply_tower(idx.R, x);
    } catch (const ValueError&) {
      push_log(ns, "power-stage",
               "u=" + std::to_string(u) + ": R undefined at the generator");
      continue;
    }
    if (Rx.is_zero()) {
      push_log(ns, "power-stage",
               "u=" + std::to_string(u) + ": R vanishes at the generator");
      continue;
    }
    const SEntry* witness = nullptr;
    for (const SEntry& e : ns.S[u - 1])
      if (!div_q(ord_tower(e.prime, Rx), q)) {
        witness = &e;
        break;
      }
    if (witness) {
      ns.S[u - 1].push_back({x, witness->prime});
      push_log(ns, "power-stage",
               "u=" + std::to_string(u) +
                   ": designated order witness found; generator added to S");
      continue;
    }
    if (std::optional<TowerElement> w = is_qth_power(ns.tower, Rx, q)) {
      push_log(ns, "power-stage",
               "u=" + std::to_string(u) + ": R(x) already a q-th power");
      continue;
    }
    ns.tower = adjoin_root(ns.tower, q, Rx);
    push_log(ns, "power-stage",
             "u=" + std::to_string(u) + ": adjoined q-th root of R(x), q=" +
                 std::to_string(q));
    redesignate_all(ns);
  }
}

void stage_pole(ConstructionState& ns, const EnumEntry& en, int active_u) {
  std::optional<TowerElement> x0 = resolve_entry(en, ns.tower);
  if (!x0) {
    push_log(ns, "pole-stage", "generator not in the field; no action");
    return;
  }
  if (!x0->is_base()) {
    push_log(ns, "pole-stage",
             "generator outside the base-field fragment; stage skipped");
    return;
  }
  RatFunc xr = x0->as_ratfunc();
  if (xr.is_constant()) {
    push_log(ns, "pole-stage", "constant generator; no action");
    return;
  }
  // Smallest pole place of the generator.
  Divisor D = divisor_of(xr);
  std::optional<Place> pole;
  for (const auto& [pl, m] : D.terms())
    if (m < 0) {
      pole = pl;
      break;
    }
  if (!pole) throw InternalCheckError("nonconstant function without a pole");
  const FieldPtr& F = ns.cfg.F;

  for (int u = 1; u <= active_u; ++u) {
    const IndexSpec& idx = ns.cfg.indices[u - 1];
    const RuSpec& R = idx.R;
    long long q = idx.q();

    // The finite exceptional set: r with non-divisible order at the pole
    // chain but divisible order at every designated chain.  Candidates are
    // forced by the residue of t at the pole chain.
    TowerPlace pp = places_above(*pole, ns.tower).front();
    std::vector<FElem> V;
    if (std::optional<FElem> ap = residue_of_t_in_F(pp, F)) {
      std::set<FElem> cand;
      for (const auto& [c, m] : R.roots_signed())
        cand.insert(ap->pow(q) + R.a() - c);
      for (const FElem& r : cand) {
        if (div_q(ord_shift(pp, R, r), q)) continue;
        bool all_div = true;
        for (const SEntry& e : ns.S[u - 1])
          if (!div_q(ord_shift(e.prime, R, r), q)) {
            all_div = false;
            break;
          }
        if (all_div) V.push_back(r);
      }
    }
    for (const FElem& r : V) {
      TowerElement rad =
          ns.tower->from_ratfunc(R.apply(shift_rf(F, q, r, R.a())));
      if (is_qth_power(ns.tower, rad, q)) continue;
      ns.tower = adjoin_root(ns.tower, q, rad);
      push_log(ns, "pole-stage",
               "u=" + std::to_string(u) +
                   ": adjoined root for exceptional shift r=" + r.str());
      redesignate_all(ns);
    }

    // Witness search over the base places underlying the designated chains.
    std::vector<Place> T{*pole};
    for (const SEntry& e : ns.S[u - 1]) {
      const Place& b = e.prime.base_place();
      bool seen = false;
      for (const Place& t : T)
        if (t == b) seen = true;
      if (!seen) T.push_back(b);
    }
    std::sort(T.begin(), T.end());
    // Pin the witness to order zero at every potentially ramified base
    // place, so that a chain with non-divisible order is available for it.
    RatFunc b =
        find_b_canfind(R, xr, T, ramification_candidate_places(ns.tower));

    RatFunc W2 = R.apply(xr).pow(q) + R.apply(b);
    TowerElement W2e = ns.tower->from_ratfunc(W2);
    if (!is_qth_power(ns.tower, W2e, q)) {
      ns.tower = adjoin_root(ns.tower, q, W2e);
      push_log(ns, "pole-stage",
               "u=" + std::to_string(u) + ": adjoined root of R(x)^q + R(b)");
      redesignate_all(ns);
    }

    // Designate a chain for b: scan the support of R(b) (plus T) for a base
    // place with a chain where the order stays non-divisible.
    std::vector<Place> cand = T;
    Divisor Db = divisor_of(R.apply(b));
    for (const auto& [p, m] : Db.terms()) {
      bool seen = false;
      for (const Place& t : cand)
        if (t == p) seen = true;
      if (!seen) cand.push_back(p);
    }
    std::sort(cand.begin(), cand.end());
    auto ok = [&](const TowerPlace& p) {
      return !div_q(ord_tower(p, p.tower()->from_ratfunc(R.apply(b))), q);
    };
    std::optional<TowerPlace> chain;
    for (const Place& p : cand)
      if ((chain = extend_chain(start_chain(p, ns.tower), ns.tower, ok)))
        break;
    if (!chain)
      throw InvariantFailure(
          "no chain certifies the witness b after the pole stage",
          state_dump(ns));
    ns.S[u - 1].push_back({ns.tower->from_ratfunc(b), *chain});
    push_log(ns, "pole-stage",
             "u=" + std::to_string(u) + ": witness b=" + b.str() +
                 " added to S at " + chain->str());
  }
}

void stage_split(ConstructionState& ns, const EnumEntry& en, int active_u) {
  std::optional<TowerElement> x0 = resolve_entry(en, ns.tower);
  if (!x0 || !x0->is_base() || !x0->as_ratfunc().is_constant()) {
    push_log(ns, "split-stage", "generator not a constant; no action");
    return;
  }
  FElem xv = x0->as_ratfunc().constant_value();
  const FieldPtr& F = ns.cfg.F;

  for (int u = 1; u <= active_u; ++u) {
    const IndexSpec& idx = ns.cfg.indices[u - 1];
    const RuSpec& R = idx.R;
    long long q = idx.q();
    if (contains(idx.A, xv)) {
      push_log(ns, "split-stage",
               "u=" + std::to_string(u) + ": generator in the encoded set");
      continue;
    }
    bool done = false;
    for (const FElem& r1 : ns.cfg.witness_stream) {
      if (r1.is_zero()) continue;
      FElem r2 = xv - r1;
      if (r2.is_zero()) continue;
      // The subset formula only constrains pairs with r1 != r2, so a
      // degenerate pair could never witness exclusion.
      if (r2 == r1) continue;
      std::optional<TowerPlace> ch1 = designate_for_r(ns, R, r1);
      if (!ch1) continue;
      std::optional<TowerPlace> ch2 = designate_for_r(ns, R, r2);
      if (!ch2) continue;

      // The finite exclusion set B: shifts with non-divisible order at some
      // relevant chain.  At each chain the residue of t forces the only
      // possible g per root of R; each candidate is verified directly.
      std::set<FElem> B;
      std::vector<const TowerPlace*> P;
      for (const SEntry& e : ns.S[u - 1]) P.push_back(&e.prime);
      P.push_back(&*ch1);
      P.push_back(&*ch2);
      for (const TowerPlace* p : P) {
        std::optional<FElem> ap = residue_of_t_in_F(*p, F);
        if (!ap) continue;
        for (const auto& [c, m] : R.roots_signed()) {
          FElem g = ap->pow(q) + R.a() - c;
          bool in;
          try {
            in = !div_q(ord_shift(*p, R, g), q);
          } catch (const AmbiguousValuationError&) {
            in = true;  // conservative: excluding more candidates is safe
          }
          if (in) B.insert(g);
        }
      }
      bool excluded = false;
      for (const FElem& alpha : idx.A) {
        for (const auto& [c, m] : R.roots_signed())
          for (const FElem& g : B)
            if (r1 == alpha - R.a() + c - g) excluded = true;
        if (excluded) break;
      }
      if (excluded) continue;

      RatFunc s1 = shift_rf(F, q, r1, R.a());
      RatFunc s2 = shift_rf(F, q, r2, R.a());
      ns.S[u - 1].push_back({ns.tower->from_ratfunc(s1), *ch1});
      ns.S[u - 1].push_back({ns.tower->from_ratfunc(s2), *ch2});
      ns.generated_pairs.emplace_back(u, r1, r2);
      push_log(ns, "split-stage",
               "u=" + std::to_string(u) + ": r1=" + r1.str() +
                   " r2=" + r2.str() + " |B|=" + std::to_string(B.size()) +
                   "; two shifted witnesses added to S");
      done = true;
      break;
    }
    if (!done)
      throw ValidationError(
          "the witness stream is exhausted: no candidate r1 satisfies the "
          "exclusion conditions at stage " +
          std::to_string(ns.i) + ", u=" + std::to_string(u));
  }
}

}  // namespace

void validate_config(const ConstructionConfig& cfg) {
  if (!cfg.F) throw ValidationError("the constant field must be set");
  if (cfg.indices.empty())
    throw ValidationError("the index family must not be empty");
  for (size_t u = 0; u < cfg.indices.size(); ++u) {
    const IndexSpec& idx = cfg.indices[u];
    if (!Field::same(idx.R.const_field(), cfg.F))
      throw ValidationError(
          "every family member must be defined over the constant field");
    for (size_t v = u + 1; v < cfg.indices.size(); ++v)
      if (cfg.indices[v].q() == idx.q())
        throw ValidationError("the family primes must be pairwise distinct");
    for (const FElem& a : idx.A)
      if (!Field::same(a.field(), cfg.F))
        throw ValidationError(
            "every encoded-set element must lie in the constant field");
  }
  if (cfg.enumeration.empty())
    throw ValidationError("the element enumeration must not be empty");
  for (const EnumEntry& en : cfg.enumeration) {
    if (en.base.has_value() == (en.beta_level >= 0))
      throw ValidationError(
          "each enumeration entry must be exactly one of: a base-field "
          "element, or a root reference");
    if (en.base && !Field::same(en.base->coeff_field(), cfg.F))
      throw ValidationError(
          "base-field enumeration entries must be defined over the constant "
          "field");
  }
  if (cfg.witness_stream.empty())
    throw ValidationError("the witness stream must not be empty");
  for (const FElem& r : cfg.witness_stream)
    if (!Field::same(r.field(), cfg.F))
      throw ValidationError(
          "witness-stream elements must lie in the constant field");
  for (const auto& [u, r1, r2] : cfg.witness_pairs) {
    if (u < 1 || u > static_cast<int>(cfg.indices.size()))
      throw ValidationError("witness-pair family index out of range");
    if (!Field::same(r1.field(), cfg.F) || !Field::same(r2.field(), cfg.F))
      throw ValidationError(
          "witness-pair elements must lie in the constant field");
  }
  if (cfg.max_steps < 0)
    throw ValidationError("the stage bound must be non-negative");
}

ConstructionState new_state(const ConstructionConfig& cfg) {
  validate_config(cfg);
  ConstructionState st;
  st.cfg = cfg;
  st.i = 0;
  st.tower = Tower::make_base(cfg.F);
  st.S.resize(cfg.indices.size());
  st.log.push_back({0, "init", st.tower->str()});
  return st;
}

ConstructionState step(const ConstructionState& st) {
  ConstructionState ns = st;
  int i = ns.i;
  int n = i / 4;
  int active_u = std::min<int>(n, static_cast<int>(ns.cfg.indices.size()));
  const EnumEntry& en =
      ns.cfg.enumeration[static_cast<size_t>(n) % ns.cfg.enumeration.size()];

  try {
    switch (i % 4) {
      case 0:
        stage_adjoin(ns, en);
        break;
      case 1:
        stage_powers(ns, en, active_u);
        break;
      case 2:
        stage_pole(ns, en, active_u);
        break;
      default:
        stage_split(ns, en, active_u);
        break;
    }
  } catch (const AmbiguousValuationError& e) {
    throw InvariantFailure(
        std::string("valuation ambiguity during stage execution: ") + e.what(),
        state_dump(ns));
  }
  ns.i = i + 1;

  Report odd = check_eq_odd(ns);
  Report even = check_eq_even(ns, ns.cfg.witness_pairs);
  if (!odd.all_pass() || !even.all_pass())
    throw InvariantFailure(
        "standing invariant failed after stage " + std::to_string(i),
        state_dump(ns) + odd.str() + even.str());
  push_log(ns, "invariants",
           "odd-stage " + std::to_string(odd.items.size()) + " checks, " +
               "even-stage " + std::to_string(even.items.size()) +
               " checks: all pass");
  return ns;
}

bool Report::all_pass() const {
  for (const CheckItem& it : items)
    if (!it.pass) return false;
  return true;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const CheckItem& it : items)
    os << (it.pass ? "pass" : "FAIL") << "  " << it.what << "  " << it.detail
       << "\n";
  return os.str();
}

Report check_eq_odd(const ConstructionState& st) {
  Report rep;
  for (size_t u = 0; u < st.S.size(); ++u) {
    const RuSpec& R = st.cfg.indices[u].R;
    long long q = st.cfg.indices[u].q();
    for (const SEntry& e : st.S[u]) {
      std::string what = "odd-stage order u=" + std::to_string(u + 1) +
                         " s=" + e.s.str();
      try {
        long long v = ord_tower(e.prime, ru_for_chain(R, e.s, e.prime));
        rep.items.push_back(
            {what, !div_q(v, q), "ord=" + ord_str(v) + " at " + e.prime.str()});
      } catch (const Error& ex) {
        rep.items.push_back({what, false, ex.what()});
      }
    }
  }
  if (rep.items.empty())
    rep.items.push_back(
        {"odd-stage order", true, "no designated elements (vacuous)"});
  return rep;
}

Report check_eq_even(const ConstructionState& st,
                     const std::vector<std::tuple<int, FElem, FElem>>& pairs) {
  Report rep;
  std::vector<std::tuple<int, FElem, FElem>> all = st.generated_pairs;
  all.insert(all.end(), pairs.begin(), pairs.end());
  for (const auto& [u, r1, r2] : all) {
    std::string what = "even-stage disjunction u=" + std::to_string(u) +
                       " r1=" + r1.str() + " r2=" + r2.str();
    if (u < 1 || u > static_cast<int>(st.cfg.indices.size())) {
      rep.items.push_back({what, false, "family index out of range"});
      continue;
    }
    const IndexSpec& idx = st.cfg.indices[u - 1];
    if (r1.is_zero() || r2.is_zero()) {
      rep.items.push_back({what, true, "zero product: not constrained"});
      continue;
    }
    if (!contains(idx.A, r1 + r2)) {
      rep.items.push_back(
          {what, true, "sum outside the encoded set: not constrained"});
      continue;
    }
    auto all_div_side = [&](const FElem& r) {
      for (const SEntry& e : st.S[u - 1])
        if (!div_q(ord_shift(e.prime, idx.R, r), idx.q())) return false;
      return true;
    };
    try {
      bool pass = all_div_side(r1) || all_div_side(r2);
      rep.items.push_back({what, pass,
                           pass ? "one side divisible at all designated chains"
                                : "both sides have a non-divisible order"});
    } catch (const Error& ex) {
      rep.items.push_back({what, false, ex.what()});
    }
  }
  if (rep.items.empty())
    rep.items.push_back(
        {"even-stage disjunction", true, "no witness pairs (vacuous)"});
  return rep;
}

TowerElement ru_apply_tower(const RuSpec& R, const TowerElement& x) {
  if (!x.valid()) throw ValueError("ru_apply_tower: invalid element");
  if (x.is_base()) return x.tower()->from_ratfunc(R.apply(x.as_ratfunc()));
  const TowerPtr& tw = x.tower();
  TowerElement num = tw->one(), den = tw->one();
  for (const auto& [c, n] : R.zeros())
    num = num * (x - tw->from_const(c)).pow(n);
  for (const auto& [b, j] : R.poles()) {
    TowerElement d = x - tw->from_const(b);
    if (d.is_zero())
      throw ValueError("ru_apply_tower: argument equals a pole root");
    den = den * d.pow(j);
  }
  return num / den;
}

DefFResult eval_def_F(const ConstructionState& st, const TowerElement& a,
                      const std::vector<TowerElement>& fragment) {
  const IndexSpec& idx = st.cfg.indices[0];
  long long q1 = idx.q();
  TowerElement A = st.tower->lift(a);
  TowerElement Raq;
  try {
    Raq = ru_apply_tower(idx.R, A).pow(q1);
  } catch (const ValueError&) {
    return {DefFOutcome::Undetermined, std::nullopt};
  }
  bool saw_undecided = false;
  for (const TowerElement& b : fragment) {
    TowerElement B = st.tower->lift(b);
    TowerElement Rb;
    try {
      Rb = ru_apply_tower(idx.R, B);
    } catch (const ValueError&) {
      continue;  // R undefined at b: the hypothesis cannot be formed
    }
    if (Rb.is_zero()) continue;  // the inverse side is undefined
    try {
      if (!is_qth_power(st.tower, Raq + Rb, q1)) continue;
      if (!is_qth_power(st.tower, Raq + Rb.inverse(), q1)) continue;
      if (!is_qth_power(st.tower, Rb, q1))
        return {DefFOutcome::Rejected, B};
    } catch (const UnsupportedError&) {
      saw_undecided = true;
    }
  }
  return {saw_undecided ? DefFOutcome::Undetermined : DefFOutcome::Accepted,
          std::nullopt};
}

namespace {

enum class SideStatus { InS, InA, Unknown };

SideStatus side_status(const ConstructionState& st, int u, const FElem& r) {
  const IndexSpec& idx = st.cfg.indices[u - 1];
  RatFunc z = shift_rf(st.cfg.F, idx.q(), r, idx.R.a());
  TowerElement ze = st.tower->from_ratfunc(z);
  for (const SEntry& e : st.S[u - 1])
    if (st.tower->lift(e.s) == ze) return SideStatus::InS;
  try {
    if (is_qth_power(st.tower, st.tower->from_ratfunc(idx.R.apply(z)),
                     idx.q()))
      return SideStatus::InA;
  } catch (const UnsupportedError&) {
  }
  return SideStatus::Unknown;
}

}  // namespace

DefAuOutcome eval_def_Au(const ConstructionState& st, int u, const FElem& r,
                         const std::vector<std::pair<FElem, FElem>>& pairs) {
  if (u < 1 || u > static_cast<int>(st.cfg.indices.size()))
    throw ValueError("eval_def_Au: family index out of range");
  std::vector<std::pair<FElem, FElem>> all = pairs;
  for (const auto& [pu, r1, r2] : st.generated_pairs)
    if (pu == u && r1 + r2 == r) all.emplace_back(r1, r2);

  bool any = false, undecided = false;
  for (const auto& [r1, r2] : all) {
    if (r1 == r2 || r1 + r2 != r) continue;
    any = true;
    SideStatus s1 = side_status(st, u, r1);
    SideStatus s2 = side_status(st, u, r2);
    if (s1 == SideStatus::InS && s2 == SideStatus::InS)
      return DefAuOutcome::Out;
    if (s1 != SideStatus::InA && s2 != SideStatus::InA) undecided = true;
  }
  if (!any || undecided) return DefAuOutcome::Undetermined;
  return DefAuOutcome::In;
}

Report properties_report(const ConstructionState& st) {
  Report rep;
  // Part 1: R_u(s) is not a q_u-th power for any designated s.
  for (size_t u = 0; u < st.S.size(); ++u) {
    const IndexSpec& idx = st.cfg.indices[u];
    for (const SEntry& e : st.S[u]) {
      std::string what = "part1 non-power u=" + std::to_string(u + 1) +
                         " s=" + e.s.str();
      try {
        TowerElement Rs = e.s.is_base()
                              ? st.tower->from_ratfunc(idx.R.apply(e.s.as_ratfunc()))
                              : ru_apply_tower(idx.R, st.tower->lift(e.s));
        std::optional<TowerElement> w = is_qth_power(st.tower, Rs, idx.q());
        rep.items.push_back(
            {what, !w, w ? "unexpected root witness found" : "no q-th root"});
      } catch (const Error& ex) {
        rep.items.push_back({what, false, ex.what()});
      }
    }
  }
  if (st.S.empty() ||
      std::all_of(st.S.begin(), st.S.end(),
                  [](const std::vector<SEntry>& v) { return v.empty(); }))
    rep.items.push_back({"part1 non-power", true, "no elements (vacuous)"});

  // Part 2: the constant-field formula rejects no constant, testing against
  // all designated elements of the first family index.
  {
    std::vector<TowerElement> frag;
    for (const SEntry& e : st.S[0]) frag.push_back(st.tower->lift(e.s));
    std::vector<FElem> sample{st.cfg.F->zero(), st.cfg.F->one()};
    for (const FElem& a : st.cfg.indices[0].A) sample.push_back(a);
    for (const FElem& a : sample) {
      DefFResult res = eval_def_F(st, st.tower->from_const(a), frag);
      rep.items.push_back(
          {"part2 constant-formula a=" + a.str(),
           res.outcome != DefFOutcome::Rejected,
           res.outcome == DefFOutcome::Rejected
               ? "rejected with witness " + res.witness->str()
               : (res.outcome == DefFOutcome::Accepted ? "accepted"
                                                       : "undetermined")});
    }
  }

  // Part 3: the subset formula: every generator processed by a split stage
  // (outside the encoded set) reads "out"; encoded elements never read "out".
  {
    std::set<std::pair<int, FElem>> sums;
    for (const auto& [u, r1, r2] : st.generated_pairs)
      sums.insert({u, r1 + r2});
    for (const auto& [u, r] : sums) {
      DefAuOutcome res = eval_def_Au(st, u, r, {});
      bool in_A = contains(st.cfg.indices[u - 1].A, r);
      bool pass = in_A ? res != DefAuOutcome::Out : res == DefAuOutcome::Out;
      rep.items.push_back(
          {"part3 subset-formula u=" + std::to_string(u) + " r=" + r.str(),
           pass,
           res == DefAuOutcome::Out
               ? "out"
               : (res == DefAuOutcome::In ? "in" : "undetermined")});
    }
    if (sums.empty())
      rep.items.push_back({"part3 subset-formula", true, "no processed sums"});
  }

  // Part 4: every adjunction degree is one of the family primes.
  {
    bool pass = true;
    std::string bad;
    for (const KummerStep& s : st.tower->steps()) {
      bool known = false;
      for (const IndexSpec& idx : st.cfg.indices)
        if (idx.q() == s.q) known = true;
      if (!known) {
        pass = false;
        bad = "unexpected step degree " + std::to_string(s.q);
      }
    }
    rep.items.push_back({"part4 adjunction degrees", pass,
                         pass ? std::to_string(st.tower->num_levels()) +
                                    " steps, all from the family"
                              : bad});
  }
  return rep;
}

}  // namespace ffval
